"""Verification workflows: the tasks of each command and how they are run."""
