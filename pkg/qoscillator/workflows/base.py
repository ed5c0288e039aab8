# emacs: -*- mode: python; py-indent-offset: 4; indent-tabs-mode: nil -*-
# vi: set ft=python sts=4 ts=4 sw=4 et:
"""
qoscillator base workflow
^^^^^^^^^^^^^^^^^^^^^^^^^

Every command is a list of independent :class:`Task` objects, each naming a
function of :mod:`qoscillator.workflows.checks`. :func:`init_qoscillator_wf`
wraps every task in a Nipype ``Function`` node, so the configured plugin
decides how many run at once; :func:`run_workflow` hands the checks back in
declaration order.

.. autofunction:: init_tasks
.. autofunction:: init_qoscillator_wf
.. autofunction:: run_workflow

"""
from __future__ import annotations

import logging
import re
from dataclasses import dataclass, field
from time import perf_counter
from typing import Callable

from nipype.interfaces import utility as niu
from nipype.pipeline import engine as pe
from packaging.version import Version

from .. import config
from ..reports.core import FAIL, Check, log_check
from . import checks

LOGGER = logging.getLogger("qoscillator.checks")

COMMANDS = (
    "classify",
    "verify-hopf",
    "verify-rmatrix",
    "verify-frt",
    "verify-sklyanin",
    "verify-boson",
    "verify-all",
)


@dataclass(frozen=True)
class Task:
    """One verification task: ``checks.<check>(name, **kwargs)`` returns a :class:`Check`."""

    name: str
    check: str | Callable
    kwargs: dict = field(default_factory=dict)

    @property
    def func(self) -> Callable:
        return self.check if callable(self.check) else getattr(checks, self.check)

    @property
    def slug(self) -> str:
        return re.sub(r"\W+", "_", self.name).strip("_").lower()


def run_task(task: Task) -> Check:
    """Run a task, turning any exception into a failed check."""
    start = perf_counter()
    try:
        check = task.func(task.name, **task.kwargs)
    except Exception as exc:
        LOGGER.critical("Check <%s> raised %s: %s", task.name, type(exc).__name__, exc)
        check = Check(task.name, FAIL, error=f"{type(exc).__name__}: {exc}")
    check.name = task.name
    check.elapsed = perf_counter() - start
    log_check(check, LOGGER)
    return check


def _run_check(task_name, check, kwargs):
    """Node body, recreated from source by Nipype."""
    from qoscillator.workflows.base import Task, run_task

    return run_task(Task(task_name, check, kwargs))


def init_qoscillator_wf(tasks=None) -> pe.Workflow:
    """
    Build the workflow running ``tasks`` (those of the configured command by default).

    Nodes are not connected, and their names carry the task index so that
    sorting them restores the declaration order.
    """
    tasks = init_tasks() if tasks is None else tasks
    ver = Version(config.environment.version)
    workflow = pe.Workflow(name=f"qoscillator_{ver.major}_{ver.minor}_wf")
    workflow.base_dir = str(config.execution.run_dir())

    nodes = []
    for index, task in enumerate(tasks):
        if callable(task.check):
            raise TypeError(f"Task <{task.name}> must name its check function")
        node = pe.Node(
            niu.Function(function=_run_check, output_names=["check"]),
            name=f"check_{index:03d}_{task.slug}",
        )
        node.inputs.task_name = task.name
        node.inputs.check = task.check
        node.inputs.kwargs = dict(task.kwargs)
        nodes.append(node)
    workflow.add_nodes(nodes)
    return workflow


def run_workflow(workflow: pe.Workflow, plugin: dict | None = None) -> list:
    """Execute ``workflow`` with ``plugin`` (serially by default) and collect its checks."""
    graph = workflow.run(**(plugin or {"plugin": "Linear"}))
    results = {node.name: node.result.outputs.check for node in graph.nodes()}
    return [results[name] for name in sorted(results)]


def _classification_tasks() -> list:
    if config.execution.algebra_file is not None:
        return [
            Task(
                "classification of the input algebra",
                "classify_file",
                {"algebra_file": str(config.execution.algebra_file)},
            )
        ]
    return [
        Task("cocycle space", "cocycle_space"),
        Task("co-Jacobi variety", "cojacobi_variety"),
        Task("branches", "branches"),
        Task("automorphisms", "automorphisms"),
        Task("standard and Jordanian bialgebras", "named_structures"),
    ]


def _hopf_tasks(order: int) -> list:
    verification = config.verification
    seed = config.seeds.numpy
    return [
        Task(
            "PBW engine confluence",
            "engine_confluence",
            {
                "order": order,
                "words": verification.confluence_words,
                "length": verification.confluence_length,
                "seed": seed,
            },
        ),
        Task(
            "PBW engine termination",
            "engine_termination",
            {
                "order": order,
                "words": verification.termination_words,
                "length": verification.termination_length,
                "seed": seed,
            },
        ),
        Task(
            "PBW engine associativity",
            "engine_associativity",
            {"order": order, "cases": verification.random_cases, "seed": seed},
        ),
        Task("exponential series", "engine_series", {"order": order}),
        Task("coproduct homomorphism", "hopf_homomorphism", {"order": order}),
        Task("coassociativity", "hopf_coassociativity", {"order": order}),
        Task("counit and antipode", "hopf_antipode", {"order": order}),
        Task("primitive lowering control", "hopf_primitive_control", {"order": order}),
        Task("quantum Casimir", "hopf_casimir", {"order": order}),
        Task("deformation-parameter covariance", "hopf_covariance", {"order": order}),
        Task("classical limits", "hopf_classical_limits", {"order": order}),
        Task("first-order cocommutator", "hopf_first_order", {"order": order}),
    ]


def _rmatrix_tasks(order: int) -> list:
    return [
        Task("universal R", "rmatrix_universal", {"order": order}),
        Task("intertwining", "rmatrix_intertwining", {"order": order}),
        Task("R-matrix controls", "rmatrix_controls", {"order": order}),
        Task("matrix representation", "rmatrix_matrices", {"order": order}),
        Task("functoriality", "rmatrix_functoriality", {"order": order}),
    ]


def _frt_tasks() -> list:
    verification = config.verification
    return [
        Task("RTT relations", "frt_relations"),
        Task("commuting coordinates control", "frt_commuting_control"),
        Task("coordinate Hopf structure", "frt_coordinate_hopf"),
        Task("classical coordinates", "frt_classical_coordinates"),
        Task(
            "coordinate rewriting confluence",
            "frt_confluence",
            {
                "words": verification.confluence_words,
                "length": verification.confluence_length,
                "seed": config.seeds.numpy,
            },
        ),
    ]


def _sklyanin_tasks() -> list:
    return [
        Task("Poisson structure", "poisson_structure"),
        Task("Sklyanin bracket", "sklyanin_bracket"),
        Task("quantization consistency", "quantization"),
    ]


def _boson_tasks(order: int) -> list:
    verification = config.verification
    return [
        Task("boson realization", "boson_realization", {"order": order}),
        Task("Casimir under the realization", "boson_casimir", {"order": order}),
        Task(
            "Weyl engine",
            "weyl_engine",
            {
                "order": order,
                "words": verification.confluence_words,
                "length": verification.confluence_length,
                "seed": config.seeds.numpy,
            },
        ),
    ]


def init_tasks(command: str | None = None) -> list:
    """Build the tasks of ``command`` (``config.execution.command`` by default)."""
    command = command or config.execution.command
    order = config.execution.order
    builders = {
        "classify": _classification_tasks,
        "verify-hopf": lambda: _hopf_tasks(order),
        "verify-rmatrix": lambda: _rmatrix_tasks(order),
        "verify-frt": _frt_tasks,
        "verify-sklyanin": _sklyanin_tasks,
        "verify-boson": lambda: _boson_tasks(order),
    }
    if command == "verify-all":
        return [task for name in COMMANDS[:-1] for task in builders[name]()]
    if command not in builders:
        raise ValueError(f"Unknown command {command!r}")
    return builders[command]()


def workflow_inputs() -> dict:
    """The settings a report depends on."""
    execution = config.execution
    algebra = execution.algebra_file
    return {
        "order": execution.order,
        "algebra": str(algebra) if algebra is not None else execution.preset,
        "seed": config.seeds.master,
    }
