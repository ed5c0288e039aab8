# emacs: -*- mode: python; py-indent-offset: 4; indent-tabs-mode: nil -*-
# vi: set ft=python sts=4 ts=4 sw=4 et:
"""
Check results and the report document.

A :class:`Check` is the outcome of one verification task: a status, the
nonzero residuals (as strings) and whatever derived tables the task wants
to publish. A :class:`Report` gathers the checks of a command in
declaration order. The JSON document is the reference form; the text
rendering is derived from it, and timing lives only under ``timing`` so two
runs of the same command compare equal once that key is dropped.

"""
from __future__ import annotations

import json
import logging
from dataclasses import dataclass, field
from pathlib import Path
from typing import Mapping

import jsonschema
import numpy as np

from ..algebra.lie import Wedge
from ..data import load as load_data
from ..quantum.pbw import Element

PASS, FAIL = "PASS", "FAIL"
SCHEMA_VERSION = "1.0"


def format_key(key) -> str:
    """``("N", "A+")`` -> ``"N,A+"``."""
    if isinstance(key, tuple):
        return ",".join(str(k) for k in key)
    return str(key)


def summarize(value) -> str | None:
    """A string for a nonzero residual, ``None`` for a vanishing one."""
    if isinstance(value, np.ndarray):
        nonzero = [(idx, x) for idx, x in np.ndenumerate(value) if x]
        if not nonzero:
            return None
        (i, j), first = nonzero[0][0][:2], nonzero[0][1]
        return f"{len(nonzero)} nonzero entries, first at {i + 1},{j + 1}: {first}"
    if not value:
        return None
    if isinstance(value, (Element, Wedge)):
        return value.format()
    return str(value)


@dataclass
class Check:
    """Outcome of one verification task."""

    name: str
    status: str = PASS
    residuals: dict = field(default_factory=dict)
    tables: dict = field(default_factory=dict)
    error: str | None = None
    elapsed: float = 0.0

    @property
    def passed(self) -> bool:
        return self.status == PASS

    def to_dict(self) -> dict:
        return {
            "name": self.name,
            "status": self.status,
            "residuals": dict(self.residuals),
            "tables": self.tables,
            "error": self.error,
        }


def residual_check(name: str, residuals: Mapping, tables: dict | None = None) -> Check:
    """PASS iff every residual vanishes; the nonzero ones are kept as strings."""
    summary = {}
    for key, value in residuals.items():
        text = summarize(value)
        if text is not None:
            summary[format_key(key)] = text
    return Check(name, FAIL if summary else PASS, summary, tables or {})


def control_check(name: str, residuals: Mapping, tables: dict | None = None) -> Check:
    """A negative control: PASS iff some residual is nonzero."""
    summary = {}
    for key, value in residuals.items():
        text = summarize(value)
        if text is not None:
            summary[format_key(key)] = text
    check = Check(name, PASS if summary else FAIL, summary, tables or {})
    if not summary:
        check.error = "Negative control produced no residual"
    return check


@dataclass
class Report:
    """All checks of one command."""

    command: str
    inputs: dict
    checks: list = field(default_factory=list)
    total_time: float = 0.0

    @property
    def status(self) -> str:
        return PASS if self.checks and all(c.passed for c in self.checks) else FAIL

    @property
    def return_code(self) -> int:
        return int(self.status != PASS)

    def to_dict(self, timing: bool = True) -> dict:
        document = {
            "schema_version": SCHEMA_VERSION,
            "command": self.command,
            "inputs": self.inputs,
            "status": self.status,
            "checks": [check.to_dict() for check in self.checks],
        }
        if timing:
            document["timing"] = {
                "total": round(self.total_time, 3),
                "checks": {c.name: round(c.elapsed, 3) for c in self.checks},
            }
        return document

    def to_json(self, timing: bool = True) -> str:
        return json.dumps(self.to_dict(timing=timing), indent=2, sort_keys=True)

    def render_text(self) -> str:
        return render_text(self.to_dict())

    def validate(self) -> dict:
        """Check the emitted JSON document against the shipped schema and return it."""
        document = json.loads(self.to_json())
        jsonschema.validate(instance=document, schema=load_schema())
        return document

    def write(self, filename=None, output_format: str = "json") -> str:
        """Render the report and write it to ``filename`` (returned as text otherwise)."""
        self.validate()
        text = self.to_json() if output_format == "json" else self.render_text()
        if filename is not None:
            filename = Path(filename)
            filename.parent.mkdir(parents=True, exist_ok=True)
            filename.write_text(text + "\n")
        return text


def _render_table(value, indent: str) -> list:
    if isinstance(value, Mapping):
        lines = []
        for k in sorted(value, key=str):
            item = value[k]
            if isinstance(item, (Mapping, list)) and item:
                lines.append(f"{indent}{k}:")
                lines.extend(_render_table(item, indent + "  "))
            else:
                lines.append(f"{indent}{k}: {item}")
        return lines
    if isinstance(value, list):
        lines = []
        for item in value:
            if isinstance(item, Mapping):
                lines.append(f"{indent}-")
                lines.extend(_render_table(item, indent + "  "))
            else:
                lines.append(f"{indent}- {item}")
        return lines
    return [f"{indent}{value}"]


def render_text(document: Mapping) -> str:
    """Human-readable form of a report document."""
    lines = [
        f"qoscillator {document['command']}: {document['status']}",
        "inputs: "
        + ", ".join(f"{k}={v}" for k, v in sorted(document["inputs"].items())),
    ]
    for check in document["checks"]:
        lines.append(f"[{check['status']}] {check['name']}")
        if check["error"]:
            lines.append(f"    error: {check['error']}")
        for key, value in sorted(check["residuals"].items()):
            lines.append(f"    residual {key}: {value}")
        if check["tables"]:
            lines.extend(_render_table(check["tables"], "    "))
    if "timing" in document:
        lines.append(f"total time: {document['timing']['total']} s")
    return "\n".join(lines)


def load_schema() -> dict:
    """The JSON schema of the report document, shipped with the package."""
    return load_data.json("report-schema.json")


def log_check(check: Check, logger: logging.Logger | None = None):
    logger = logger or logging.getLogger("qoscillator.checks")
    logger.log(25, "Check <%s> finished: %s (%.2fs)", check.name, check.status, check.elapsed)
    for key, value in check.residuals.items():
        logger.log(15, "  %s residual %s: %s", check.name, key, value)
