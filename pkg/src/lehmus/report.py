"""Check records and the aggregated verification report (JSON schema)."""

from __future__ import annotations

import json
import math
from dataclasses import dataclass, field
from typing import Any, Optional

from lehmus import __version__

RECORD_FIELDS = ("check_id", "anchor", "pass", "residual", "inputs", "seed")

REPORT_SCHEMA = {
    "$schema": "https://json-schema.org/draft/2020-12/schema",
    "type": "object",
    "required": ["tool_version", "config", "summary", "records"],
    "additionalProperties": False,
    "properties": {
        "tool_version": {"type": "string"},
        "config": {"type": "object"},
        "summary": {
            "type": "object",
            "required": ["total", "passed", "failed"],
            "additionalProperties": False,
            "properties": {
                "total": {"type": "integer", "minimum": 0},
                "passed": {"type": "integer", "minimum": 0},
                "failed": {"type": "integer", "minimum": 0},
            },
        },
        "records": {
            "type": "array",
            "items": {
                "type": "object",
                "required": list(RECORD_FIELDS),
                "additionalProperties": False,
                "properties": {
                    "check_id": {"type": "string"},
                    "anchor": {"type": "string"},
                    "pass": {"type": "boolean"},
                    "residual": {"type": ["number", "string", "null"]},
                    "inputs": {"type": "object"},
                    "seed": {"type": ["integer", "null"]},
                },
            },
        },
    },
}


@dataclass(frozen=True)
class CheckRecord:
    """Outcome of one check.

    ``residual`` is a float for tolerance checks, an exact rational string for
    exact checks that measure a difference, and ``None`` when the check is a
    plain yes/no (exact equality, truth-table agreement).
    """

    check_id: str
    anchor: str
    passed: bool
    residual: Any = None
    inputs: dict = field(default_factory=dict)
    seed: Optional[int] = None

    def to_dict(self) -> dict:
        residual = self.residual
        if isinstance(residual, float) and not math.isfinite(residual):
            residual = repr(residual)
        return {
            "check_id": self.check_id,
            "anchor": self.anchor,
            "pass": self.passed,
            "residual": residual,
            "inputs": self.inputs,
            "seed": self.seed,
        }


@dataclass
class VerificationReport:
    records: list[CheckRecord] = field(default_factory=list)
    config: dict = field(default_factory=dict)
    version: str = __version__

    def add(self, record: CheckRecord):
        self.records.append(record)

    def extend(self, other: "VerificationReport"):
        self.records.extend(other.records)

    @property
    def failures(self) -> list[CheckRecord]:
        return [r for r in self.records if not r.passed]

    @property
    def ok(self) -> bool:
        return not self.failures

    def summary(self) -> dict:
        failed = len(self.failures)
        return {"total": len(self.records), "passed": len(self.records) - failed, "failed": failed}

    def to_dict(self) -> dict:
        return {
            "tool_version": self.version,
            "config": self.config,
            "summary": self.summary(),
            "records": [r.to_dict() for r in self.records],
        }

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), indent=2, sort_keys=True) + "\n"
