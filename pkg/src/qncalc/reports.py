"""Structured check results and the JSON suite report.

The report schema (shipped in ``docs/report-schema.json``) is:

    {version, preset, seed, max_degree, conventions,
     suites: [{name, checks: [{name, paper_ref, status, residual, details, ms}]}],
     overall, counts}

``status`` is one of ``pass``, ``fail``, ``mismatch``, ``skipped``;
``mismatch`` is reserved for printed-equation regression targets where the
engine-derived relation disagrees with the printed one (the derived
correction is attached in ``details``).  ``overall`` is ``pass`` iff no
check failed; mismatches are counted separately and drive the process
exit code unless explicitly allowed.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field

__all__ = ["Check", "Suite", "SuiteReport", "REPORT_VERSION"]

REPORT_VERSION = "1"

_STATUSES = ("pass", "fail", "mismatch", "skipped")


@dataclass
class Check:
    name: str
    paper_ref: str = ""
    status: str = "pass"
    residual: str | None = None
    details: str = ""
    ms: float = 0.0

    def __post_init__(self):
        if self.status not in _STATUSES:
            raise ValueError(f"bad status {self.status!r}")

    def to_json(self):
        return {
            "name": self.name,
            "paper_ref": self.paper_ref,
            "status": self.status,
            "residual": self.residual,
            "details": self.details,
            "ms": round(self.ms, 3),
        }

    @staticmethod
    def passed(name, paper_ref="", details="", ms=0.0):
        return Check(name, paper_ref, "pass", None, details, ms)

    @staticmethod
    def failed(name, paper_ref="", residual=None, details="", ms=0.0):
        return Check(name, paper_ref, "fail", residual, details, ms)

    @staticmethod
    def of(ok: bool, name, paper_ref="", residual=None, details="", ms=0.0):
        return Check(name, paper_ref, "pass" if ok else "fail",
                     None if ok else residual, details, ms)


@dataclass
class Suite:
    name: str
    checks: list = field(default_factory=list)

    def to_json(self):
        return {"name": self.name, "checks": [c.to_json() for c in self.checks]}


@dataclass
class SuiteReport:
    preset: str
    suites: list = field(default_factory=list)
    seed: int = 0
    max_degree: int = 3
    conventions: dict = field(default_factory=dict)
    version: str = REPORT_VERSION

    def all_checks(self):
        for s in self.suites:
            yield from s.checks

    def counts(self):
        out = {s: 0 for s in _STATUSES}
        for c in self.all_checks():
            out[c.status] += 1
        return out

    @property
    def overall(self) -> str:
        return "fail" if any(c.status == "fail" for c in self.all_checks()) else "pass"

    @property
    def has_mismatch(self) -> bool:
        return any(c.status == "mismatch" for c in self.all_checks())

    def exit_code(self, allow_mismatch: bool = False) -> int:
        if self.overall == "fail":
            return 1
        if self.has_mismatch and not allow_mismatch:
            return 1
        return 0

    def to_json(self):
        return {
            "version": self.version,
            "preset": self.preset,
            "seed": self.seed,
            "max_degree": self.max_degree,
            "conventions": self.conventions,
            "suites": [s.to_json() for s in self.suites],
            "overall": self.overall,
            "counts": self.counts(),
        }

    def dumps(self) -> str:
        return json.dumps(self.to_json(), indent=2, sort_keys=False)
