"""Check reports shared by every verifier."""
from __future__ import annotations

import time
from contextlib import contextmanager
from dataclasses import dataclass, field
from typing import Any, Iterator


@dataclass
class CheckResult:
    name: str
    anchor: str
    passed: bool
    witness: dict | None = None
    detail: str = ""
    seconds: float = 0.0
    expected: bool = True  # False marks a check that is supposed to fail

    def as_dict(self, timing: bool = True) -> dict:
        d: dict[str, Any] = {
            "check": self.name,
            "anchor": self.anchor,
            "pass": self.passed,
            "witness": self.witness,
        }
        if self.detail:
            d["detail"] = self.detail
        if not self.expected:
            d["expected_to_fail"] = True
        if timing:
            d["seconds"] = round(self.seconds, 4)
        return d


@dataclass
class Report:
    title: str
    results: list[CheckResult] = field(default_factory=list)
    notes: list[str] = field(default_factory=list)

    def add(self, name: str, anchor: str, passed: bool, witness: dict | None = None,
            detail: str = "", seconds: float = 0.0) -> CheckResult:
        r = CheckResult(name, anchor, bool(passed), witness, detail, seconds)
        self.results.append(r)
        return r

    @contextmanager
    def timed(self, name: str, anchor: str) -> Iterator[dict]:
        """Usage: ``with rep.timed(n, a) as slot: slot['ok'] = ...; slot['witness'] = ...``"""
        slot: dict[str, Any] = {"ok": False, "witness": None, "detail": ""}
        t0 = time.perf_counter()
        yield slot
        self.add(name, anchor, slot["ok"], slot["witness"], slot["detail"], time.perf_counter() - t0)

    def extend(self, other: "Report", prefix: str = "") -> "Report":
        for r in other.results:
            self.results.append(
                CheckResult(prefix + r.name, r.anchor, r.passed, r.witness, r.detail, r.seconds, r.expected)
            )
        self.notes.extend(other.notes)
        return self

    @property
    def passed(self) -> bool:
        return all(r.passed for r in self.results)

    def failures(self) -> list[CheckResult]:
        return [r for r in self.results if not r.passed]

    def first_failure(self) -> CheckResult | None:
        for r in self.results:
            if not r.passed:
                return r
        return None

    def get(self, name: str) -> CheckResult | None:
        for r in self.results:
            if r.name == name:
                return r
        return None

    def ok(self, name: str) -> bool:
        r = self.get(name)
        if r is None:
            raise KeyError(name)
        return r.passed

    def as_dict(self, timing: bool = True) -> dict:
        return {
            "title": self.title,
            "pass": self.passed,
            "checks": [r.as_dict(timing) for r in self.results],
            "notes": list(self.notes),
        }

    def summary(self) -> str:
        lines = [f"{self.title}: {'PASS' if self.passed else 'FAIL'}"]
        for r in self.results:
            mark = "ok  " if r.passed else "FAIL"
            w = f"  witness={r.witness}" if (r.witness and not r.passed) else ""
            lines.append(f"  [{mark}] {r.name}{w}")
        return "\n".join(lines)

    def __bool__(self) -> bool:
        return self.passed


class CheckRefused(ValueError):
    """A verifier or constructor refused its input (precondition not met)."""

    def __init__(self, message: str, report: Report | None = None):
        super().__init__(message)
        self.report = report
