"""Structured check results shared by all verification suites."""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from typing import Any

SCHEMA = "pbrauer.report/1"


@dataclass
class Check:
    id: str
    passed: bool
    detail: Any = None

    def to_obj(self) -> dict:
        obj = {"id": self.id, "passed": bool(self.passed)}
        if self.detail is not None:
            obj["detail"] = _jsonable(self.detail)
        return obj


@dataclass
class Report:
    name: str
    params: dict = field(default_factory=dict)
    checks: list = field(default_factory=list)
    data: dict = field(default_factory=dict)

    def add(self, id: str, passed: bool, detail: Any = None) -> bool:
        self.checks.append(Check(id, bool(passed), detail))
        return bool(passed)

    def extend(self, other: "Report", prefix: str | None = None) -> None:
        pre = f"{prefix or other.name}/"
        for c in other.checks:
            self.checks.append(Check(pre + c.id, c.passed, c.detail))
        if other.data:
            self.data[prefix or other.name] = other.data

    @property
    def passed(self) -> bool:
        return all(c.passed for c in self.checks)

    def failures(self) -> list:
        return [c for c in self.checks if not c.passed]

    def to_obj(self) -> dict:
        return {
            "schema": SCHEMA,
            "name": self.name,
            "params": _jsonable(self.params),
            "passed": self.passed,
            "n_checks": len(self.checks),
            "n_failed": len(self.failures()),
            "checks": [c.to_obj() for c in sorted(self.checks, key=lambda c: c.id)],
            "data": _jsonable(self.data),
        }

    def to_json(self) -> str:
        return json.dumps(self.to_obj(), indent=2, sort_keys=True)

    def summary(self) -> str:
        status = "PASS" if self.passed else "FAIL"
        return f"{self.name}: {status} ({len(self.checks) - len(self.failures())}/{len(self.checks)})"

    def __bool__(self):
        return self.passed


def _jsonable(x):
    from fractions import Fraction

    if isinstance(x, dict):
        return {str(k): _jsonable(v) for k, v in x.items()}
    if isinstance(x, (list, tuple)):
        return [_jsonable(v) for v in x]
    if isinstance(x, bool) or x is None or isinstance(x, (int, float, str)):
        return x
    if isinstance(x, Fraction):
        return str(x)
    return str(x)
