"""Structured pass/fail records for invariant checks."""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from typing import Optional

__all__ = ["CheckRecord", "VerificationReport", "upper", "lower", "close"]


@dataclass(frozen=True)
class CheckRecord:
    """One numerical claim: ``value`` compared with ``bound``.

    ``margin`` is the signed slack in the direction of the claim (positive
    means satisfied with room to spare); the check passes when
    ``margin >= -tolerance``.
    """

    name: str
    inputs: dict
    value: float
    bound: float
    relation: str
    margin: float
    tolerance: float

    @property
    def passed(self) -> bool:
        return not math.isnan(self.margin) and self.margin >= -self.tolerance

    def as_dict(self) -> dict:
        return {
            "name": self.name,
            "inputs": self.inputs,
            "value": self.value,
            "bound": self.bound,
            "relation": self.relation,
            "margin": self.margin,
            "tolerance": self.tolerance,
            "passed": self.passed,
        }


def upper(name, value, bound, tol=0.0, **inputs) -> CheckRecord:
    """Claim value <= bound."""
    value, bound = float(value), float(bound)
    return CheckRecord(name, inputs, value, bound, "<=", bound - value, tol)


def lower(name, value, bound, tol=0.0, **inputs) -> CheckRecord:
    """Claim value >= bound."""
    value, bound = float(value), float(bound)
    return CheckRecord(name, inputs, value, bound, ">=", value - bound, tol)


def close(name, value, target, tol, **inputs) -> CheckRecord:
    """Claim |value - target| <= tol."""
    value, target = float(value), float(target)
    return CheckRecord(name, inputs, value, target, "==", -abs(value - target), tol)


@dataclass
class VerificationReport:
    """Named collection of check records plus free-form findings."""

    name: str
    records: list = field(default_factory=list)
    info: dict = field(default_factory=dict)

    @property
    def passed(self) -> bool:
        return all(r.passed for r in self.records)

    @property
    def failures(self) -> list:
        return [r for r in self.records if not r.passed]

    @property
    def worst(self) -> Optional[CheckRecord]:
        if not self.records:
            return None
        return min(self.records, key=lambda r: r.margin + r.tolerance)

    def add(self, record: CheckRecord) -> CheckRecord:
        self.records.append(record)
        return record

    def extend(self, other: "VerificationReport") -> None:
        self.records.extend(other.records)
        for k, v in other.info.items():
            self.info[f"{other.name}.{k}"] = v

    def summary(self) -> str:
        status = "PASS" if self.passed else "FAIL"
        text = f"{self.name}: {status} ({len(self.records)} checks, {len(self.failures)} failed)"
        w = self.worst
        if w is not None:
            text += f"; tightest {w.name} margin {w.margin:.3g}"
        return text
