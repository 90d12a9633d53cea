"""Pass/fail reports with counterexample witnesses.

Every verifier in the package returns a :class:`VerificationReport`.  Each
named check scans its whole tuple space for the verdict but keeps at most
``cap`` witnesses, in enumeration order.  Scans may be split over threads;
results are reassembled in enumeration order, so the report does not depend
on the thread count.
"""

from __future__ import annotations

from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field
from typing import Callable, Iterable, Optional, Sequence, Union

from .scalars import Scalar

DEFAULT_CAP = 10

# A witness value is either a scalar or a sparse element keyed by tuples of
# basis names (one name per tensor slot).
Value = Union[Scalar, dict]


@dataclass(frozen=True)
class Witness:
    indices: tuple
    lhs: Value
    rhs: Value
    residual: Value

    def to_dict(self) -> dict:
        return {
            "at": list(self.indices),
            "lhs": render(self.lhs),
            "rhs": render(self.rhs),
            "residual": render(self.residual),
        }


@dataclass(frozen=True)
class Check:
    check_id: str
    witnesses: tuple = ()
    failures: int = 0
    note: Optional[str] = None

    @property
    def passed(self) -> bool:
        return self.failures == 0

    @property
    def status(self) -> str:
        return "pass" if self.passed else "fail"

    def to_dict(self) -> dict:
        out = {"id": self.check_id, "status": self.status, "failures": self.failures}
        if self.note:
            out["note"] = self.note
        out["witnesses"] = [w.to_dict() for w in self.witnesses]
        return out


@dataclass
class VerificationReport:
    checks: list = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return all(c.passed for c in self.checks)

    def __bool__(self) -> bool:
        return self.passed

    def __getitem__(self, check_id: str) -> Check:
        for c in self.checks:
            if c.check_id == check_id:
                return c
        raise KeyError(check_id)

    def __contains__(self, check_id: str) -> bool:
        return any(c.check_id == check_id for c in self.checks)

    def failed(self) -> list:
        return [c.check_id for c in self.checks if not c.passed]

    def extend(self, other: "VerificationReport", prefix: str = "") -> "VerificationReport":
        for c in other.checks:
            self.checks.append(
                Check(prefix + c.check_id, c.witnesses, c.failures, c.note) if prefix else c
            )
        return self

    def to_dict(self) -> dict:
        return {
            "verdict": "pass" if self.passed else "fail",
            "checks": [c.to_dict() for c in self.checks],
        }

    def summary(self) -> str:
        lines = []
        for c in self.checks:
            line = f"{c.status.upper():4}  {c.check_id}"
            if c.note:
                line += f"  [{c.note}]"
            if c.failures:
                line += f"  ({c.failures} failing)"
            lines.append(line)
            for w in c.witnesses:
                lines.append(f"        at {tuple(w.indices)}: residual {format_value(w.residual)}")
        return "\n".join(lines)


def render(value: Value):
    if isinstance(value, Scalar):
        return str(value)
    return [[*key, str(c)] for key, c in value.items()]


def format_value(value: Value) -> str:
    if isinstance(value, Scalar):
        return str(value)
    if not value:
        return "0"
    terms = []
    for key, c in value.items():
        terms.append(f"{c}*{'⊗'.join(key)}")
    return " + ".join(terms)


def _chunks(items: Sequence, n: int) -> list:
    size, extra = divmod(len(items), n)
    out, start = [], 0
    for k in range(n):
        stop = start + size + (1 if k < extra else 0)
        out.append(items[start:stop])
        start = stop
    return out


def scan(
    check_id: str,
    items: Iterable,
    evaluate: Callable[..., Optional[Witness]],
    cap: int = DEFAULT_CAP,
    workers: int = 1,
    note: Optional[str] = None,
) -> Check:
    """Run ``evaluate`` on every item; collect witnesses in item order."""
    if cap < 1:
        raise ValueError("witness cap must be at least 1")
    items = list(items)
    if workers > 1 and len(items) > 1:
        pieces = _chunks(items, min(workers, len(items)))
        with ThreadPoolExecutor(max_workers=len(pieces)) as pool:
            parts = pool.map(lambda piece: [evaluate(*it) for it in piece], pieces)
            results = [w for part in parts for w in part]
    else:
        results = [evaluate(*it) for it in items]
    failures = [w for w in results if w is not None]
    return Check(check_id, tuple(failures[:cap]), len(failures), note)


def single(check_id: str, witnesses: Sequence[Witness], cap: int = DEFAULT_CAP, note=None) -> Check:
    return Check(check_id, tuple(witnesses[:cap]), len(witnesses), note)
