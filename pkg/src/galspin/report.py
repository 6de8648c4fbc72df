"""Check reports shared by every verification suite."""
from __future__ import annotations

import time
from dataclasses import dataclass, field

PASS, FAIL, SKIP = "pass", "fail", "skip"


@dataclass
class CheckRow:
    check_name: str
    paper_ref: str
    status: str
    witness: str | None = None
    timing_ms: float | None = None

    def to_dict(self, timings: bool = False) -> dict:
        d = {"check_name": self.check_name, "paper_ref": self.paper_ref, "status": self.status}
        if self.witness is not None:
            d["witness"] = self.witness
        d["timing_ms"] = round(self.timing_ms, 3) if (timings and self.timing_ms is not None) else None
        return d


@dataclass
class CheckReport:
    title: str
    rows: list = field(default_factory=list)

    def add(self, name: str, ref: str, ok: bool, witness=None, timing_ms=None) -> CheckRow:
        row = CheckRow(name, ref, PASS if ok else FAIL,
                       None if witness is None else str(witness), timing_ms)
        self.rows.append(row)
        return row

    def skip(self, name: str, ref: str, reason: str) -> CheckRow:
        row = CheckRow(name, ref, SKIP, reason)
        self.rows.append(row)
        return row

    def check(self, name: str, ref: str, fn) -> CheckRow:
        """Run ``fn``; it returns a bool or ``(bool, witness)``.

        An exception inside ``fn`` becomes a failing row carrying the message.
        """
        t0 = time.perf_counter()
        try:
            out = fn()
        except Exception as exc:  # a crashing check is a failed check
            ok, witness = False, f"{type(exc).__name__}: {exc}"
        else:
            ok, witness = out if isinstance(out, tuple) else (out, None)
        return self.add(name, ref, bool(ok), witness, (time.perf_counter() - t0) * 1000.0)

    def extend(self, other: "CheckReport", prefix: str = "") -> None:
        for r in other.rows:
            self.rows.append(CheckRow(prefix + r.check_name, r.paper_ref, r.status, r.witness, r.timing_ms))

    @property
    def passed(self) -> int:
        return sum(r.status == PASS for r in self.rows)

    @property
    def failed(self) -> int:
        return sum(r.status == FAIL for r in self.rows)

    @property
    def skipped(self) -> int:
        return sum(r.status == SKIP for r in self.rows)

    def ok(self) -> bool:
        return self.failed == 0

    def row(self, name: str) -> CheckRow:
        for r in self.rows:
            if r.check_name == name:
                return r
        raise KeyError(name)

    def failures(self) -> list:
        return [r for r in self.rows if r.status == FAIL]

    def __str__(self):
        lines = [f"{self.title}: {self.passed} passed, {self.failed} failed, {self.skipped} skipped"]
        for r in self.rows:
            lines.append(f"  {r.status.upper():4} {r.check_name}" + (f"  [{r.witness}]" if r.witness else ""))
        return "\n".join(lines)


def zero_witness(x, what: str = "residual") -> tuple:
    """(True, None) when x is zero, else (False, description of x)."""
    from galspin.exact.matrix import Matrix

    if isinstance(x, Matrix):
        nz = x.first_nonzero()
        if nz is None:
            return True, None
        i, j, v = nz
        return False, f"{what} entry ({i},{j}) = {v}"
    if hasattr(x, "is_zero"):
        if x.is_zero():
            return True, None
        return False, f"{what} = {x}"
    if not x:
        return True, None
    return False, f"{what} = {x}"


def equal_witness(a, b, what: str = "difference") -> tuple:
    return zero_witness(a - b, what)
