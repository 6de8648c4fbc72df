"""Named verification suites and the report document they produce."""
from __future__ import annotations

import json
from dataclasses import dataclass, field
from datetime import datetime, timezone

from galspin.errors import UnknownSuite
from galspin.exact import symbols
from galspin.report import FAIL, PASS, SKIP, CheckReport, CheckRow

SUITES = ("clifford", "galilei", "spin", "transforms", "reduction", "fock")


@dataclass
class ReportDocument:
    suite_name: str
    rows: list
    timestamp: str = field(default_factory=lambda: datetime.now(timezone.utc).isoformat(timespec="seconds"))

    @property
    def summary(self) -> dict:
        return {
            "passed": sum(r.status == PASS for r in self.rows),
            "failed": sum(r.status == FAIL for r in self.rows),
            "skipped": sum(r.status == SKIP for r in self.rows),
        }

    def ok(self) -> bool:
        return self.summary["failed"] == 0

    def exit_code(self) -> int:
        return 0 if self.ok() else 1

    def to_dict(self, timings: bool = False) -> dict:
        return {
            "suite_name": self.suite_name,
            "timestamp": self.timestamp,
            "rows": [r.to_dict(timings) for r in self.rows],
            "summary": self.summary,
        }

    def to_json(self, timings: bool = False) -> str:
        return json.dumps(self.to_dict(timings), indent=2, ensure_ascii=False) + "\n"

    def to_text(self, timings: bool = False) -> str:
        s = self.summary
        lines = [f"suite {self.suite_name}: {s['passed']} passed, {s['failed']} failed, {s['skipped']} skipped"]
        for r in self.rows:
            line = f"{r.status.upper():4}  {r.check_name}  [{r.paper_ref}]"
            if timings and r.timing_ms is not None:
                line += f"  {r.timing_ms:.1f} ms"
            if r.witness:
                line += f"  -- {r.witness}"
            lines.append(line)
        return "\n".join(lines) + "\n"

    @classmethod
    def from_dict(cls, d: dict) -> "ReportDocument":
        rows = [CheckRow(r["check_name"], r["paper_ref"], r["status"], r.get("witness"), r.get("timing_ms"))
                for r in d["rows"]]
        return cls(d["suite_name"], rows, d["timestamp"])


def emit_report(doc: ReportDocument, fmt: str = "text", timings: bool = False) -> bytes:
    if fmt == "json":
        return doc.to_json(timings).encode("utf-8")
    if fmt == "text":
        return doc.to_text(timings).encode("utf-8")
    raise ValueError(f"unknown format {fmt!r}")


def _collect(reports) -> list:
    rows = []
    for rep in reports:
        for r in rep.rows:
            rows.append(CheckRow(f"{rep.title}: {r.check_name}", r.paper_ref, r.status, r.witness, r.timing_ms))
    return rows


def _clifford(seed, samples):
    from galspin.clifford import verify_clifford_relations, verify_derived_matrices
    return [verify_clifford_relations(), verify_derived_matrices()]


def _galilei(seed, samples):
    from galspin import galilei as g
    gs = g.build_generators()
    pl = g.build_pauli_lubanski(gs)
    return [g.verify_conventions(), g.verify_galilei_algebra(gs), g.verify_pauli_lubanski(gs, pl),
            g.verify_casimirs(gs, pl, g.build_casimirs(gs, pl))]


def _spin(seed, samples):
    from galspin import galilei as g
    from galspin import spin as s
    from galspin.exact import INV_SQRT2, ONE
    gs = g.build_generators()
    pl = g.build_pauli_lubanski(gs)
    so = s.build_spin_operator(gs, pl)
    return [s.verify_spin_coefficients(gs, pl), s.verify_spin_operator(gs, pl, so), s.verify_rest_frame(gs, pl),
            s.dirac_spin_relation(gs, pl, so), s.nonconservation_witness(ONE, INV_SQRT2).report]


def _transforms(seed, samples):
    from galspin import transforms as t
    return [t.verify_gamma_conjugation(), t.verify_rotations(), t.verify_mass_kinematics(samples, seed)]


def _reduction(seed, samples):
    from galspin import reduction as r
    reps = []
    for sector in ("plus", "minus"):
        rf = r.reduce_field(sector, 1, 1)
        reps += [r.verify_reduced_field(rf), r.levy_leblond_split(rf)]
    reps.append(r.levy_leblond_split(r.reduce_field("plus", 2, "3/2")))
    us = r.verify_u_spinors(r.build_u_spinors((1, 1, 1), 1, 1))
    ok, w = r.rest_spinor_check(1, 1)
    us.add("general formula reproduces the rest spinors", r.REF_USPINOR, ok, w)
    reps.append(us)
    for p, k in (((3, 4, 0), "5/2"), ((2, -1, 3), 1), ((1, 2, 2), 1)):
        rep = r.verify_spin_matrices(r.spin_matrices(p, 1, k))
        rep.title = f"spin matrices at p={p}, k={k}"
        reps.append(rep)
    sym = r.verify_spin_matrices(r.spin_matrices(symbols("q1 q2 q3"), 1, 1))
    sym.title = "spin matrices at symbolic p"
    reps.append(sym)
    for p, k in (((3, 4, 0), "5/2"), ((0, 0, 3), 1)):
        st = r.spin_states(p, 1, k)
        st.report.title = f"spin states at p={p}, k={k}"
        st.report.add("f1 and f2 values", r.REF_STATES, True, f"f1 = {st.f1}, f2 = {st.f2}")
        reps.append(st.report)
    reps.append(r.verify_alignment((3, 4, 5), 1, 1))
    reps.append(r.verify_onshell_samples(samples, seed))
    return reps


def _fock(seed, samples):
    from galspin.fock import fock_report
    from galspin.sampling import make_rng, vector
    reps = []
    rng = make_rng(seed)
    grids = [([(1, 0, 0), (0, 1, 0)], 1, 1), ([(3, 4, 0)], 1, "5/2"), ([tuple(vector(rng)) for _ in range(2)], 1, 1)]
    for grid, m, k in grids:
        rep = fock_report(grid, m, k)
        rep.title = f"Fock grid {[tuple(str(x) for x in p) for p in grid]}, m={m}, k={k}"
        reps.append(rep)
    return reps


_RUNNERS = {
    "clifford": _clifford,
    "galilei": _galilei,
    "spin": _spin,
    "transforms": _transforms,
    "reduction": _reduction,
    "fock": _fock,
}


def suite_reports(name: str, seed: int = 0, samples: int = 5) -> list:
    if name not in _RUNNERS:
        raise UnknownSuite(f"unknown suite {name!r}; choose from {', '.join(SUITES + ('all',))}")
    return _RUNNERS[name](seed, samples)


def run_suite(name: str, seed: int = 0, samples: int = 5) -> ReportDocument:
    """Run a named suite (or ``all``); rows come back sorted by check name."""
    if samples < 1:
        raise ValueError("samples must be at least 1")
    if name == "all":
        rows = []
        for sub in SUITES:
            rows += [CheckRow(f"{sub}/{r.check_name}", r.paper_ref, r.status, r.witness, r.timing_ms)
                     for r in _collect(suite_reports(sub, seed, samples))]
    else:
        rows = _collect(suite_reports(name, seed, samples))
    rows.sort(key=lambda r: r.check_name)
    return ReportDocument(name, rows)


def report_document(title: str, reports) -> ReportDocument:
    """Wrap ad-hoc check reports (e.g. from a CLI demo) in a document."""
    rows = _collect(reports if not isinstance(reports, CheckReport) else [reports])
    rows.sort(key=lambda r: r.check_name)
    return ReportDocument(title, rows)
