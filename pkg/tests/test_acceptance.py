"""The ten acceptance criteria, checked exactly.

Each test records one ``PASS criterion N: ...`` or ``FAIL criterion N: ...``
line; pytest prints them in an "acceptance criteria" section at the end of
the run.
"""
import json
import time
from itertools import combinations_with_replacement

import pytest

from conftest import ACCEPTANCE_LINES
from galspin import clifford as cl
from galspin import fock as fk
from galspin import galilei as g
from galspin import reduction as red
from galspin import spin as sp
from galspin import transforms as tr
from galspin.exact import INV_SQRT2, ONE, ExactScalar, Matrix, symbols
from galspin.report import PASS
from galspin.suites import run_suite

GS = g.build_generators()
PL = g.build_pauli_lubanski(GS)
I4 = Matrix.identity(4)


def announce(n, title, failures):
    line = f"{'PASS' if not failures else 'FAIL'} criterion {n}: {title}"
    if failures:
        line += "  (" + "; ".join(failures[:5]) + ")"
    ACCEPTANCE_LINES.append(line)
    return line


def bad_rows(*reports):
    out = []
    for rep in reports:
        out += [f"{rep.title}: {r.check_name}: {r.witness}" for r in rep.failures()]
    return out


def require_rows(rep, names):
    """Named rows must exist and pass."""
    have = {r.check_name: r.status for r in rep.rows}
    return [f"{rep.title}: {n} is {have.get(n, 'missing')}" for n in names if have.get(n) != PASS]


def criterion(n, title):
    def wrap(fn):
        def test():
            failures = fn()
            announce(n, title, failures)
            assert not failures, failures
        test.__name__ = fn.__name__
        return test
    return wrap


@criterion(1, "Clifford relations and nilpotent matrices, exact, under 1 s")
def test_criterion_01_clifford():
    t0 = time.perf_counter()
    rel = cl.verify_clifford_relations()
    der = cl.verify_derived_matrices()
    elapsed = time.perf_counter() - t0
    fails = bad_rows(rel, der)
    names = [f"anticommutator gamma{m} gamma{n}" for m, n in combinations_with_replacement(range(1, 6), 2)]
    assert len(names) == 15
    fails += require_rows(rel, names)
    fails += require_rows(der, ["gamma4 squared vanishes", "gamma5 squared vanishes", "Gamma squared vanishes"]
                          + [f"F^{a}44 vanishes" for a in (1, 2, 3)])
    # direct recomputation from the matrices themselves
    for m, n in combinations_with_replacement(range(1, 6), 2):
        if cl.GAMMA[m].anticommutator(cl.GAMMA[n]) != I4.scale(2 * cl.METRIC(m, n)):
            fails.append(f"direct anticommutator {m}{n}")
    for mu in (4, 5):
        if not (cl.GAMMA[mu] * cl.GAMMA[mu]).is_zero():
            fails.append(f"direct gamma{mu}^2")
    if elapsed >= 1.0:
        fails.append(f"took {elapsed:.2f} s")
    return fails


@criterion(2, "Galilei algebra, extension table, Pauli-Lubanski relations and Casimirs, under 30 s")
def test_criterion_02_galilei():
    t0 = time.perf_counter()
    gs = g.build_generators()
    pl = g.build_pauli_lubanski(gs)
    alg = g.verify_galilei_algebra(gs)
    pauli = g.verify_pauli_lubanski(gs, pl)
    cas = g.verify_casimirs(gs, pl, g.build_casimirs(gs, pl))
    elapsed = time.perf_counter() - t0
    fails = bad_rows(alg, pauli, cas)
    gens = ["P^1", "P^2", "P^3", "P_4", "P_5", "J^1", "J^2", "J^3", "K^1", "K^2", "K^3"]
    ext = ["Kt^1", "Kt^2", "Kt^3", "Qt"]
    order = gens + ext
    pairs = [f"[{order[i]},{order[j]}]" for i in range(len(order)) for j in range(i + 1, len(order))]
    fails += require_rows(alg, pairs)
    fails += require_rows(cas, ["P^mu W_5mu vanishes"]
                          + [f"[P^{s},W_5{m}] vanishes" for s in range(1, 6) for m in range(1, 6)]
                          + [f"[W_5{m},W_5{n}] closes on W_5 P" for m in range(1, 6) for n in range(m + 1, 6)]
                          + [f"[I{k},{x}] vanishes" for k in (1, 2, 3) for x in gens])
    if elapsed >= 30.0:
        fails.append(f"took {elapsed:.1f} s")
    return fails


@criterion(3, "spin coefficient branches, rest-frame singularity and spin commutators")
def test_criterion_03_spin():
    so = sp.build_spin_operator(GS, PL)
    coef = sp.verify_spin_coefficients(GS, PL)
    op = sp.verify_spin_operator(GS, PL, so)
    fails = bad_rows(coef, op)
    fails += require_rows(coef, [f"branch {b} solves the {w} equation" for b in ("B_nonzero", "B_zero")
                                 for w in ("first", "second")] + ["branch B_nonzero singular at rest"])
    names = []
    for a in (1, 2, 3):
        names += [f"[S^{a},P^{mu}] vanishes" for mu in range(1, 6)]
        for b in (1, 2, 3):
            names += [f"[J^{a},S^{b}] = i eps S", f"[K^{a},S^{b}] vanishes"]
            if a < b:
                names.append(f"[S^{a},S^{b}] = i eps S")
    fails += require_rows(op, names)
    # the singular branch: its B has the squared momentum as denominator
    by = {s.branch: s for s in sp.solve_spin_coefficients()}
    if by["B_nonzero"].B.den.evaluate({"p1": 0, "p2": 0, "p3": 0}):
        fails.append("branch B_nonzero denominator does not vanish at rest")
    if not by["B_nonzero"].singular_at_rest or by["B_zero"].singular_at_rest:
        fails.append("singularity flags")
    return fails


@criterion(4, "rest-frame boost for symbolic momentum")
def test_criterion_04_rest_frame():
    rep = sp.verify_rest_frame(GS, PL)
    return bad_rows(rep) + require_rows(rep, ["P_1' vanishes", "P_2' vanishes", "P_3' vanishes",
                                              "P_4' is the rest energy", "W_54' vanishes",
                                              "W_51' = W_51", "W_52' = W_52", "W_53' = W_53"])


@criterion(5, "Lambda conjugation of gamma matrices and unipotent boosts, symbolic parameters")
def test_criterion_05_lambda():
    rep = tr.verify_gamma_conjugation()
    names = []
    for label, near in (("Galilean", 4), ("non-Galilean", 5)):
        names += [f"{label} gamma{a}" for a in (1, 2, 3)]
        names += [f"{label} gamma{near} fixed", f"{label} Lambda unipotent"]
    names += ["Galilean gamma5", "non-Galilean gamma4"]
    fails = bad_rows(rep) + require_rows(rep, names)
    b = symbols("b1 b2 b3")
    L = tr.galilean_boost_matrix(b)
    if not ((L - I4) * (L - I4)).is_zero():
        fails.append("direct Galilean unipotency")
    return fails


@criterion(6, "mass kinematics invariant and closed form over 100 random inputs")
def test_criterion_06_mass():
    rep = tr.verify_mass_kinematics(100, 0)
    fails = bad_rows(rep) + require_rows(rep, ["m' m0' = m m0 (100 random inputs)",
                                               "closed form for m0' agrees with the boost (100 random inputs)"])
    ks = tr.KinematicState.from_cbar(1, 1, 1, (1, 0, 0))
    if tr.mass_kinematics(ks, (1, 0, 0)).m != ExactScalar("1/2"):
        fails.append("m' for the unit example")
    return fails


@criterion(7, "reduction to the Levy-Leblond system, u-spinors and spin matrices")
def test_criterion_07_reduction():
    rf = red.reduce_field("plus", 1, 1)
    field = red.verify_reduced_field(rf)
    split = red.levy_leblond_split(rf)
    samples = red.verify_onshell_samples(20, 0)
    sm = red.verify_spin_matrices(red.spin_matrices((3, 4, 0), 1, "5/2"))
    fails = bad_rows(field, split, samples, sm)
    fails += require_rows(field, ["d5 substitution gives the effective operator"])
    fails += require_rows(split, ["p- p+ is (laplacian - k^2)/2"])
    fails += require_rows(samples, [f"{w} (20 random momenta)" for w in
                                    ("u orthonormality", "u completeness", "Dirac equation residual")])
    fails += require_rows(sm, ["cond1: S1 S1 sum is 3/4", "cond2: S2 S2 sum is 2 d_u^2 p^2",
                               "cond3: mixed sum is -2 d_u^2 p^2", "total spin squared is 3/4",
                               "f2 f2* = f1 (1 - f1)"])
    st = red.spin_states((3, 4, 0), 1, "5/2")
    if st.f1 != ExactScalar("1/2"):
        fails.append(f"f1 = {st.f1}")
    if st.f2 != ExactScalar(4, 0, -3) / 10:
        fails.append(f"f2 = {st.f2}")
    return fails


@criterion(8, "Dirac spin conserved in (3+1), not in the (4+1) block evolution")
def test_criterion_08_nonconservation():
    w = sp.nonconservation_witness(ONE, INV_SQRT2)
    return bad_rows(w.report) + require_rows(
        w.report, [f"[sigma{a}/2, h] vanishes in (3+1)" for a in (1, 2, 3)]
        + [f"[Sigma{a}/2, (4+1) block operator] nonzero" for a in (1, 2, 3)])


@criterion(9, "Fock space on two grid points: anticommutators, transitions, spin, under 10 s")
def test_criterion_09_fock():
    t0 = time.perf_counter()
    rep = fk.fock_report([(1, 0, 0), (0, 1, 0)], 1, 1)
    elapsed = time.perf_counter() - t0
    names = ["{c_i, c_j^dagger} = delta_ij for all modes", "{c_i, c_j} = 0 for all modes",
             "{c_i^dagger, c_j^dagger} = 0 for all modes", "spin squared is 3/4 on one-particle states"]
    for r in (1, 2):
        for s in (1, 2):
            names += [f"[T+-({r},{s}), M] = -2m T+-", f"[T-+({r},{s}), M] = 2m T-+",
                      f"T-+({r},{s}) maps |{s};p0;+> to |{r};p0;->"]
    fails = bad_rows(rep) + require_rows(rep, names)
    if fk.build_fock_space([(1, 0, 0), (0, 1, 0)], 1, 1).dim > 256:
        fails.append("dimension above 256")
    if elapsed >= 10.0:
        fails.append(f"took {elapsed:.1f} s")
    return fails


@criterion(10, "run_suite(all) is deterministic and finishes in under 2 minutes")
def test_criterion_10_determinism():
    t0 = time.perf_counter()
    docs = [run_suite("all", 0, 5).to_dict() for _ in range(2)]
    elapsed = time.perf_counter() - t0
    for d in docs:
        d.pop("timestamp")
    a, b = (json.dumps(d, indent=2, ensure_ascii=False).encode() for d in docs)
    fails = []
    if a != b:
        fails.append("JSON differs between runs")
    if docs[0]["summary"]["failed"]:
        fails.append(f"{docs[0]['summary']['failed']} failing rows")
    if elapsed >= 120.0:
        fails.append(f"two runs took {elapsed:.1f} s")
    return fails
