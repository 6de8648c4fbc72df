import pytest
import sympy as sp
from hypothesis import given, settings, strategies as st

from conftest import SQ2, positive, sympy_gammas, to_sympy, vec3
from galspin import reduction as red
from galspin.errors import DegenerateCombination, InvalidMass, OffShell, ZeroMass
from galspin.exact import HALF, I, INV_SQRT2, SQRT2, ExactScalar, Matrix, symbols

G, SIG = sympy_gammas()
d = {mu: sp.Symbol(f"d{mu}", real=True) for mu in range(1, 6)}


def sympy_p_pm(k):
    sd = sum((SIG[a] * d[a] for a in (1, 2, 3)), sp.zeros(2))
    return (sd + k * sp.eye(2)) / SQ2, (sd - k * sp.eye(2)) / SQ2


def sympy_dirac(k, upto=5):
    return sum((sp.I * G[mu] * d[mu] for mu in range(1, upto + 1)), sp.zeros(4)) - k * sp.eye(4)


def blocks(a, b, c, e):
    return sp.Matrix(sp.BlockMatrix([[a, b], [c, e]]))


# factorization of x5 ----------------------------------------------------

@pytest.mark.parametrize("m, k", [(1, 1), (2, "3/2"), ("1/3", 5)])
def test_reduced_constants(m, k):
    rf = red.reduce_field("plus", m, k)
    assert rf.cbar_sq == rf.k * rf.k / (2 * rf.m * rf.m)
    assert rf.mcbar / rf.k == INV_SQRT2
    assert rf.d5_value() == -I * rf.mcbar
    assert red.reduce_field("minus", m, k).d5_value() == I * rf.mcbar


@pytest.mark.parametrize("sector", ["plus", "minus"])
def test_d5_substitution_against_sympy(sector):
    rf = red.reduce_field(sector, 2, 3)
    mc = to_sympy(rf.mcbar)
    sgn = 1 if sector == "plus" else -1
    full = sympy_dirac(3).subs(d[5], -sp.I * sgn * mc)
    Isec = sp.eye(4) - sgn * G[5] * mc / 3
    eff = sympy_dirac(0, 4) - 3 * Isec
    assert (full - eff).expand() == sp.zeros(4)
    assert (to_sympy(rf.effective_operator()) - eff).expand() == sp.zeros(4)
    assert rf.substitution_residual().is_zero()


def test_phase_and_translation():
    rf = red.reduce_field("plus", 1, 1)
    assert rf.phase((1, 0, 0, 2), (1, 0, 0)) == 0
    assert rf.phase((2, 0, 0, 0), (1, 0, 0)) == 2 * rf.mcbar
    assert rf.translation_phase(3) == 3 * rf.mcbar
    assert red.reduce_field("minus", 1, 1).translation_phase(3) == -3 * rf.mcbar


def test_errors():
    with pytest.raises(ValueError):
        red.reduce_field("zero", 1, 1)
    with pytest.raises(InvalidMass):
        red.reduce_field("plus", 0, 1)
    with pytest.raises(InvalidMass):
        red.reduce_field("minus", -1, 1)
    with pytest.raises(InvalidMass):
        red.reduce_field("plus", 1, 0)


@pytest.mark.parametrize("sector", ["plus", "minus"])
def test_reduced_field_report(sector):
    assert red.verify_reduced_field(red.reduce_field(sector, 1, 1)).ok()


# Levy-Leblond split -----------------------------------------------------

def test_second_order_operator_is_laplacian_minus_k2():
    pp, pm = sympy_p_pm(sp.Rational(3, 2))
    lap = d[1] ** 2 + d[2] ** 2 + d[3] ** 2
    assert (pm * pp - (lap - sp.Rational(9, 4)) / 2 * sp.eye(2)).expand() == sp.zeros(2)
    epp, epm = red.p_plus_minus("3/2")
    assert (to_sympy(epm * epp) - pm * pp).expand() == sp.zeros(2)


@pytest.mark.parametrize("m, k", [(1, 1), (2, "3/2")])
def test_eta_system_against_sympy(m, k):
    rf = red.reduce_field("plus", m, k)
    kk, mc = to_sympy(rf.k), to_sympy(rf.mcbar)
    pp, pm = sympy_p_pm(kk)
    L = blocks(sp.I * d[4] * sp.eye(2), pm, pp, -mc * sp.eye(2))
    eff = sympy_dirac(0, 4) - kk * (sp.eye(4) - G[5] * mc / kk)
    E, Z = sp.eye(2), sp.zeros(2)
    rows = blocks(E, -E, -E, -E) / SQ2
    T = blocks(E, E, E, -E) / 2
    assert (rows * eff * T - L).expand() == sp.zeros(4)
    assert (to_sympy(red.eta_system(rf)) - L).expand() == sp.zeros(4)


def test_xi_system_against_sympy():
    pp, pm = sympy_p_pm(1)
    X = blocks(d[4] * sp.eye(2), -sp.I * pm, sp.I * pp, d[5] * sp.eye(2))
    E = sp.eye(2)
    rows = -sp.I / SQ2 * blocks(E, -E, E, E)
    T = blocks(E, E, E, -E) / 2
    assert (rows * sympy_dirac(1) * T - X).expand() == sp.zeros(4)
    assert (to_sympy(red.xi_system(1)) - X).expand() == sp.zeros(4)


def test_phi_chi_system_rows():
    rf = red.reduce_field("plus", 1, 1)
    S = red.phi_chi_system(rf)
    L = red.eta_system(rf)
    assert S.submatrix(0, 0, 2, 4) == L.submatrix(0, 0, 2, 4)
    assert S.submatrix(2, 0, 4, 4).is_zero()
    assert S.submatrix(6, 0, 2, 4) == L.submatrix(2, 0, 2, 4).scale(SQRT2)


def test_phi_chi_round_trip():
    to_phi, to_chi, back_phi, back_chi = red.phi_chi_maps(red.reduce_field("plus", 1, 1))
    assert back_phi * to_phi + back_chi * to_chi == Matrix.identity(4)


@pytest.mark.parametrize("sector", ["plus", "minus"])
def test_levy_leblond_report(sector):
    rep = red.levy_leblond_split(red.reduce_field(sector, 1, 1))
    assert rep.ok(), rep.failures()
    assert rep.skipped == (1 if sector == "minus" else 0)


# u spinors ----------------------------------------------------------------

def sympy_u(p, m, k):
    k = sp.Rational(k)
    mc = k / SQ2
    p4 = (sum(sp.Rational(x) ** 2 for x in p) + k ** 2) / (2 * mc)
    slash = G[4] * p4 + sum((G[a] * sp.Rational(p[a - 1]) for a in (1, 2, 3)), sp.zeros(4))
    Im = sp.eye(4) + G[5] * mc / k
    du = 1 / sp.sqrt(sum(sp.Rational(x) ** 2 for x in p) + 4 * k ** 2)
    us = [du * (slash + k * Im) * sp.Matrix([1, 0, 0, 0]), du * (slash + k * Im) * sp.Matrix([0, 1, 0, 0])]
    full = slash + G[5] * mc
    return us, full, k


@pytest.mark.parametrize("p, k", [((1, 1, 1), 1), ((2, -1, 3), "1/2"), ((0, 0, 0), 2)])
def test_u_spinors_against_sympy(p, k):
    us, full, kk = sympy_u(p, 1, k)
    for r, u in enumerate(us):
        assert sp.simplify(full * u - kk * u) == sp.zeros(4, 1)
        for s, v in enumerate(us):
            assert sp.simplify((u.H * G[0] * v)[0]) == (1 if r == s else 0)
    mine = red.build_u_spinors(p, 1, k)
    for r in (1, 2):
        ref = us[r - 1] * sp.sqrt(sum(sp.Rational(x) ** 2 for x in p) + 4 * kk ** 2)
        assert (to_sympy(mine.u_tilde[r]) - ref).expand() == sp.zeros(4, 1)


def test_rest_spinors():
    ok, w = red.rest_spinor_check(1, 1)
    assert ok, w
    us = red.build_u_spinors((0, 0, 0), 1, 1)
    assert us.du_sq == ExactScalar("1/4")
    for r in (1, 2):
        assert us.u_tilde[r].scale(HALF) == us.u0[r]


def test_offshell_rejected():
    with pytest.raises(OffShell):
        red.build_u_spinors((1, 0, 0), 1, 1, p4=7)
    us = red.build_u_spinors((1, 0, 0), 1, 1)
    assert red.build_u_spinors((1, 0, 0), 1, 1, p4=us.p4).p4 == us.p4


def test_u_spinor_report():
    rep = red.verify_u_spinors(red.build_u_spinors((1, 1, 1), 1, 1))
    assert rep.ok(), rep.failures()
    assert rep.row("ubar1 u2 is delta").status == "pass"


@settings(max_examples=20)
@given(vec3, positive, positive)
def test_u_spinor_identities_random(p, m, k):
    us = red.build_u_spinors(p, m, k)
    assert us.bilinear(1, 2) == 0 and us.bilinear(1, 1) == 1
    assert red.verify_u_spinors(us).ok()


# spin matrices and states ---------------------------------------------------

def test_spin_state_example():
    st_ = red.spin_states((3, 4, 0), 1, "5/2")
    assert st_.f1 == HALF
    assert st_.f2 == ExactScalar("2/5", 0, "-3/10")
    assert st_.f2 * st_.f2.conj() == st_.f1 * (1 - st_.f1) == ExactScalar("1/4")
    assert st_.report.ok()


def test_spin_state_along_axis():
    st_ = red.spin_states((0, 0, 3), 1, 1)
    assert st_.f1 == 0 and st_.f2 == 0
    assert st_.states == {"up": (1, 0), "down": (0, 1)}
    assert st_.eigenvalues == {"up": HALF, "down": -HALF}


def test_spin_state_eigenvectors_against_sympy():
    st_ = red.spin_states((3, 4, 0), 1, "5/2")
    S3 = to_sympy(st_.S3)
    assert sorted(S3.eigenvals()) == [-sp.Rational(1, 2), sp.Rational(1, 2)]
    for lab, ev in (("up", sp.Rational(1, 2)), ("down", -sp.Rational(1, 2))):
        v = sp.Matrix([to_sympy(c) for c in st_.states[lab]])
        assert sp.simplify(S3 * v - ev * v) == sp.zeros(2, 1)


def test_transversality():
    sm = red.spin_matrices((2, -1, 3), 1, 1)
    acc = Matrix.zeros(2)
    for a, pa in zip((1, 2, 3), (2, -1, 3)):
        acc = acc + sm.S2[a].scale(pa)
    assert acc.is_zero()


def test_total_spin():
    sm = red.spin_matrices((1, 2, 2), 1, 1)
    tot = Matrix.zeros(2)
    for a in (1, 2, 3):
        tot = tot + sm.total(a) * sm.total(a)
    assert tot == Matrix.identity(2).scale(ExactScalar("3/4"))


def test_spin_matrix_reports_symbolic():
    rep = red.verify_spin_matrices(red.spin_matrices(symbols("q1 q2 q3"), 1, 1))
    assert rep.ok(), rep.failures()


def test_f_formulas_against_sympy():
    q1, q2, q3, k = sp.symbols("q1 q2 q3 k", real=True)
    f1 = (q1 ** 2 + q2 ** 2) / (q1 ** 2 + q2 ** 2 + q3 ** 2 + 4 * k ** 2)
    f2 = (q1 + sp.I * q2) * (q3 - 2 * sp.I * k) / (q1 ** 2 + q2 ** 2 + q3 ** 2 + 4 * k ** 2)
    assert sp.simplify(f2 * sp.conjugate(f2) - f1 * (1 - f1)) == 0


def test_degenerate_combination_guard(monkeypatch):
    real = red.spin_matrices

    def fake(p, m, k):
        sm = real(p, m, k)
        sm.f1, sm.f2 = HALF, ExactScalar(0)
        return sm

    monkeypatch.setattr(red, "spin_matrices", fake)
    with pytest.raises(DegenerateCombination):
        red.spin_states((0, 0, 1), 1, 1)


def test_alignment():
    beta, q = red.boost_align_momentum((3, 4, 5), 1, 1)
    assert beta == [3, 4, 0] and q == [0, 0, 5]
    beta, q = red.boost_align_momentum((0, 0, 7), 1, 1)
    assert beta == [0, 0, 0] and q == [0, 0, 7]
    with pytest.raises(ZeroMass):
        red.boost_align_momentum((1, 2, 3), 0, 1)
    assert red.verify_alignment((3, 4, 5), 1, 1).ok()


def test_onshell_samples():
    rep = red.verify_onshell_samples(20, 0)
    assert rep.ok(), rep.failures()
    assert all("20 random momenta" in r.check_name for r in rep.rows)
