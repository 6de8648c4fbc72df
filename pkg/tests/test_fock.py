import time

import numpy as np
import pytest
from hypothesis import given, settings, strategies as st

from galspin.errors import DimensionTooLarge, UndefinedCovariantSpin
from galspin.exact import ExactScalar
from galspin.fock import (FockOperator, build_fock_space, build_observables, covariant_spin, fock_report,
                          spin_magnitude_checks, transition_operators, verify_canonical_relations,
                          verify_observables, verify_transitions)
from galspin.reduction import spin_matrices

CTX = build_fock_space([(1, 1, 1)], 1, 1)
OBS = build_observables(CTX)


def dense(op: FockOperator) -> np.ndarray:
    out = np.zeros((1 << op.nmodes, 1 << op.nmodes), dtype=complex)
    for (t, s), v in op.to_sparse().items():
        out[t, s] = complex(v)
    return out


def kron_annihilator(j: int, nmodes: int) -> np.ndarray:
    """Jordan-Wigner c_j from Kronecker products; mode j is bit j of the basis index."""
    Z = np.diag([1.0, -1.0])
    low = np.array([[0.0, 1.0], [0.0, 0.0]])  # |1> -> |0>
    out = np.array([[1.0]])
    for mode in reversed(range(nmodes)):
        f = Z if mode < j else (low if mode == j else np.eye(2))
        out = np.kron(out, f)
    return out


def test_ladders_match_kronecker_construction():
    for j, md in enumerate(CTX.modes):
        got = dense(CTX.ladder(md.sector, md.r, md.grid_point, False))
        assert np.array_equal(got, kron_annihilator(j, CTX.nmodes))


def test_mode_order():
    ctx = build_fock_space([(1, 0, 0), (0, 1, 0)], 1, 1)
    assert ctx.nmodes == 8 and ctx.dim == 256
    assert ctx.mode("plus", 1, 0) == 0 and ctx.mode("plus", 2, 1) == 3 and ctx.mode("minus", 1, 0) == 4


def test_canonical_examples():
    one = CTX.identity()
    assert CTX.a(1, 0).anticommutator(CTX.a_dag(1, 0)).equals(one)
    assert CTX.a(1, 0).anticommutator(CTX.b_dag(1, 0)).is_zero()
    assert (CTX.a_dag(1, 0) * CTX.a_dag(1, 0)).is_zero()


def test_canonical_relations_report():
    rep = verify_canonical_relations(build_fock_space([(1, 0, 0), (0, 1, 0)], 1, 1))
    assert rep.ok(), rep.failures()


def test_mass_and_energy_examples():
    a1 = CTX.one_particle("plus", 1, 0)
    b1 = CTX.one_particle("minus", 1, 0)
    assert OBS.M(a1) == a1
    assert OBS.M(b1) == {s: -v for s, v in b1.items()}
    assert OBS.H_plus(a1) == {s: v * ExactScalar("3/2") for s, v in a1.items()}
    assert OBS.H_minus(b1) == {s: v * ExactScalar("-3/2") for s, v in b1.items()}
    assert OBS.energies == [ExactScalar("3/2")]


def test_observables_hermitian_and_conserved():
    for op in (OBS.N_plus, OBS.M, OBS.H_plus, OBS.H_minus, OBS.S_plus[1], OBS.S_plus[2]):
        assert np.allclose(dense(op), dense(op).conj().T)
    assert OBS.H_plus.commutator(OBS.M).is_zero()
    assert verify_observables(CTX, OBS).ok()


def test_transitions():
    tmp, tpm = transition_operators(CTX)
    m = CTX.m
    for (r, s), t in tmp.items():
        assert t.commutator(OBS.M).equals(t.scale(2 * m))
        assert tpm[(s, r)].dagger().equals(t)
        assert tpm[(r, s)].commutator(OBS.M).equals(tpm[(r, s)].scale(-2 * m))
        assert t(CTX.one_particle("plus", s, 0)) == CTX.one_particle("minus", r, 0)
        assert tpm[(r, s)](CTX.one_particle("minus", s, 0)) == CTX.one_particle("plus", r, 0)
        assert t(CTX.vacuum()) == {}
    assert verify_transitions(CTX, OBS).ok()


def test_spin_squared_one_particle_example():
    ctx = build_fock_space([(3, 4, 0)], 1, "5/2")
    obs = build_observables(ctx)
    for sector in ("plus", "minus"):
        for r in (1, 2):
            st_ = ctx.one_particle(sector, r, 0)
            assert obs.spin_squared(sector)(st_) == {s: v * ExactScalar("3/4") for s, v in st_.items()}
    assert spin_magnitude_checks(ctx, obs).ok()


def test_spin_operator_matches_one_particle_matrices():
    sm = spin_matrices((1, 1, 1), 1, 1)
    for a in (1, 2, 3):
        for r in (1, 2):
            for s in (1, 2):
                amp = OBS.S_plus[a](CTX.one_particle("plus", s, 0))
                target = CTX.one_particle("plus", r, 0)
                (state, coef), = target.items()
                assert amp.get(state, ExactScalar(0)) == coef * sm.total(a)[r - 1, s - 1]


def test_dimension_guard():
    with pytest.raises(DimensionTooLarge):
        build_fock_space([(1, 0, 0)] * 5, 1, 1)
    with pytest.raises(ValueError):
        build_fock_space([], 1, 1)


def test_covariant_spin():
    a1 = CTX.one_particle("plus", 1, 0)
    assert covariant_spin(CTX, OBS, 3, a1) == OBS.S_plus[3](a1)
    pair = CTX.state(CTX.a_dag(1, 0), CTX.b_dag(1, 0))
    with pytest.raises(UndefinedCovariantSpin):
        covariant_spin(CTX, OBS, 3, pair)
    with pytest.raises(UndefinedCovariantSpin):
        covariant_spin(CTX, OBS, 1, CTX.vacuum())
    two = CTX.state(CTX.a_dag(1, 0), CTX.a_dag(2, 0))
    with pytest.raises(NotImplementedError):
        covariant_spin(CTX, OBS, 1, two)


@settings(max_examples=20)
@given(st.lists(st.integers(0, 3), min_size=1, max_size=4, unique=True),
       st.lists(st.integers(0, 3), min_size=1, max_size=4, unique=True))
def test_anticommutators_random_words(us, vs):
    ops = [CTX.ladder(CTX.modes[j].sector, CTX.modes[j].r, CTX.modes[j].grid_point, False) for j in range(CTX.nmodes)]
    x = FockOperator.zero(CTX.nmodes)
    y = FockOperator.zero(CTX.nmodes)
    for j in us:
        x = x + ops[j]
    for j in vs:
        y = y + ops[j].dagger()
    # {sum c_i, sum c_j^dagger} = |overlap| times the identity
    assert x.anticommutator(y).equals(CTX.identity().scale(len(set(us) & set(vs))))


def test_fock_suite_within_budget():
    t0 = time.perf_counter()
    rep = fock_report([(1, 0, 0), (0, 1, 0)], 1, 1)
    assert time.perf_counter() - t0 < 10
    assert rep.failed == 0
    assert rep.skipped == 2


def test_large_grid_streams():
    # n = 3 means 4096 states; checks run on the low-occupation subspace
    rep = verify_canonical_relations(build_fock_space([(1, 0, 0), (0, 1, 0), (0, 0, 1)], 1, 1))
    assert rep.ok()
    assert "at most two quanta" in " ".join(str(r.witness) for r in rep.rows)
