import pytest
import sympy as sp
from hypothesis import given, settings, strategies as st

from conftest import to_sympy
from galspin.errors import NonPolynomialAmplitude
from galspin.exact import I, ONE, ExactScalar, Matrix
from galspin.weyl import (P, VARS, DiffOperator, PlaneWaveState, anticommutator, apply_to_plane_wave, commutator,
                          format_operator)

SYMS = [sp.Symbol(v, real=True) for v in VARS]


def sympy_action(op: DiffOperator, column):
    """Apply op to a sympy 4-vector of polynomials, independently of galspin."""
    out = sp.zeros(4, 1)
    for alpha, c in op.terms.items():
        d = column
        for var, n in zip(SYMS, alpha):
            for _ in range(n):
                d = d.diff(var)
        out += to_sympy(c) * d
    return out.expand()


coef = st.sampled_from([ONE, I, ExactScalar("-1/2"), ExactScalar(0, 1), P[1], P[2] * P[5], P[3] - 2 * P[4]])
gens = st.sampled_from([DiffOperator.deriv(1), DiffOperator.deriv(2), DiffOperator.deriv(5),
                        DiffOperator.deriv(3, 2), DiffOperator.momentum(4), DiffOperator.coeff(ONE)])


@st.composite
def operators(draw):
    op = DiffOperator.zero()
    for _ in range(draw(st.integers(1, 3))):
        op = op + DiffOperator.coeff(draw(coef)) * draw(gens)
    return op


AMPS = [Matrix.column([P[1] ** 3 * P[5], P[2] * P[3], 1, P[4] ** 2]),
        Matrix.column([P[1] * P[2] * P[3] * P[4] * P[5], 0, P[3] ** 4, I * P[1]])]


@settings(max_examples=40)
@given(operators(), operators())
def test_composition_agrees_with_sympy(a, b):
    for amp in AMPS:
        lhs = apply_to_plane_wave(a * b, PlaneWaveState(amp))
        rhs = sympy_action(a, sympy_action(b, to_sympy(amp)))
        assert (to_sympy(lhs) - rhs).expand() == sp.zeros(4, 1)


@settings(max_examples=30)
@given(operators(), operators(), operators())
def test_associativity_and_jacobi(a, b, c):
    assert (a * b) * c == a * (b * c)
    jac = commutator(a, commutator(b, c)) + commutator(b, commutator(c, a)) + commutator(c, commutator(a, b))
    assert jac.is_zero()


def test_canonical_commutator():
    for i in range(1, 6):
        for j in range(1, 6):
            c = commutator(DiffOperator.deriv(i), DiffOperator.coeff(P[j]))
            assert c == (DiffOperator.coeff(ONE) if i == j else DiffOperator.zero())


def test_matrix_coefficients_do_not_commute():
    a = DiffOperator.coeff(Matrix.from_rows([[0, 1, 0, 0], [0] * 4, [0] * 4, [0] * 4]))
    b = DiffOperator.coeff(Matrix.from_rows([[0] * 4, [1, 0, 0, 0], [0] * 4, [0] * 4]))
    assert not commutator(a, b).is_zero()
    assert anticommutator(a, b) == DiffOperator.coeff(Matrix.diag([1, 1, 0, 0]))


def test_order_and_coefficients():
    op = DiffOperator.coeff(P[1]) * DiffOperator.deriv(2, 2) + DiffOperator.deriv(3)
    assert op.order() == 2
    assert not op.is_multiplication()
    assert op.coefficient((0, 0, 1, 0, 0)) == Matrix.identity(4)
    assert DiffOperator.coeff(P[1]).is_multiplication()


def test_plane_wave_substitution():
    amp = Matrix.column([P[1] * P[1], 0, 0, 1])
    st_ = PlaneWaveState(amp, {1: 3})
    out = apply_to_plane_wave(DiffOperator.deriv(1), st_)
    assert out == Matrix.column([6, 0, 0, 0])


def test_plane_wave_errors():
    with pytest.raises(ValueError):
        PlaneWaveState([1, 2, 3])
    with pytest.raises(ValueError):
        PlaneWaveState([0, 0, 0, 0])
    with pytest.raises(NonPolynomialAmplitude):
        apply_to_plane_wave(DiffOperator.deriv(1), PlaneWaveState([ONE / P[1], 0, 0, 0]))


def test_format_operator_mentions_derivatives():
    text = format_operator(DiffOperator.coeff(P[2]) * DiffOperator.deriv(1))
    assert "p2" in text and "1" in text
