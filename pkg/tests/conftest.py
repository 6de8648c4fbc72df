"""Shared helpers: conversion of exact objects to sympy for independent checks."""
from __future__ import annotations

import sympy as sp
from hypothesis import settings, strategies as st

from galspin.exact import ExactScalar, Matrix, PolyFrac
from galspin.exact.poly import Poly

SQ2 = sp.sqrt(2)

settings.register_profile("galspin", max_examples=50, deadline=None)
settings.load_profile("galspin")


def to_sympy(x):
    if isinstance(x, ExactScalar):
        return (sp.Rational(x.re_rat) + sp.Rational(x.re_sqrt2) * SQ2
                + sp.I * (sp.Rational(x.im_rat) + sp.Rational(x.im_sqrt2) * SQ2))
    if isinstance(x, Poly):
        acc = sp.Integer(0)
        for mono, c in x.terms.items():
            t = to_sympy(c)
            for v, e in mono:
                t = t * sp.Symbol(v, real=True) ** e
            acc += t
        return acc
    if isinstance(x, PolyFrac):
        return to_sympy(x.num) / to_sympy(x.den)
    if isinstance(x, Matrix):
        n, m = x.shape
        return sp.Matrix(n, m, lambda i, j: to_sympy(x[i, j]))
    return sp.nsimplify(x)


def sym_zero(expr) -> bool:
    """Exact zero test in sympy for scalars or matrices."""
    if isinstance(expr, sp.MatrixBase):
        return all(sym_zero(e) for e in expr)
    num, _ = sp.fraction(sp.together(sp.expand(expr)))
    return sp.expand(num) == 0


def agree_at_points(expr, points) -> bool:
    """Exact comparison of a rational expression at rational points."""
    syms = sorted(expr.free_symbols, key=str)
    for pt in points:
        v = expr.subs({s: sp.Rational(pt[i % len(pt)]) for i, s in enumerate(syms)})
        if v.has(sp.zoo, sp.nan, sp.oo):
            continue  # landed on a pole
        if sp.expand(sp.radsimp(v)) != 0:
            return False
    return True


POINTS = ((3, -2, 5), ("1/2", 7, "-4/3"), (-5, "2/7", 11))

small = st.fractions(min_value=-20, max_value=20, max_denominator=12)
scalars = st.builds(ExactScalar, small, small, small, small)
nonzero_scalars = scalars.filter(bool)
rationals = st.builds(ExactScalar, small)
positive = st.fractions(min_value=1, max_value=12, max_denominator=6).filter(lambda q: q > 0).map(ExactScalar)
vec3 = st.lists(st.fractions(min_value=-9, max_value=9, max_denominator=6), min_size=3, max_size=3)


def sympy_gammas():
    """Gamma matrices built directly in sympy, plus gamma0 and the Pauli matrices."""
    s = {1: sp.Matrix([[0, 1], [1, 0]]), 2: sp.Matrix([[0, -sp.I], [sp.I, 0]]), 3: sp.Matrix([[1, 0], [0, -1]])}
    Z, E = sp.zeros(2), sp.eye(2)

    def blk(a, b, c, d):
        return sp.Matrix(sp.BlockMatrix([[a, b], [c, d]]))

    G = {a: blk(Z, sp.I * s[a], sp.I * s[a], Z) for a in (1, 2, 3)}
    G[4] = blk(E, E, -E, -E) / SQ2
    G[5] = blk(E, -E, E, -E) / SQ2
    G[0] = sp.diag(1, 1, -1, -1)
    return G, s


ACCEPTANCE_LINES = []


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in sorted(ACCEPTANCE_LINES, key=lambda s: int(s.split("criterion ")[1].split(":")[0])):
            terminalreporter.write_line(line)
