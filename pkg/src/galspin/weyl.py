"""Matrix-coefficient linear differential operators in the momenta p1..p5.

An operator is a finite sum ``sum_alpha c_alpha * d^alpha`` with the 4x4
coefficient matrices ``c_alpha`` standing to the left of the derivatives
(normal order).  Products are brought back to normal order with the Leibniz
rule, so every operator built here is canonical and equality is exact.
"""
from __future__ import annotations

from math import comb
from itertools import product

from galspin.errors import NonPolynomialAmplitude
from galspin.exact import ExactScalar, Matrix, PolyFrac, symbol

VARS = ("p1", "p2", "p3", "p4", "p5")
NVARS = len(VARS)
DIM = 4
ZERO_ALPHA = (0,) * NVARS
P = {i + 1: symbol(v) for i, v in enumerate(VARS)}


def _alpha(i: int, n: int = 1) -> tuple:
    a = [0] * NVARS
    a[i - 1] = n
    return tuple(a)


def _as_matrix(c) -> Matrix:
    if isinstance(c, Matrix):
        return c
    c = PolyFrac.coerce(c)
    if c.is_constant():
        c = c.to_scalar()
    return Matrix.identity(DIM).scale(c)


def _deriv_matrix(m: Matrix, gamma: tuple) -> Matrix:
    out = {}
    for k, v in m.entries.items():
        if not isinstance(v, PolyFrac):
            continue  # constants differentiate to zero
        for i, n in enumerate(gamma):
            for _ in range(n):
                v = v.deriv(VARS[i])
                if not v:
                    break
            if not v:
                break
        if v:
            out[k] = v
    return Matrix._of(m.shape, out)


class DiffOperator:
    __slots__ = ("terms",)

    def __init__(self, terms=None):
        self.terms = {}
        if terms:
            for a, c in terms.items():
                m = _as_matrix(c)
                if not m.is_zero():
                    self.terms[tuple(a)] = m

    @classmethod
    def _of(cls, terms):
        d = object.__new__(cls)
        d.terms = terms
        return d

    @classmethod
    def zero(cls) -> "DiffOperator":
        return cls._of({})

    @classmethod
    def coeff(cls, c) -> "DiffOperator":
        """Multiplication operator by a scalar rational function or a 4x4 matrix."""
        m = _as_matrix(c)
        return cls._of({} if m.is_zero() else {ZERO_ALPHA: m})

    @classmethod
    def deriv(cls, i: int, n: int = 1) -> "DiffOperator":
        """(d/dp_i)^n."""
        return cls._of({_alpha(i, n): Matrix.identity(DIM)})

    @classmethod
    def momentum(cls, i: int) -> "DiffOperator":
        return cls.coeff(P[i])

    # algebra ----------------------------------------------------------
    def is_zero(self) -> bool:
        return not self.terms

    def __add__(self, other):
        if not isinstance(other, DiffOperator):
            other = DiffOperator.coeff(other)
        out = dict(self.terms)
        for a, m in other.terms.items():
            s = out.get(a)
            if s is None:
                out[a] = m
            else:
                s = s + m
                if s.is_zero():
                    del out[a]
                else:
                    out[a] = s
        return DiffOperator._of(out)

    __radd__ = __add__

    def __neg__(self):
        return DiffOperator._of({a: -m for a, m in self.terms.items()})

    def __sub__(self, other):
        if not isinstance(other, DiffOperator):
            other = DiffOperator.coeff(other)
        return self + (-other)

    def __rsub__(self, other):
        return DiffOperator.coeff(other) - self

    def scale(self, c) -> "DiffOperator":
        """Left multiplication by a scalar coefficient (commutes with matrices)."""
        c = PolyFrac.coerce(c)
        if c.is_constant():
            c = c.to_scalar()
        if not c:
            return DiffOperator.zero()
        out = {}
        for a, m in self.terms.items():
            s = m.scale(c)
            if not s.is_zero():
                out[a] = s
        return DiffOperator._of(out)

    def compose(self, other: "DiffOperator") -> "DiffOperator":
        """Normal-ordered product self o other."""
        acc = {}
        dcache = {}
        for alpha, a in self.terms.items():
            ranges = [range(n + 1) for n in alpha]
            for gamma in product(*ranges):
                mult = 1
                for n, k in zip(alpha, gamma):
                    mult *= comb(n, k)
                rest = tuple(n - k for n, k in zip(alpha, gamma))
                for beta, b in other.terms.items():
                    key = (beta, gamma)
                    db = dcache.get(key)
                    if db is None:
                        db = b if not any(gamma) else _deriv_matrix(b, gamma)
                        dcache[key] = db
                    if db.is_zero():
                        continue
                    term = a * db
                    if mult != 1:
                        term = term.scale(mult)
                    if term.is_zero():
                        continue
                    tot = tuple(r + s for r, s in zip(rest, beta))
                    s = acc.get(tot)
                    acc[tot] = term if s is None else s + term
        return DiffOperator._of({a: m for a, m in acc.items() if not m.is_zero()})

    def __mul__(self, other):
        if isinstance(other, DiffOperator):
            return self.compose(other)
        if isinstance(other, Matrix):
            return self.compose(DiffOperator.coeff(other))
        try:
            return self.scale(other)
        except TypeError:
            return NotImplemented

    def __rmul__(self, other):
        if isinstance(other, Matrix):
            return DiffOperator.coeff(other).compose(self)
        try:
            return self.scale(other)
        except TypeError:
            return NotImplemented

    def normal_order(self) -> "DiffOperator":
        # terms are stored normal-ordered already; rebuild a fresh copy
        return DiffOperator._of(dict(self.terms))

    def order(self) -> int:
        return max((sum(a) for a in self.terms), default=0)

    def coefficient(self, alpha=ZERO_ALPHA) -> Matrix:
        return self.terms.get(tuple(alpha), Matrix.zeros(DIM))

    def is_multiplication(self) -> bool:
        return all(a == ZERO_ALPHA for a in self.terms)

    def subs(self, values: dict) -> "DiffOperator":
        """Substitute momentum values in the coefficients (derivatives untouched)."""
        out = {}
        for a, m in self.terms.items():
            s = m.subs(values)
            if not s.is_zero():
                out[a] = s
        return DiffOperator._of(out)

    def __eq__(self, other):
        if not isinstance(other, DiffOperator):
            return NotImplemented
        return (self - other).is_zero()

    __hash__ = None

    def __str__(self):
        return format_operator(self)

    def __repr__(self):
        return f"DiffOperator({self})"


def commutator(a: DiffOperator, b: DiffOperator) -> DiffOperator:
    return a * b - b * a


def anticommutator(a: DiffOperator, b: DiffOperator) -> DiffOperator:
    return a * b + b * a


def _alpha_str(alpha) -> str:
    parts = []
    for i, n in enumerate(alpha):
        if n == 1:
            parts.append(f"d{VARS[i]}")
        elif n > 1:
            parts.append(f"d{VARS[i]}^{n}")
    return "*".join(parts)


def _matrix_str(m: Matrix) -> str:
    diag = {i: m[i, i] for i in range(DIM)}
    off = [k for k in m.entries if k[0] != k[1]]
    if not off and all(diag[i] == diag[0] for i in range(DIM)):
        return str(diag[0])
    cells = ", ".join(f"[{i + 1},{j + 1}]={v}" for (i, j), v in sorted(m.entries.items()))
    return "{" + cells + "}"


def format_operator(op: DiffOperator) -> str:
    """Render as a sum of ``coeff · d^alpha`` terms, lowest order first."""
    if op.is_zero():
        return "0"
    parts = []
    for alpha in sorted(op.terms, key=lambda a: (sum(a), tuple(-x for x in a))):
        c = _matrix_str(op.terms[alpha])
        d = _alpha_str(alpha)
        parts.append(f"({c}) · {d}" if d else f"({c})")
    return " + ".join(parts)


class PlaneWaveState:
    """Amplitude u(p) times exp(-i p.x); momentum values optional.

    ``momentum`` maps a subset of ``p1..p5`` to numbers.  Unassigned momenta
    stay symbolic.
    """

    def __init__(self, amplitude, momentum=None):
        amp = amplitude if isinstance(amplitude, Matrix) else Matrix.column(amplitude)
        if amp.shape != (DIM, 1):
            raise ValueError("plane-wave amplitude must be a 4-component column")
        if amp.is_zero():
            raise ValueError("plane-wave amplitude must not vanish identically")
        self.amplitude = amp
        self.momentum = {} if momentum is None else {
            (f"p{k}" if isinstance(k, int) else k): ExactScalar.coerce(v) for k, v in momentum.items()}

    def evaluated(self) -> Matrix:
        return self.amplitude.subs(self.momentum) if self.momentum else self.amplitude


def apply_to_plane_wave(op: DiffOperator, state: PlaneWaveState) -> Matrix:
    """Act with ``op`` in the momentum representation and return the amplitude.

    Derivatives act on the polynomial momentum dependence of the amplitude,
    then the momentum values of the state are substituted.
    """
    for v in state.amplitude.entries.values():
        if isinstance(v, PolyFrac) and not v.is_polynomial():
            raise NonPolynomialAmplitude(f"amplitude entry {v} is not polynomial in the momenta")
    out = Matrix.zeros(DIM, 1)
    for alpha, c in op.terms.items():
        du = state.amplitude if alpha == ZERO_ALPHA else _deriv_matrix(state.amplitude, alpha)
        if not du.is_zero():
            out = out + c * du
    return out.subs(state.momentum) if state.momentum else out
