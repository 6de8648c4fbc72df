"""Multivariate polynomials and rational functions over Q(i, sqrt2).

A monomial is a tuple of ``(name, exponent)`` pairs sorted by name; the
constant monomial is the empty tuple.  ``Poly`` maps monomials to nonzero
``ExactScalar`` coefficients.  ``PolyFrac`` is a quotient of two polynomials.

Only monomial content is cancelled between numerator and denominator, plus
an exact-division attempt when the denominator is not a monomial.  Equality is
decided by cross-multiplication, so missing gcds never affect correctness.
"""
from __future__ import annotations

from fractions import Fraction
from numbers import Rational

from galspin.errors import DivisionByZero, NotRepresentable
from galspin.exact.scalar import ONE, ZERO, ExactScalar

Monomial = tuple


def mono_mul(m1: Monomial, m2: Monomial) -> Monomial:
    if not m1:
        return m2
    if not m2:
        return m1
    d = dict(m1)
    for v, e in m2:
        d[v] = d.get(v, 0) + e
    return tuple(sorted(d.items()))


def mono_div(m1: Monomial, m2: Monomial):
    """m1 / m2 as a monomial, or None if m2 does not divide m1."""
    if not m2:
        return m1
    d = dict(m1)
    for v, e in m2:
        have = d.get(v, 0)
        if have < e:
            return None
        if have == e:
            del d[v]
        else:
            d[v] = have - e
    return tuple(sorted(d.items()))


def mono_gcd(m1: Monomial, m2: Monomial) -> Monomial:
    d2 = dict(m2)
    return tuple((v, min(e, d2[v])) for v, e in m1 if v in d2)


def mono_str(m: Monomial) -> str:
    return "*".join(v if e == 1 else f"{v}^{e}" for v, e in m)


class Poly:
    __slots__ = ("terms",)

    def __init__(self, terms=None):
        self.terms = {} if terms is None else {m: c for m, c in terms.items() if c}

    @classmethod
    def _of(cls, terms):
        p = object.__new__(cls)
        p.terms = terms
        return p

    @classmethod
    def const(cls, c) -> "Poly":
        c = ExactScalar.coerce(c)
        return cls._of({(): c} if c else {})

    @classmethod
    def var(cls, name: str) -> "Poly":
        return cls._of({((name, 1),): ONE})

    # structure --------------------------------------------------------
    def __bool__(self):
        return bool(self.terms)

    def is_constant(self) -> bool:
        return not self.terms or (len(self.terms) == 1 and () in self.terms)

    def constant_value(self) -> ExactScalar:
        return self.terms.get((), ZERO)

    def is_monomial(self) -> bool:
        return len(self.terms) == 1

    def variables(self) -> set:
        return {v for m in self.terms for v, _ in m}

    def degree(self) -> int:
        return max((sum(e for _, e in m) for m in self.terms), default=0)

    def content_monomial(self) -> Monomial:
        it = iter(self.terms)
        g = next(it, ())
        for m in it:
            if not g:
                break
            g = mono_gcd(g, m)
        return g

    def leading(self, order):
        """Leading (monomial, coeff) in lex order over the given variables."""
        def key(m):
            d = dict(m)
            return tuple(d.get(v, 0) for v in order)
        m = max(self.terms, key=key)
        return m, self.terms[m]

    # arithmetic -------------------------------------------------------
    def __add__(self, other: "Poly") -> "Poly":
        if not other.terms:
            return self
        if not self.terms:
            return other
        t = dict(self.terms)
        for m, c in other.terms.items():
            s = t.get(m)
            if s is None:
                t[m] = c
            else:
                s = s + c
                if s:
                    t[m] = s
                else:
                    del t[m]
        return Poly._of(t)

    def __neg__(self) -> "Poly":
        return Poly._of({m: -c for m, c in self.terms.items()})

    def __sub__(self, other: "Poly") -> "Poly":
        return self + (-other)

    def __mul__(self, other: "Poly") -> "Poly":
        if not self.terms or not other.terms:
            return Poly._of({})
        t = {}
        for m1, c1 in self.terms.items():
            for m2, c2 in other.terms.items():
                m = mono_mul(m1, m2)
                c = c1 * c2
                s = t.get(m)
                t[m] = c if s is None else s + c
        return Poly._of({m: c for m, c in t.items() if c})

    def scale(self, c: ExactScalar) -> "Poly":
        if not c:
            return Poly._of({})
        return Poly._of({m: v * c for m, v in self.terms.items()})

    def mul_monomial(self, mono: Monomial) -> "Poly":
        return Poly._of({mono_mul(m, mono): c for m, c in self.terms.items()})

    def div_monomial(self, mono: Monomial) -> "Poly":
        return Poly._of({mono_div(m, mono): c for m, c in self.terms.items()})

    def divexact(self, other: "Poly"):
        """self / other if the division is exact, else None."""
        if not other.terms:
            raise DivisionByZero("polynomial division by zero")
        if not self.terms:
            return Poly._of({})
        if other.is_monomial():
            (m0, c0), = other.terms.items()
            inv = c0.inv()
            out = {}
            for m, c in self.terms.items():
                q = mono_div(m, m0)
                if q is None:
                    return None
                out[q] = c * inv
            return Poly._of(out)
        order = sorted(self.variables() | other.variables())
        lm, lc = other.leading(order)
        inv = lc.inv()
        r, q = self, Poly._of({})
        while r.terms:
            rm, rc = r.leading(order)
            qm = mono_div(rm, lm)
            if qm is None:
                return None
            t = Poly._of({qm: rc * inv})
            q = q + t
            r = r - t * other
        return q

    def deriv(self, var: str) -> "Poly":
        out = {}
        for m, c in self.terms.items():
            d = dict(m)
            e = d.get(var, 0)
            if e == 0:
                continue
            if e == 1:
                del d[var]
            else:
                d[var] = e - 1
            out[tuple(sorted(d.items()))] = c * e
        return Poly._of(out)

    def conj(self) -> "Poly":
        """Conjugate coefficients; variables are treated as real."""
        return Poly._of({m: c.conj() for m, c in self.terms.items()})

    def evaluate(self, values: dict):
        """Substitute variables; values may be scalars or PolyFracs."""
        acc = PolyFrac.const(0)
        powers = {}
        for m, c in self.terms.items():
            term = PolyFrac.const(c)
            rest = []
            for v, e in m:
                if v in values:
                    key = (v, e)
                    if key not in powers:
                        powers[key] = PolyFrac.coerce(values[v]) ** e
                    term = term * powers[key]
                else:
                    rest.append((v, e))
            if rest:
                term = term * PolyFrac(Poly._of({tuple(rest): ONE}))
            acc = acc + term
        return acc

    def __eq__(self, other):
        if not isinstance(other, Poly):
            return NotImplemented
        return self.terms == other.terms

    __hash__ = None

    def __str__(self):
        if not self.terms:
            return "0"
        order = sorted(self.variables())

        def key(m):
            d = dict(m)
            return tuple(-d.get(v, 0) for v in order)

        parts = []
        for m in sorted(self.terms, key=key):
            c = self.terms[m]
            ms = mono_str(m)
            cs = str(c)
            if not ms:
                parts.append(cs)
            elif cs == "1":
                parts.append(ms)
            elif cs == "-1":
                parts.append("-" + ms)
            elif c.is_rational() or cs in ("i", "-i"):
                parts.append(f"{cs}*{ms}")
            else:
                parts.append(f"({cs})*{ms}")
        out = parts[0]
        for p in parts[1:]:
            out += " - " + p[1:] if p.startswith("-") else " + " + p
        return out

    def __repr__(self):
        return f"Poly({self})"


_ONE_POLY = Poly._of({(): ONE})


class PolyFrac:
    """Rational function num/den; immutable."""

    __slots__ = ("num", "den")

    def __init__(self, num: Poly, den: Poly | None = None):
        if den is None:
            self.num, self.den = num, _ONE_POLY
            return
        if not den.terms:
            raise DivisionByZero("rational function with zero denominator")
        self.num, self.den = _normalize(num, den)

    @classmethod
    def _of(cls, num, den):
        f = object.__new__(cls)
        f.num, f.den = num, den
        return f

    @classmethod
    def const(cls, c) -> "PolyFrac":
        return cls._of(Poly.const(c), _ONE_POLY)

    @classmethod
    def coerce(cls, x) -> "PolyFrac":
        if isinstance(x, PolyFrac):
            return x
        if isinstance(x, Poly):
            return cls._of(x, _ONE_POLY)
        if isinstance(x, (ExactScalar, int, Rational, str)):
            return cls.const(x)
        raise TypeError(f"cannot interpret {x!r} as a rational function")

    # structure --------------------------------------------------------
    def __bool__(self):
        return bool(self.num.terms)

    def is_polynomial(self) -> bool:
        return self.den.is_constant()

    def is_constant(self) -> bool:
        return self.num.is_constant() and self.den.is_constant()

    def to_scalar(self) -> ExactScalar:
        if not self.is_constant():
            raise NotRepresentable(f"{self} still depends on {sorted(self.variables())}")
        return self.num.constant_value() / self.den.constant_value()

    def to_poly(self) -> Poly:
        if not self.den.is_constant():
            raise NotRepresentable(f"{self} is not a polynomial")
        return self.num.scale(self.den.constant_value().inv())

    def variables(self) -> set:
        return self.num.variables() | self.den.variables()

    # arithmetic -------------------------------------------------------
    def __add__(self, other):
        try:
            o = PolyFrac.coerce(other)
        except TypeError:
            return NotImplemented
        if not o.num.terms:
            return self
        if not self.num.terms:
            return o
        a, b, c, d = self.num, self.den, o.num, o.den
        if b == d:
            return PolyFrac(a + c, b)
        if b.is_monomial() and d.is_monomial():
            (mb, cb), = b.terms.items()
            (md, cd), = d.terms.items()
            g = mono_gcd(mb, md)
            fb = mono_div(md, g)  # multiply a/b by fb/fb
            fd = mono_div(mb, g)
            num = a.mul_monomial(fb).scale(cd) + c.mul_monomial(fd).scale(cb)
            den = Poly._of({mono_mul(mb, fb): cb * cd})
            return PolyFrac(num, den)
        q = b.divexact(d) if len(b.terms) >= len(d.terms) else None
        if q is not None:  # d | b
            return PolyFrac(a + c * q, b)
        q = d.divexact(b) if len(d.terms) >= len(b.terms) else None
        if q is not None:
            return PolyFrac(a * q + c, d)
        return PolyFrac(a * d + c * b, b * d)

    __radd__ = __add__

    def __neg__(self):
        return PolyFrac._of(-self.num, self.den)

    def __pos__(self):
        return self

    def __sub__(self, other):
        try:
            o = PolyFrac.coerce(other)
        except TypeError:
            return NotImplemented
        return self + (-o)

    def __rsub__(self, other):
        try:
            o = PolyFrac.coerce(other)
        except TypeError:
            return NotImplemented
        return o + (-self)

    def __mul__(self, other):
        if isinstance(other, (ExactScalar, int, Fraction)):
            c = ExactScalar.coerce(other)
            return PolyFrac._of(self.num.scale(c), self.den)
        try:
            o = PolyFrac.coerce(other)
        except TypeError:
            return NotImplemented
        if not self.num.terms or not o.num.terms:
            return PolyFrac._of(Poly._of({}), _ONE_POLY)
        if self.den is _ONE_POLY and o.den is _ONE_POLY:
            return PolyFrac._of(self.num * o.num, _ONE_POLY)
        return PolyFrac(self.num * o.num, self.den * o.den)

    __rmul__ = __mul__

    def inv(self) -> "PolyFrac":
        if not self.num.terms:
            raise DivisionByZero("inverse of the zero rational function")
        return PolyFrac(self.den, self.num)

    def __truediv__(self, other):
        try:
            o = PolyFrac.coerce(other)
        except TypeError:
            return NotImplemented
        return self * o.inv()

    def __rtruediv__(self, other):
        try:
            o = PolyFrac.coerce(other)
        except TypeError:
            return NotImplemented
        return o * self.inv()

    def __pow__(self, n: int):
        if not isinstance(n, int):
            return NotImplemented
        if n < 0:
            return self.inv() ** (-n)
        result, base = PolyFrac.const(1), self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def conj(self) -> "PolyFrac":
        return PolyFrac._of(self.num.conj(), self.den.conj())

    def deriv(self, var: str) -> "PolyFrac":
        dn = self.num.deriv(var)
        if self.den.is_constant():
            return PolyFrac._of(dn, self.den)
        dd = self.den.deriv(var)
        if not dd.terms:
            return PolyFrac(dn, self.den)
        return PolyFrac(dn * self.den - self.num * dd, self.den * self.den)

    def subs(self, values: dict) -> "PolyFrac":
        den = self.den.evaluate(values)
        if not den:
            raise DivisionByZero(f"denominator {self.den} vanishes at the substituted point")
        return self.num.evaluate(values) / den

    def __call__(self, **values):
        return self.subs(values)

    def __eq__(self, other):
        try:
            o = PolyFrac.coerce(other)
        except TypeError:
            return NotImplemented
        if self.den == o.den:
            return self.num == o.num
        return self.num * o.den == o.num * self.den

    __hash__ = None

    def __str__(self):
        n = str(self.num)
        if self.den.is_constant() and self.den.constant_value() == 1:
            return n
        d = str(self.den)
        if len(self.num.terms) > 1:
            n = f"({n})"
        if len(self.den.terms) > 1 or "*" in d:
            d = f"({d})"
        return f"{n}/{d}"

    def __repr__(self):
        return f"PolyFrac({self})"


def _normalize(num: Poly, den: Poly):
    if not num.terms:
        return num, _ONE_POLY
    if den.is_constant():
        c = den.constant_value()
        if c == ONE:
            return num, _ONE_POLY
        return num.scale(c.inv()), _ONE_POLY
    # cancel common monomial content
    g = mono_gcd(num.content_monomial(), den.content_monomial())
    if g:
        num, den = num.div_monomial(g), den.div_monomial(g)
        if den.is_constant():
            return num.scale(den.constant_value().inv()), _ONE_POLY
    if not den.is_monomial():
        q = num.divexact(den)
        if q is not None:
            return q, _ONE_POLY
    # make the leading denominator coefficient 1
    order = sorted(den.variables())
    _, lc = den.leading(order)
    if lc != ONE:
        inv = lc.inv()
        num, den = num.scale(inv), den.scale(inv)
    return num, den


def symbol(name: str) -> PolyFrac:
    return PolyFrac._of(Poly.var(name), _ONE_POLY)


def symbols(names: str):
    return tuple(symbol(n) for n in names.replace(",", " ").split())


def polyfrac_eq(x: PolyFrac, y: PolyFrac) -> bool:
    """True iff x - y vanishes identically as a rational function."""
    return PolyFrac.coerce(x) == PolyFrac.coerce(y)
