"""The number field Q(i, sqrt 2).

An element is stored as ``(a + b*sqrt2 + i*(c + d*sqrt2)) / den`` with
integers ``a, b, c, d`` and a positive integer ``den`` sharing no common
factor.  Python integers are unbounded, so no operation ever rounds.
"""
from __future__ import annotations

from fractions import Fraction
from math import gcd, isqrt
from numbers import Rational

from galspin.errors import DivisionByZero, NotRepresentable

SQRT2_GLYPH = "√2"


def _normalize(a, b, c, d, den):
    if den < 0:
        a, b, c, d, den = -a, -b, -c, -d, -den
    g = gcd(gcd(gcd(a, b), gcd(c, d)), den)
    if g > 1:
        a, b, c, d, den = a // g, b // g, c // g, d // g, den // g
    return a, b, c, d, den


class ExactScalar:
    __slots__ = ("_a", "_b", "_c", "_d", "_den", "_hash")

    def __init__(self, re_rat=0, re_sqrt2=0, im_rat=0, im_sqrt2=0):
        parts = [Fraction(x) for x in (re_rat, re_sqrt2, im_rat, im_sqrt2)]
        den = 1
        for f in parts:
            den = den * f.denominator // gcd(den, f.denominator)
        nums = [f.numerator * (den // f.denominator) for f in parts]
        self._set(*_normalize(*nums, den))

    def _set(self, a, b, c, d, den):
        self._a, self._b, self._c, self._d, self._den = a, b, c, d, den
        self._hash = None

    @classmethod
    def _raw(cls, a, b, c, d, den):
        z = object.__new__(cls)
        z._set(*_normalize(a, b, c, d, den))
        return z

    @classmethod
    def coerce(cls, x) -> "ExactScalar":
        if isinstance(x, ExactScalar):
            return x
        if isinstance(x, int):
            return cls._raw(x, 0, 0, 0, 1)
        if isinstance(x, Rational):
            return cls._raw(int(x.numerator), 0, 0, 0, int(x.denominator))
        if isinstance(x, str):
            return cls(Fraction(x))
        raise TypeError(f"cannot interpret {x!r} as an element of Q(i, sqrt2)")

    # components -------------------------------------------------------
    @property
    def re_rat(self) -> Fraction:
        return Fraction(self._a, self._den)

    @property
    def re_sqrt2(self) -> Fraction:
        return Fraction(self._b, self._den)

    @property
    def im_rat(self) -> Fraction:
        return Fraction(self._c, self._den)

    @property
    def im_sqrt2(self) -> Fraction:
        return Fraction(self._d, self._den)

    def real(self) -> "ExactScalar":
        return ExactScalar._raw(self._a, self._b, 0, 0, self._den)

    def imag(self) -> "ExactScalar":
        return ExactScalar._raw(self._c, self._d, 0, 0, self._den)

    def is_real(self) -> bool:
        return self._c == 0 and self._d == 0

    def is_rational(self) -> bool:
        return self._b == 0 and self._c == 0 and self._d == 0

    def to_fraction(self) -> Fraction:
        if not self.is_rational():
            raise NotRepresentable(f"{self} is not rational")
        return Fraction(self._a, self._den)

    # arithmetic -------------------------------------------------------
    def __add__(self, other):
        try:
            o = ExactScalar.coerce(other)
        except TypeError:
            return NotImplemented
        d1, d2 = self._den, o._den
        return ExactScalar._raw(
            self._a * d2 + o._a * d1, self._b * d2 + o._b * d1,
            self._c * d2 + o._c * d1, self._d * d2 + o._d * d1, d1 * d2)

    __radd__ = __add__

    def __neg__(self):
        return ExactScalar._raw(-self._a, -self._b, -self._c, -self._d, self._den)

    def __pos__(self):
        return self

    def __sub__(self, other):
        try:
            o = ExactScalar.coerce(other)
        except TypeError:
            return NotImplemented
        return self + (-o)

    def __rsub__(self, other):
        try:
            o = ExactScalar.coerce(other)
        except TypeError:
            return NotImplemented
        return o + (-self)

    def __mul__(self, other):
        try:
            o = ExactScalar.coerce(other)
        except TypeError:
            return NotImplemented
        a, b, c, d = self._a, self._b, self._c, self._d
        e, f, g, h = o._a, o._b, o._c, o._d
        # (x + iy)(u + iv), x = a + b r, with r^2 = 2
        xu_r, xu_s = a * e + 2 * b * f, a * f + b * e
        yv_r, yv_s = c * g + 2 * d * h, c * h + d * g
        xv_r, xv_s = a * g + 2 * b * h, a * h + b * g
        yu_r, yu_s = c * e + 2 * d * f, c * f + d * e
        return ExactScalar._raw(xu_r - yv_r, xu_s - yv_s, xv_r + yu_r, xv_s + yu_s,
                                self._den * o._den)

    __rmul__ = __mul__

    def conj(self) -> "ExactScalar":
        """Complex conjugate (sqrt2 is real, so it is left alone)."""
        return ExactScalar._raw(self._a, self._b, -self._c, -self._d, self._den)

    def sqrt2_conj(self) -> "ExactScalar":
        """Galois conjugate sending sqrt2 to -sqrt2."""
        return ExactScalar._raw(self._a, -self._b, self._c, -self._d, self._den)

    def inv(self) -> "ExactScalar":
        if not self:
            raise DivisionByZero("inverse of zero in Q(i, sqrt2)")
        # 1/z = conj(z) / |z|^2 and |z|^2 = A + B sqrt2 lies in Q(sqrt2)
        n = self * self.conj()
        A, B, den = n._a, n._b, n._den
        norm = A * A - 2 * B * B
        inv_n = ExactScalar._raw(A * den, -B * den, 0, 0, norm)
        return self.conj() * inv_n

    def __truediv__(self, other):
        try:
            o = ExactScalar.coerce(other)
        except TypeError:
            return NotImplemented
        return self * o.inv()

    def __rtruediv__(self, other):
        try:
            o = ExactScalar.coerce(other)
        except TypeError:
            return NotImplemented
        return o * self.inv()

    def __pow__(self, n: int):
        if not isinstance(n, int):
            return NotImplemented
        if n < 0:
            return self.inv() ** (-n)
        result, base = ONE, self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    # comparison -------------------------------------------------------
    def __bool__(self):
        return bool(self._a or self._b or self._c or self._d)

    def __eq__(self, other):
        try:
            o = ExactScalar.coerce(other)
        except TypeError:
            return NotImplemented
        return (self._a, self._b, self._c, self._d, self._den) == (o._a, o._b, o._c, o._d, o._den)

    def __hash__(self):
        if self._hash is None:
            if self.is_rational():
                self._hash = hash(Fraction(self._a, self._den))
            else:
                self._hash = hash((self._a, self._b, self._c, self._d, self._den))
        return self._hash

    def sign(self) -> int:
        """Sign of a real element."""
        if not self.is_real():
            raise ValueError(f"{self} is not real")
        a, b = self._a, self._b
        if a >= 0 and b >= 0:
            return 1 if (a or b) else 0
        if a <= 0 and b <= 0:
            return -1
        # opposite signs: compare a^2 with 2 b^2
        if a > 0:
            return 1 if a * a > 2 * b * b else -1
        return 1 if 2 * b * b > a * a else -1

    def __lt__(self, other):
        return (self - ExactScalar.coerce(other)).sign() < 0

    def __le__(self, other):
        return (self - ExactScalar.coerce(other)).sign() <= 0

    def __gt__(self, other):
        return (self - ExactScalar.coerce(other)).sign() > 0

    def __ge__(self, other):
        return (self - ExactScalar.coerce(other)).sign() >= 0

    def __complex__(self):
        r = 2 ** 0.5
        return complex((self._a + self._b * r) / self._den, (self._c + self._d * r) / self._den)

    # printing ---------------------------------------------------------
    def __repr__(self):
        return f"ExactScalar({self})"

    def __str__(self):
        return format_scalar(self)


def _real_part_str(rat: Fraction, s2: Fraction) -> list[str]:
    terms = []
    if rat:
        terms.append(str(rat))
    if s2:
        if s2 == 1:
            terms.append(SQRT2_GLYPH)
        elif s2 == -1:
            terms.append("-" + SQRT2_GLYPH)
        elif s2.denominator == 1:
            terms.append(f"{s2}{SQRT2_GLYPH}")
        else:
            terms.append(f"({s2}){SQRT2_GLYPH}")
    return terms


def _join(terms: list[str]) -> str:
    out = terms[0]
    for t in terms[1:]:
        out += " - " + t[1:] if t.startswith("-") else " + " + t
    return out


def format_scalar(z: ExactScalar) -> str:
    """Render as ``a/b + (c/d)√2 + i(e/f + (g/h)√2)``, omitting zero parts."""
    terms = _real_part_str(z.re_rat, z.re_sqrt2)
    im = _real_part_str(z.im_rat, z.im_sqrt2)
    if im:
        inner = _join(im)
        if inner == "1":
            terms.append("i")
        elif inner == "-1":
            terms.append("-i")
        elif len(im) == 1 and (z.im_rat + z.im_sqrt2) < 0:
            terms.append(f"-i({_join(_real_part_str(-z.im_rat, -z.im_sqrt2))})")
        else:
            terms.append(f"i({inner})")
    if not terms:
        return "0"
    return _join(terms)


def _split_top(text: str) -> list:
    """Split a sum at top-level + / - signs, keeping the sign on each term."""
    terms, depth, cur = [], 0, ""
    for i, ch in enumerate(text):
        if ch == "(":
            depth += 1
        elif ch == ")":
            depth -= 1
        if ch in "+-" and depth == 0 and cur.strip() and not cur.rstrip().endswith("/"):
            terms.append(cur.strip())
            cur = "" if ch == "+" else "-"
            continue
        cur += ch
    if cur.strip():
        terms.append(cur.strip())
    return [t.replace(" ", "") for t in terms]


def _parse_real_term(t: str):
    """One term of a real part: (rational, sqrt2 coefficient)."""
    neg = t.startswith("-")
    body = t[1:] if neg else t
    sign = -1 if neg else 1
    if body.endswith(SQRT2_GLYPH):
        coef = body[: -len(SQRT2_GLYPH)]
        if coef.startswith("(") and coef.endswith(")"):
            coef = coef[1:-1]
        return Fraction(0), sign * (Fraction(coef) if coef else Fraction(1))
    return sign * Fraction(body), Fraction(0)


def parse_scalar(text: str) -> ExactScalar:
    """Inverse of ``str`` on ExactScalar."""
    text = text.strip()
    if not text:
        raise ValueError("empty scalar")
    parts = [Fraction(0)] * 4
    for t in _split_top(text):
        neg = t.startswith("-")
        body = t[1:] if neg else t
        if body.startswith("i"):
            inner = body[1:]
            if inner.startswith("(") and inner.endswith(")"):
                inner = inner[1:-1]
            elif inner:
                raise ValueError(f"cannot parse term {t!r}")
            c, d = Fraction(0), Fraction(0)
            for u in _split_top(inner) if inner else ["1"]:
                a, b = _parse_real_term(u)
                c, d = c + a, d + b
            sign = -1 if neg else 1
            parts[2] += sign * c
            parts[3] += sign * d
        else:
            try:
                a, b = _parse_real_term(t)
            except (ValueError, ZeroDivisionError) as exc:
                raise ValueError(f"cannot parse term {t!r}") from exc
            parts[0] += a
            parts[1] += b
    return ExactScalar(*parts)


ZERO = ExactScalar._raw(0, 0, 0, 0, 1)
ONE = ExactScalar._raw(1, 0, 0, 0, 1)
I = ExactScalar._raw(0, 0, 1, 0, 1)
SQRT2 = ExactScalar._raw(0, 1, 0, 0, 1)
INV_SQRT2 = ExactScalar._raw(0, 1, 0, 0, 2)
HALF = ExactScalar._raw(1, 0, 0, 0, 2)


def scalar(x) -> ExactScalar:
    return ExactScalar.coerce(x)


def exact_sqrt(x) -> ExactScalar:
    """Square root of a non-negative rational, when it lies in Q(sqrt2).

    Covers ``q = r^2`` and ``q = 2 r^2``; anything else raises
    ``NotRepresentable``.
    """
    z = ExactScalar.coerce(x)
    if not z.is_rational():
        raise NotRepresentable(f"square root of irrational {z} not supported")
    q = z.to_fraction()
    if q < 0:
        raise NotRepresentable(f"square root of negative {q}")
    n, d = q.numerator, q.denominator
    rn, rd = isqrt(n), isqrt(d)
    if rn * rn == n and rd * rd == d:
        return ExactScalar(Fraction(rn, rd))
    # q = 2 r^2  <=>  q/2 is a square
    h = q / 2
    hn, hd = isqrt(h.numerator), isqrt(h.denominator)
    if hn * hn == h.numerator and hd * hd == h.denominator:
        return ExactScalar(0, Fraction(hn, hd))
    raise NotRepresentable(f"sqrt({q}) is not in Q(sqrt2)")
