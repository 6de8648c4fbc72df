"""Sparse exact matrices.

Entries are ``ExactScalar`` or ``PolyFrac`` (mixing is allowed; the product of
the two is a ``PolyFrac``).  Only nonzero entries are stored, keyed by
0-based ``(row, col)``.
"""
from __future__ import annotations

from galspin.errors import ShapeMismatch
from galspin.exact.poly import PolyFrac
from galspin.exact.scalar import ONE, ZERO, ExactScalar


def _coerce_entry(x):
    if isinstance(x, (ExactScalar, PolyFrac)):
        return x
    return ExactScalar.coerce(x)


class Matrix:
    __slots__ = ("shape", "entries")

    def __init__(self, shape, entries=None):
        self.shape = tuple(shape)
        self.entries = {}
        if entries:
            for (i, j), v in entries.items():
                v = _coerce_entry(v)
                if v:
                    self.entries[(i, j)] = v

    @classmethod
    def _of(cls, shape, entries):
        m = object.__new__(cls)
        m.shape = shape
        m.entries = entries
        return m

    @classmethod
    def zeros(cls, n, m=None) -> "Matrix":
        return cls._of((n, n if m is None else m), {})

    @classmethod
    def identity(cls, n) -> "Matrix":
        return cls._of((n, n), {(i, i): ONE for i in range(n)})

    @classmethod
    def from_rows(cls, rows) -> "Matrix":
        rows = [list(r) for r in rows]
        ncol = len(rows[0]) if rows else 0
        if any(len(r) != ncol for r in rows):
            raise ShapeMismatch("ragged rows")
        return cls((len(rows), ncol), {(i, j): v for i, r in enumerate(rows) for j, v in enumerate(r)})

    @classmethod
    def diag(cls, values) -> "Matrix":
        values = list(values)
        return cls((len(values), len(values)), {(i, i): v for i, v in enumerate(values)})

    @classmethod
    def column(cls, values) -> "Matrix":
        values = list(values)
        return cls((len(values), 1), {(i, 0): v for i, v in enumerate(values)})

    @classmethod
    def blocks(cls, grid) -> "Matrix":
        """Assemble from a 2D grid of blocks; heights agree along rows, widths along columns."""
        heights = [row[0].shape[0] for row in grid]
        widths = [blk.shape[1] for blk in grid[0]]
        out = {}
        r0 = 0
        for bi, row in enumerate(grid):
            if len(row) != len(widths):
                raise ShapeMismatch("ragged block grid")
            c0 = 0
            for bj, blk in enumerate(row):
                if blk.shape != (heights[bi], widths[bj]):
                    raise ShapeMismatch(f"block ({bi},{bj}) has shape {blk.shape}")
                for (i, j), v in blk.entries.items():
                    out[(r0 + i, c0 + j)] = v
                c0 += widths[bj]
            r0 += heights[bi]
        return cls._of((r0, sum(widths)), out)

    # access -----------------------------------------------------------
    def __getitem__(self, ij):
        return self.entries.get(ij, ZERO)

    def rows(self):
        n, m = self.shape
        return [[self[i, j] for j in range(m)] for i in range(n)]

    def block(self, bi, bj, nb) -> "Matrix":
        out = {}
        for (i, j), v in self.entries.items():
            if i // nb == bi and j // nb == bj:
                out[(i - bi * nb, j - bj * nb)] = v
        return Matrix._of((nb, nb), out)

    def submatrix(self, row: int, col: int, nrows: int, ncols: int) -> "Matrix":
        out = {(i - row, j - col): v for (i, j), v in self.entries.items()
               if row <= i < row + nrows and col <= j < col + ncols}
        return Matrix._of((nrows, ncols), out)

    def is_zero(self) -> bool:
        return not self.entries

    __bool__ = None  # ambiguous; use is_zero()

    def is_square(self) -> bool:
        return self.shape[0] == self.shape[1]

    # arithmetic -------------------------------------------------------
    def _check_same(self, other):
        if self.shape != other.shape:
            raise ShapeMismatch(f"shapes {self.shape} and {other.shape} differ")

    def __add__(self, other: "Matrix") -> "Matrix":
        if not isinstance(other, Matrix):
            return NotImplemented
        self._check_same(other)
        out = dict(self.entries)
        for k, v in other.entries.items():
            s = out.get(k)
            if s is None:
                out[k] = v
            else:
                s = s + v
                if s:
                    out[k] = s
                else:
                    del out[k]
        return Matrix._of(self.shape, out)

    def __neg__(self) -> "Matrix":
        return Matrix._of(self.shape, {k: -v for k, v in self.entries.items()})

    def __sub__(self, other: "Matrix") -> "Matrix":
        if not isinstance(other, Matrix):
            return NotImplemented
        return self + (-other)

    def scale(self, c) -> "Matrix":
        c = _coerce_entry(c)
        if not c:
            return Matrix._of(self.shape, {})
        out = {}
        for k, v in self.entries.items():
            w = v * c
            if w:
                out[k] = w
        return Matrix._of(self.shape, out)

    def matmul(self, other: "Matrix") -> "Matrix":
        if self.shape[1] != other.shape[0]:
            raise ShapeMismatch(f"cannot multiply {self.shape} by {other.shape}")
        by_row = {}
        for (k, j), v in other.entries.items():
            by_row.setdefault(k, []).append((j, v))
        acc = {}
        for (i, k), a in self.entries.items():
            for j, b in by_row.get(k, ()):
                key = (i, j)
                p = a * b
                s = acc.get(key)
                acc[key] = p if s is None else s + p
        return Matrix._of((self.shape[0], other.shape[1]), {k: v for k, v in acc.items() if v})

    def __mul__(self, other):
        if isinstance(other, Matrix):
            return self.matmul(other)
        try:
            return self.scale(other)
        except TypeError:
            return NotImplemented

    def __rmul__(self, other):
        try:
            return self.scale(other)
        except TypeError:
            return NotImplemented

    __matmul__ = matmul

    def __pow__(self, n: int) -> "Matrix":
        result = Matrix.identity(self.shape[0])
        for _ in range(n):
            result = result * self
        return result

    def commutator(self, other: "Matrix") -> "Matrix":
        return self * other - other * self

    def anticommutator(self, other: "Matrix") -> "Matrix":
        return self * other + other * self

    def transpose(self) -> "Matrix":
        return Matrix._of((self.shape[1], self.shape[0]), {(j, i): v for (i, j), v in self.entries.items()})

    @property
    def T(self) -> "Matrix":
        return self.transpose()

    def conj(self) -> "Matrix":
        return Matrix._of(self.shape, {k: v.conj() for k, v in self.entries.items()})

    def dagger(self) -> "Matrix":
        return self.transpose().conj()

    def trace(self):
        if not self.is_square():
            raise ShapeMismatch("trace of a non-square matrix")
        acc = ZERO
        for i in range(self.shape[0]):
            acc = acc + self[i, i]
        return acc

    def det(self):
        if not self.is_square():
            raise ShapeMismatch("determinant of a non-square matrix")
        return _det(self.rows())

    def map(self, fn) -> "Matrix":
        return Matrix(self.shape, {k: fn(v) for k, v in self.entries.items()})

    def subs(self, values: dict) -> "Matrix":
        def sub(v):
            if isinstance(v, PolyFrac):
                r = v.subs(values)
                return r.to_scalar() if r.is_constant() else r
            return v
        return self.map(sub)

    def to_scalars(self) -> "Matrix":
        return self.map(lambda v: v.to_scalar() if isinstance(v, PolyFrac) else v)

    # comparison -------------------------------------------------------
    def __eq__(self, other):
        if not isinstance(other, Matrix):
            return NotImplemented
        if self.shape != other.shape:
            return False
        return (self - other).is_zero()

    __hash__ = None

    def first_nonzero(self):
        """(row, col, value) of the first nonzero entry, 1-based, or None."""
        if not self.entries:
            return None
        i, j = min(self.entries)
        return i + 1, j + 1, self.entries[(i, j)]

    def __str__(self):
        rows = [[str(v) for v in r] for r in self.rows()]
        width = max((len(s) for r in rows for s in r), default=1)
        return "\n".join("[" + "  ".join(s.rjust(width) for s in r) + "]" for r in rows)

    def __repr__(self):
        return f"Matrix{self.shape}(\n{self}\n)"


def _det(rows):
    n = len(rows)
    if n == 0:
        return ONE
    if n == 1:
        return rows[0][0]
    if n == 2:
        return rows[0][0] * rows[1][1] - rows[0][1] * rows[1][0]
    acc = ZERO
    for j, v in enumerate(rows[0]):
        if not v:
            continue
        minor = [r[:j] + r[j + 1:] for r in rows[1:]]
        t = v * _det(minor)
        acc = acc + t if j % 2 == 0 else acc - t
    return acc
