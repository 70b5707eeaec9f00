"""Exact rational scalars, dense matrices, and kernel computation.

Scalars are `fractions.Fraction`: arbitrary precision, always in lowest
terms, positive denominator.  Matrices are immutable dense grids of them
with entrywise equality.  The nullspace routine runs a fraction-free
elimination with a fixed pivot rule (leftmost nonzero column, lowest row
index) so every result is reproducible bit for bit.

Dimensions stay tiny here (endomorphism spaces of small representations,
truncated monomial bases), so there is deliberately no sparse machinery.
"""

from __future__ import annotations

from fractions import Fraction
from math import gcd, lcm

Scalar = Fraction

_MINUS = "−"  # typographic minus, accepted on input


def parse_scalar(text: str) -> Fraction:
    """Parse "p/q" or "p", with an optional leading minus sign."""
    return Fraction(text.strip().replace(_MINUS, "-"))


def format_scalar(q) -> str:
    """Render as "p/q", or just "p" when the denominator is 1."""
    q = Fraction(q)
    if q.denominator == 1:
        return str(q.numerator)
    return f"{q.numerator}/{q.denominator}"


_ZERO = Fraction(0)
_ONE = Fraction(1)


class Matrix:
    """Immutable dense matrix over Fraction."""

    __slots__ = ("rows", "cols", "entries")

    def __init__(self, rows, cols, entries):
        entries = tuple(e if type(e) is Fraction else Fraction(e) for e in entries)
        if len(entries) != rows * cols:
            raise ValueError(f"need {rows * cols} entries, got {len(entries)}")
        self.rows = rows
        self.cols = cols
        self.entries = entries

    @classmethod
    def _make(cls, rows, cols, entries):
        """Trusted constructor: entries must already be a Fraction tuple."""
        m = object.__new__(cls)
        m.rows = rows
        m.cols = cols
        m.entries = entries
        return m

    @classmethod
    def from_rows(cls, rows) -> Matrix:
        nr = len(rows)
        nc = len(rows[0]) if nr else 0
        if any(len(r) != nc for r in rows):
            raise ValueError("ragged rows")
        return cls(nr, nc, [e for r in rows for e in r])

    @classmethod
    def zeros(cls, rows, cols) -> Matrix:
        return cls._make(rows, cols, (_ZERO,) * (rows * cols))

    @classmethod
    def identity(cls, n) -> Matrix:
        return _cached_identity(n)

    def __getitem__(self, ij):
        i, j = ij
        return self.entries[i * self.cols + j]

    def row(self, i):
        return self.entries[i * self.cols : (i + 1) * self.cols]

    def to_rows(self):
        return [list(self.row(i)) for i in range(self.rows)]

    def _check_same_shape(self, other):
        if self.rows != other.rows or self.cols != other.cols:
            raise ValueError(
                f"shape mismatch: {self.rows}x{self.cols} vs {other.rows}x{other.cols}"
            )

    def __add__(self, other):
        self._check_same_shape(other)
        return Matrix._make(self.rows, self.cols,
                            tuple(a + b for a, b in zip(self.entries, other.entries)))

    def __sub__(self, other):
        self._check_same_shape(other)
        return Matrix._make(self.rows, self.cols,
                            tuple(a - b for a, b in zip(self.entries, other.entries)))

    def __neg__(self):
        return Matrix._make(self.rows, self.cols, tuple(-a for a in self.entries))

    def __mul__(self, other):
        if isinstance(other, Matrix):
            if self.cols != other.rows:
                raise ValueError(
                    f"shape mismatch: {self.rows}x{self.cols} * {other.rows}x{other.cols}"
                )
            n, m, k = self.rows, other.cols, self.cols
            a, b = self.entries, other.entries
            out = []
            for i in range(n):
                arow = [(t, v) for t, v in enumerate(a[i * k : (i + 1) * k]) if v]
                if not arow:
                    out.extend([_ZERO] * m)
                    continue
                for j in range(m):
                    s = _ZERO
                    for t, v in arow:
                        w = b[t * m + j]
                        if w:
                            s = s + v * w
                    out.append(s)
            return Matrix._make(n, m, tuple(out))
        if isinstance(other, (int, Fraction)):
            q = other if type(other) is Fraction else Fraction(other)
            if q == 1:
                return self
            if q == -1:
                return -self
            return Matrix._make(self.rows, self.cols,
                                tuple(a * q if a else _ZERO for a in self.entries))
        return NotImplemented

    def __rmul__(self, other):
        if isinstance(other, (int, Fraction)):
            return self.__mul__(other)
        return NotImplemented

    def commutator(self, other) -> Matrix:
        """ab - ba; both matrices must be square of the same size."""
        if self.rows != self.cols or other.rows != other.cols:
            raise ValueError("commutator needs square matrices")
        self._check_same_shape(other)
        return self * other - other * self

    def transpose(self) -> Matrix:
        return Matrix(self.cols, self.rows,
                      [self[i, j] for j in range(self.cols) for i in range(self.rows)])

    def trace(self) -> Fraction:
        if self.rows != self.cols:
            raise ValueError("trace needs a square matrix")
        return sum((self[i, i] for i in range(self.rows)), Fraction(0))

    @property
    def is_zero(self) -> bool:
        return all(e == 0 for e in self.entries)

    def __bool__(self):
        return not self.is_zero

    @property
    def is_identity(self) -> bool:
        return self.rows == self.cols and self == Matrix.identity(self.rows)

    def scalar_value(self):
        """Return c if this matrix equals c * identity, else None."""
        if self.rows != self.cols or self.rows == 0:
            return None
        c = self[0, 0]
        for i in range(self.rows):
            for j in range(self.cols):
                if self[i, j] != (c if i == j else 0):
                    return None
        return c

    def __eq__(self, other):
        if not isinstance(other, Matrix):
            return NotImplemented
        return (self.rows, self.cols, self.entries) == (other.rows, other.cols, other.entries)

    def __hash__(self):
        return hash((self.rows, self.cols, self.entries))

    def render(self) -> str:
        rows = ",".join(
            "[" + ",".join(format_scalar(e) for e in self.row(i)) + "]"
            for i in range(self.rows)
        )
        return "[" + rows + "]"

    def __repr__(self):
        return f"Matrix({self.rows}x{self.cols} {self.render()})"


def _cached_identity(n):
    m = _IDENTITY_CACHE.get(n)
    if m is None:
        m = Matrix._make(
            n, n, tuple(_ONE if i == j else _ZERO for i in range(n) for j in range(n))
        )
        _IDENTITY_CACHE[n] = m
    return m


_IDENTITY_CACHE: dict = {}


def _integer_rows(m: Matrix):
    """Copy of m with each row scaled to integers (kernel unchanged)."""
    out = []
    for i in range(m.rows):
        row = m.row(i)
        den = 1
        for e in row:
            den = lcm(den, e.denominator)
        out.append([int(e * den) for e in row])
    return out


def _echelon(rows):
    """Fraction-free forward elimination in place; returns pivot columns.

    Pivot rule: leftmost column with a nonzero entry, lowest row index.
    Rows are gcd-normalized after each step to keep integers small.
    """
    nrows = len(rows)
    ncols = len(rows[0]) if nrows else 0
    pivots = []
    r = 0
    for c in range(ncols):
        pr = None
        for i in range(r, nrows):
            if rows[i][c] != 0:
                pr = i
                break
        if pr is None:
            continue
        rows[r], rows[pr] = rows[pr], rows[r]
        piv = rows[r][c]
        for i in range(r + 1, nrows):
            v = rows[i][c]
            if v == 0:
                continue
            row = rows[i]
            top = rows[r]
            for j in range(c, ncols):
                row[j] = row[j] * piv - top[j] * v
            g = 0
            for j in range(c, ncols):
                g = gcd(g, row[j])
            if g > 1:
                for j in range(c, ncols):
                    row[j] //= g
        pivots.append(c)
        r += 1
        if r == nrows:
            break
    return pivots


def rank(m: Matrix) -> int:
    return len(_echelon(_integer_rows(m)))


def nullspace(m: Matrix) -> list[Matrix]:
    """Exact basis of the right kernel, one column vector per free column.

    Each vector has its free variable set to 1; the basis is ordered by
    free column index, so the output is deterministic.
    """
    rows = _integer_rows(m)
    pivots = _echelon(rows)
    pivot_set = set(pivots)
    free = [c for c in range(m.cols) if c not in pivot_set]
    basis = []
    for fc in free:
        v = [Fraction(0)] * m.cols
        v[fc] = Fraction(1)
        for k in range(len(pivots) - 1, -1, -1):
            pc = pivots[k]
            row = rows[k]
            s = Fraction(0)
            for j in range(pc + 1, m.cols):
                if row[j] and v[j]:
                    s += Fraction(row[j]) * v[j]
            v[pc] = -s / row[pc]
        basis.append(Matrix(m.cols, 1, v))
    return basis
