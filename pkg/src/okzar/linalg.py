"""Exact rational linear algebra.

Everything here works over `fractions.Fraction` (exported as `Rat`); there is
no floating point anywhere. Matrices are tiny (at most 8x8 in practice), so
plain Gaussian elimination with exact pivoting is the right tool.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Sequence

from .errors import InputError

Rat = Fraction

Vector = tuple[Rat, ...]


def as_rat_vector(values: Iterable) -> Vector:
    return tuple(Rat(v) for v in values)


@dataclass(frozen=True)
class Mat:
    """Immutable dense matrix with row-major rational entries."""

    rows: int
    cols: int
    entries: tuple[Rat, ...]

    def __post_init__(self) -> None:
        if len(self.entries) != self.rows * self.cols:
            raise InputError(
                f"matrix needs {self.rows * self.cols} entries, got {len(self.entries)}"
            )

    @staticmethod
    def from_rows(rows: Sequence[Sequence]) -> "Mat":
        nrows = len(rows)
        ncols = len(rows[0]) if nrows else 0
        if any(len(r) != ncols for r in rows):
            raise InputError("ragged rows")
        return Mat(nrows, ncols, tuple(Rat(x) for r in rows for x in r))

    @staticmethod
    def from_columns(cols: Sequence[Sequence]) -> "Mat":
        ncols = len(cols)
        nrows = len(cols[0]) if ncols else 0
        if any(len(c) != nrows for c in cols):
            raise InputError("ragged columns")
        return Mat(nrows, ncols, tuple(Rat(cols[j][i]) for i in range(nrows) for j in range(ncols)))

    @staticmethod
    def identity(n: int) -> "Mat":
        return Mat(n, n, tuple(Rat(1 if i == j else 0) for i in range(n) for j in range(n)))

    def at(self, i: int, j: int) -> Rat:
        return self.entries[i * self.cols + j]

    def row(self, i: int) -> Vector:
        return self.entries[i * self.cols : (i + 1) * self.cols]

    def column(self, j: int) -> Vector:
        return tuple(self.entries[i * self.cols + j] for i in range(self.rows))

    def row_list(self) -> list[list[Rat]]:
        return [list(self.row(i)) for i in range(self.rows)]

    def transpose(self) -> "Mat":
        return Mat(self.cols, self.rows, tuple(self.at(i, j) for j in range(self.cols) for i in range(self.rows)))

    def mul_vec(self, v: Sequence) -> Vector:
        if len(v) != self.cols:
            raise InputError(f"vector of length {len(v)} against {self.cols} columns")
        vv = [Rat(x) for x in v]
        return tuple(sum((self.at(i, j) * vv[j] for j in range(self.cols)), Rat(0)) for i in range(self.rows))

    def mul(self, other: "Mat") -> "Mat":
        if self.cols != other.rows:
            raise InputError("inner dimensions do not match")
        out = []
        for i in range(self.rows):
            ri = self.row(i)
            for j in range(other.cols):
                out.append(sum((ri[k] * other.at(k, j) for k in range(self.cols)), Rat(0)))
        return Mat(self.rows, other.cols, tuple(out))

    def is_integral(self) -> bool:
        return all(x.denominator == 1 for x in self.entries)


def _eliminate(rows: list[list[Rat]]) -> tuple[list[list[Rat]], list[int]]:
    """Forward elimination, returning the echelon rows and pivot columns."""
    rows = [list(r) for r in rows]
    nrows = len(rows)
    ncols = len(rows[0]) if nrows else 0
    pivots: list[int] = []
    r = 0
    for c in range(ncols):
        piv = next((i for i in range(r, nrows) if rows[i][c] != 0), None)
        if piv is None:
            continue
        rows[r], rows[piv] = rows[piv], rows[r]
        inv = 1 / rows[r][c]
        rows[r] = [x * inv for x in rows[r]]
        for i in range(nrows):
            if i != r and rows[i][c] != 0:
                f = rows[i][c]
                rows[i] = [a - f * b for a, b in zip(rows[i], rows[r])]
        pivots.append(c)
        r += 1
        if r == nrows:
            break
    return rows, pivots


def rank(rows: Sequence[Sequence]) -> int:
    rs = [[Rat(x) for x in r] for r in rows]
    if not rs:
        return 0
    _, pivots = _eliminate(rs)
    return len(pivots)


def rref(rows: Sequence[Sequence]) -> list[list[Rat]]:
    """Reduced row echelon form with zero rows dropped."""
    rs = [[Rat(x) for x in r] for r in rows]
    if not rs:
        return []
    red, pivots = _eliminate(rs)
    return red[: len(pivots)]


def determinant(a: Mat) -> Rat:
    """Exact determinant via elimination without normalization."""
    if a.rows != a.cols:
        raise InputError(f"determinant of a {a.rows}x{a.cols} matrix")
    n = a.rows
    rows = a.row_list()
    det = Rat(1)
    for c in range(n):
        piv = next((i for i in range(c, n) if rows[i][c] != 0), None)
        if piv is None:
            return Rat(0)
        if piv != c:
            rows[c], rows[piv] = rows[piv], rows[c]
            det = -det
        det *= rows[c][c]
        inv = 1 / rows[c][c]
        for i in range(c + 1, n):
            if rows[i][c] != 0:
                f = rows[i][c] * inv
                rows[i] = [x - f * y for x, y in zip(rows[i], rows[c])]
    return det


def solve_exact(a: Mat, b: Sequence) -> Vector | None:
    """Unique solution of A x = b, or None.

    Returns the solution when A has full column rank and the (possibly
    overdetermined) system is consistent; returns None when the rank is
    deficient or the system is inconsistent.
    """
    if len(b) != a.rows:
        raise InputError(f"right-hand side of length {len(b)} against {a.rows} rows")
    aug = [list(a.row(i)) + [Rat(b[i])] for i in range(a.rows)]
    red, pivots = _eliminate(aug)
    if a.cols in pivots:  # pivot in the last (rhs) column: inconsistent
        return None
    if len(pivots) < a.cols:  # rank-deficient: no unique solution
        return None
    x = [Rat(0)] * a.cols
    for r, c in enumerate(pivots):
        x[c] = red[r][-1]
    return tuple(x)


def invert(a: Mat) -> Mat:
    if a.rows != a.cols:
        raise InputError("only square matrices invert")
    n = a.rows
    aug = [list(a.row(i)) + [Rat(1 if i == j else 0) for j in range(n)] for i in range(n)]
    red, pivots = _eliminate(aug)
    if pivots != list(range(n)):
        raise InputError("singular matrix")
    return Mat.from_rows([r[n:] for r in red])


def is_lattice_basis(vectors: Sequence[Sequence]) -> bool:
    """True iff the integer vectors are a Z-basis of Z^n (absolute determinant 1)."""
    if not vectors:
        raise InputError("no vectors given")
    n = len(vectors[0])
    if len(vectors) != n or any(len(v) != n for v in vectors):
        raise InputError(f"need exactly {n} vectors of length {n}")
    m = Mat.from_columns(vectors)
    if not m.is_integral():
        raise InputError("lattice basis test needs integral vectors")
    return abs(determinant(m)) == 1
