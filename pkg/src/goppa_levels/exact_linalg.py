"""Dense exact linear algebra over any :class:`~goppa_levels.fields.Field`.

Matrices hold raw field values.  Elimination always takes the first
nonzero entry as pivot, so echelon forms and minor signs are reproducible.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations
from typing import Iterable, Sequence

from .errors import FieldMismatch, ShapeError
from .fields import Field, FieldElement, parse_field


@dataclass(frozen=True)
class Matrix:
    field: Field
    rows: tuple  # tuple of row tuples of raw values
    ncols: int

    @classmethod
    def from_rows(cls, field: Field, rows: Iterable[Sequence], ncols: int | None = None) -> "Matrix":
        rows = tuple(tuple(field.coerce(x) for x in row) for row in rows)
        if ncols is None:
            if not rows:
                raise ShapeError("ncols is required for a matrix with no rows")
            ncols = len(rows[0])
        if any(len(r) != ncols for r in rows):
            raise ShapeError("ragged rows")
        return cls(field, rows, ncols)

    @classmethod
    def _raw(cls, field, rows, ncols) -> "Matrix":
        return cls(field, tuple(tuple(r) for r in rows), ncols)

    @classmethod
    def zeros(cls, field: Field, nrows: int, ncols: int) -> "Matrix":
        return cls(field, tuple((field.zero,) * ncols for _ in range(nrows)), ncols)

    @classmethod
    def identity(cls, field: Field, n: int) -> "Matrix":
        return cls(field, tuple(tuple(field.one if i == j else field.zero for j in range(n))
                                for i in range(n)), n)

    @property
    def nrows(self) -> int:
        return len(self.rows)

    @property
    def shape(self) -> tuple[int, int]:
        return self.nrows, self.ncols

    def __getitem__(self, ij) -> FieldElement:
        i, j = ij
        return FieldElement(self.field, self.rows[i][j])

    @property
    def T(self) -> "Matrix":
        return Matrix(self.field, tuple(zip(*self.rows)) if self.rows else
                      tuple(() for _ in range(self.ncols)), self.nrows)

    def __matmul__(self, other: "Matrix") -> "Matrix":
        return matmul(self, other)

    def is_zero(self) -> bool:
        z = self.field.zero
        return all(x == z for row in self.rows for x in row)

    def to_list(self) -> list[list]:
        return [[self.field.to_json_value(x) for x in row] for row in self.rows]

    def to_json(self) -> dict:
        return {"field": self.field.spec, "rows": self.nrows, "cols": self.ncols,
                "entries": self.to_list()}

    @classmethod
    def from_json(cls, obj: dict) -> "Matrix":
        F = parse_field(obj["field"])
        rows = [[F.from_json_value(x) for x in row] for row in obj["entries"]]
        M = cls._raw(F, rows, obj["cols"])
        if M.nrows != obj["rows"]:
            raise ShapeError("row count does not match entries")
        return M

    def __str__(self) -> str:
        fmt = self.field.format
        return "\n".join("[" + ", ".join(fmt(x) for x in row) + "]" for row in self.rows)


def matmul(A: Matrix, B: Matrix) -> Matrix:
    if A.field != B.field:
        raise FieldMismatch("matrices over different fields")
    if A.ncols != B.nrows:
        raise ShapeError(f"cannot multiply {A.shape} by {B.shape}")
    F = A.field
    cols = B.T.rows
    out = []
    for row in A.rows:
        out.append(tuple(F.sum(F.mul(a, b) for a, b in zip(row, col) if a != F.zero and b != F.zero)
                         for col in cols))
    return Matrix(F, tuple(out), B.ncols)


def _rref_rows(F: Field, rows: list[list]) -> tuple[list[list], list[int]]:
    """In-place reduced row echelon form; returns (rows, pivot columns)."""
    zero = F.zero
    nrows = len(rows)
    ncols = len(rows[0]) if rows else 0
    pivots = []
    r = 0
    for c in range(ncols):
        if r == nrows:
            break
        p = next((i for i in range(r, nrows) if rows[i][c] != zero), None)
        if p is None:
            continue
        rows[r], rows[p] = rows[p], rows[r]
        piv = rows[r]
        inv = F.inv(piv[c])
        if inv != F.one:
            piv = rows[r] = [F.mul(x, inv) for x in piv]
        for i in range(nrows):
            if i != r:
                f = rows[i][c]
                if f != zero:
                    rows[i] = [F.sub(x, F.mul(f, y)) if y != zero else x
                               for x, y in zip(rows[i], piv)]
        pivots.append(c)
        r += 1
    return rows, pivots


def rref(M: Matrix) -> tuple[Matrix, int, tuple[int, ...]]:
    """Reduced row echelon form, rank and pivot columns (0-based)."""
    rows, pivots = _rref_rows(M.field, [list(r) for r in M.rows])
    return Matrix._raw(M.field, rows, M.ncols), len(pivots), tuple(pivots)


def rank(M: Matrix) -> int:
    return rref(M)[1]


def row_basis(M: Matrix) -> Matrix:
    """The nonzero rows of rref(M)."""
    R, k, _ = rref(M)
    return Matrix(M.field, R.rows[:k], M.ncols)


def kernel_basis(M: Matrix) -> Matrix:
    """Rows spanning ``{x : M x^T = 0}``, one per non-pivot column."""
    F = M.field
    R, k, pivots = rref(M)
    free = [c for c in range(M.ncols) if c not in set(pivots)]
    basis = []
    for f in free:
        v = [F.zero] * M.ncols
        v[f] = F.one
        for i, pc in enumerate(pivots):
            v[pc] = F.neg(R.rows[i][f])
        basis.append(v)
    return Matrix._raw(F, basis, M.ncols)


def det(M: Matrix):
    """Determinant (raw value) by elimination with row-swap sign tracking."""
    if M.nrows != M.ncols:
        raise ShapeError("determinant of a non-square matrix")
    return _det_rows(M.field, [list(r) for r in M.rows])


def _det_rows(F: Field, a: list[list]):
    n = len(a)
    zero = F.zero
    result = F.one
    for c in range(n):
        p = next((i for i in range(c, n) if a[i][c] != zero), None)
        if p is None:
            return zero
        if p != c:
            a[c], a[p] = a[p], a[c]
            result = F.neg(result)
        piv = a[c][c]
        result = F.mul(result, piv)
        inv = F.inv(piv)
        for i in range(c + 1, n):
            f = a[i][c]
            if f != zero:
                f = F.mul(f, inv)
                row_c = a[c]
                a[i] = [F.sub(x, F.mul(f, y)) if y != zero else x for x, y in zip(a[i], row_c)]
    return result


def index_tuples(m: int, size: int) -> list[tuple[int, ...]]:
    """All strictly increasing 1-based tuples of ``size`` indices from 1..m."""
    return list(combinations(range(1, m + 1), size))


def maximal_minors(M: Matrix, along: str = "rows") -> list[tuple[tuple[int, ...], object]]:
    """All maximal minors in lexicographic order of 1-based index tuples.

    ``along="rows"`` selects row subsets of a tall matrix;
    ``along="cols"`` selects column subsets of a wide one.
    """
    if along == "cols":
        return maximal_minors(M.T, "rows")
    if along != "rows":
        raise ValueError(f"along must be 'rows' or 'cols', not {along!r}")
    m, k = M.shape
    if m < k:
        raise ShapeError(f"{m}x{k} matrix has no maximal row minors")
    F = M.field
    out = []
    for tup in index_tuples(m, k):
        out.append((tup, _det_rows(F, [list(M.rows[i - 1]) for i in tup])))
    return out
