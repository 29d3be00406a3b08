"""Linear block codes in canonical rref form.

A :class:`LinearCode` stores the unique reduced row echelon generator of its
row space, so code equality is plain matrix equality.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Iterator, Sequence

from .errors import ShapeError, UnsupportedField
from .fields import Field, prime_basis, prime_subfield, trace_raw
from .exact_linalg import Matrix, kernel_basis, row_basis


@dataclass(frozen=True)
class LinearCode:
    field: Field
    n: int
    gen: Matrix  # k x n, rref, no zero rows

    @property
    def k(self) -> int:
        return self.gen.nrows

    def __repr__(self) -> str:
        return f"LinearCode([{self.n}, {self.k}] over {self.field.spec})"

    def contains(self, word: Sequence) -> bool:
        word = [self.field.coerce(x) for x in word]
        if len(word) != self.n:
            raise ShapeError("word length differs from code length")
        rows = self.gen.rows + (tuple(word),)
        return row_basis(Matrix(self.field, rows, self.n)).nrows == self.k

    def codewords(self) -> Iterator[tuple]:
        """Every codeword (finite fields only; q^k of them)."""
        F = self.field
        for coeffs in itertools.product(F.elements(), repeat=self.k):
            word = [F.zero] * self.n
            for c, row in zip(coeffs, self.gen.rows):
                if c != F.zero:
                    word = [F.add(w, F.mul(c, x)) for w, x in zip(word, row)]
            yield tuple(word)

    def key(self) -> bytes:
        """Order-independent byte key (finite fields with q <= 256)."""
        return bytes(x for row in self.gen.rows for x in row)

    def to_json(self) -> dict:
        return {"type": "code", "field": self.field.spec, "n": self.n, "k": self.k,
                "generator": self.gen.to_json()}

    @classmethod
    def from_json(cls, obj: dict) -> "LinearCode":
        M = Matrix.from_json(obj["generator"])
        C = from_generator(M)
        if C.n != obj["n"]:
            raise ShapeError("n does not match the generator")
        return C


def from_generator(M: Matrix) -> LinearCode:
    """The row space of ``M``."""
    return LinearCode(M.field, M.ncols, row_basis(M))


def zero_code(field: Field, n: int) -> LinearCode:
    return LinearCode(field, n, Matrix(field, (), n))


def full_space(field: Field, n: int) -> LinearCode:
    return LinearCode(field, n, Matrix.identity(field, n))


def dual(C: LinearCode) -> LinearCode:
    """Orthogonal complement under ``(w1, w2) -> w1 . w2^T``."""
    return from_generator(kernel_basis(C.gen))


def _require_finite(C: LinearCode):
    if not C.field.is_finite:
        raise UnsupportedField(f"{C.field} has no trace to a prime field")


def trace_code(C: LinearCode) -> LinearCode:
    """Componentwise Tr_{q/p} image of ``C`` as a code over F_p."""
    _require_finite(C)
    F = C.field
    Fp = prime_subfield(F)
    rows = []
    for row in C.gen.rows:
        for beta in prime_basis(F):
            rows.append([trace_raw(F, F.mul(beta, x)) for x in row])
    return from_generator(Matrix._raw(Fp, rows, C.n))


def subfield_subcode(C: LinearCode) -> LinearCode:
    """Codewords of ``C`` whose coordinates all lie in F_p, as a code over F_p.

    Writes each message coordinate in the F_p-basis and solves the linear
    system forcing the non-constant coefficients of every codeword
    coordinate to vanish.
    """
    _require_finite(C)
    F = C.field
    Fp = prime_subfield(F)
    if F.r == 1:
        return LinearCode(Fp, C.n, Matrix(Fp, C.gen.rows, C.n))
    basis = prime_basis(F)
    # column (i, s) of the system is the codeword of x^s * g_i, expanded in digits
    cols = []
    for row in C.gen.rows:
        for beta in basis:
            cols.append([F.digits(F.mul(beta, x)) for x in row])
    n_unknowns = len(cols)
    if n_unknowns == 0:
        return zero_code(Fp, C.n)
    equations = []
    for j in range(C.n):
        for t in range(1, F.r):
            equations.append([cols[u][j][t] for u in range(n_unknowns)])
    if equations:
        sols = kernel_basis(Matrix._raw(Fp, equations, n_unknowns)).rows
    else:  # pragma: no cover - r > 1 and n > 0 always produce equations
        sols = Matrix.identity(Fp, n_unknowns).rows
    words = []
    for a in sols:
        words.append([Fp.sum(Fp.mul(a[u], cols[u][j][0]) for u in range(n_unknowns))
                      for j in range(C.n)])
    return from_generator(Matrix._raw(Fp, words, C.n))


def is_degenerate(C: LinearCode) -> bool:
    """True iff some coordinate vanishes on every codeword."""
    z = C.field.zero
    return any(all(row[j] == z for row in C.gen.rows) for j in range(C.n))


def enumerate_subspaces(field: Field, n: int, k: int) -> Iterator[LinearCode]:
    """Every k-dimensional subspace of F^n, via its rref generator."""
    F = field
    elems = F.elements()
    for pivots in itertools.combinations(range(n), k):
        free = [(i, c) for i, p in enumerate(pivots) for c in range(p + 1, n) if c not in pivots]
        for values in itertools.product(elems, repeat=len(free)):
            rows = [[F.zero] * n for _ in range(k)]
            for i, p in enumerate(pivots):
                rows[i][p] = F.one
            for (i, c), v in zip(free, values):
                rows[i][c] = v
            yield LinearCode(F, n, Matrix._raw(F, rows, n))
