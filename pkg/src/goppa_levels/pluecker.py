"""Plücker coordinates of codes and of level structures.

The Plücker vector of a code of dimension k in F^n collects the maximal
minors of an ``n x (n-k)`` parity-check matrix over all increasing index
tuples, in lexicographic order.  It is projective, so we store it divided by
its first nonzero entry.

For a canonical level structure of degree d (``m = n-d-1`` rows per minor)
the coordinates have closed forms.  Writing ``A(iota)`` for the value at
all-one scalars,

* ``i_1 = 1``:  ``A = (-1)^(n-d+1) * V(alpha_{i_2..i_m}) * h_{i_2} ... h_{i_m}``
* ``i_1 >= 2``: ``A = V(alpha_{i_1..i_m}) * h_{i_1} ... h_{i_m}``

where ``V`` is the Vandermonde product ``prod_{r<s} (alpha_{i_s} - alpha_{i_r})``;
general scalars divide ``A(iota)`` by ``prod_{i in iota} l_i``.
"""

from __future__ import annotations

import warnings
from dataclasses import dataclass
from typing import Sequence

from .codes import LinearCode, dual
from .errors import (
    DegreeOutOfRange,
    FirstCoordinateZero,
    FullSpace,
    NotInFiber,
    ShapeMismatch,
    ZeroCoordinateObstruction,
)
from .fields import Field, parse_field
from .level_structures import LevelStructure, code, h_values
from .exact_linalg import index_tuples, maximal_minors


@dataclass(frozen=True)
class PlueckerVector:
    field: Field
    n: int
    k: int
    tuples: tuple  # 1-based index tuples of size n-k, lexicographic
    coords: tuple  # raw values, first nonzero equal to one

    def as_dict(self) -> dict:
        return dict(zip(self.tuples, self.coords))

    def to_json(self) -> dict:
        F = self.field
        return {"type": "pluecker", "field": F.spec, "n": self.n, "k": self.k,
                "coords": [F.to_json_value(c) for c in self.coords],
                "tuples": [list(t) for t in self.tuples]}

    @classmethod
    def from_json(cls, obj: dict) -> "PlueckerVector":
        F = parse_field(obj["field"])
        n, k = int(obj["n"]), int(obj["k"])
        tuples = tuple(tuple(t) for t in obj.get("tuples") or index_tuples(n, n - k))
        return normalize(F, n, k, tuples, [F.from_json_value(c) for c in obj["coords"]])


def normalize(F: Field, n: int, k: int, tuples, coords) -> PlueckerVector:
    """Divide by the first nonzero coordinate."""
    coords = list(coords)
    first = next((c for c in coords if c != F.zero), None)
    if first is None:
        raise ValueError("the zero vector has no Plücker normalization")
    inv = F.inv(first)
    return PlueckerVector(F, n, k, tuple(tuples), tuple(F.mul(c, inv) for c in coords))


def pluecker_of_code(C: LinearCode) -> PlueckerVector:
    """Normalized maximal minors of a parity-check matrix of ``C``."""
    if C.k >= C.n:
        raise FullSpace("the full space has no parity-check columns")
    H = dual(C).gen.T  # n x (n-k)
    minors = maximal_minors(H, "rows")
    return normalize(C.field, C.n, C.k, [t for t, _ in minors], [v for _, v in minors])


def _vandermonde(F: Field, values: Sequence):
    acc = F.one
    for s in range(len(values)):
        for r in range(s):
            acc = F.mul(acc, F.sub(values[s], values[r]))
    return acc


def alpha_part(F: Field, n: int, d: int, points: Sequence, hs: Sequence, iota: Sequence[int]):
    """Closed-form coordinate at ``iota`` for all-one scalars.

    ``points`` and ``hs`` are indexed by point number minus two.
    """
    if iota[0] == 1:
        rest = iota[1:]
        value = _vandermonde(F, [points[i - 2] for i in rest])
        value = F.mul(value, F.prod(hs[i - 2] for i in rest))
        return value if (n - d + 1) % 2 == 0 else F.neg(value)
    value = _vandermonde(F, [points[i - 2] for i in iota])
    return F.mul(value, F.prod(hs[i - 2] for i in iota))


def pluecker_closed_form(g: LevelStructure) -> PlueckerVector:
    """Plücker vector of ``code(g)`` from the closed forms, no elimination."""
    if not 0 <= g.d <= g.n - 2:
        raise DegreeOutOfRange(f"degree {g.d} outside [0, {g.n - 2}]")
    F = g.field
    points = g.points
    hs = h_values(F, points)
    ls = g.all_scalars
    tuples = index_tuples(g.n, g.n - g.d - 1)
    coords = []
    for iota in tuples:
        value = alpha_part(F, g.n, g.d, points, hs, iota)
        coords.append(F.div(value, F.prod(ls[i - 1] for i in iota)))
    return normalize(F, g.n, g.d + 1, tuples, coords)


def invariants_y(v: PlueckerVector, strict: bool = False) -> list:
    """Ratios ``H_iota / H_iota1`` against the lexicographically first tuple.

    When that coordinate vanishes the ratios are undefined; with
    ``strict=True`` this raises :class:`FirstCoordinateZero`, otherwise a
    warning is issued and the first nonzero coordinate is used instead.
    """
    F = v.field
    ref = v.coords[0]
    if ref == F.zero:
        if strict:
            raise FirstCoordinateZero(f"coordinate at {v.tuples[0]} is zero")
        warnings.warn(f"coordinate at {v.tuples[0]} is zero; normalizing by the first nonzero one",
                      stacklevel=2)
        ref = next(c for c in v.coords if c != F.zero)
    inv = F.inv(ref)
    return [F.mul(c, inv) for c in v.coords]


def fiber_residual(C: LinearCode, g: LevelStructure) -> list:
    """``y_iota - Y_iota`` between the code's invariants and the structure's.

    All zero iff ``g`` lies in the fiber of the Goppa map over ``C``.
    """
    if C.field != g.field or C.n != g.n or C.k != g.d + 1:
        raise ShapeMismatch(f"code [{C.n}, {C.k}] does not match structure n={g.n}, d={g.d}")
    F = C.field
    with warnings.catch_warnings():
        warnings.simplefilter("ignore")
        y = invariants_y(pluecker_of_code(C))
        Y = invariants_y(pluecker_closed_form(g))
    return [F.sub(a, b) for a, b in zip(y, Y)]


def recover_scalars(C: LinearCode, alphas: Sequence, d: int) -> tuple:
    """Scalars ``l_1..l_{n-1}`` of the structure over ``alphas`` whose code is ``C``.

    For each ``j < n`` pick a tuple ``iota`` containing j but not n and let
    ``iota'`` swap j for n.  By the closed forms
    ``H_iota / H_iota' = (A(iota) / A(iota')) / l_j`` since ``l_n = 1``.
    The candidate is accepted only if it reproduces ``C``.

    Raises
    ------
    NotInFiber
        No structure over these points has code ``C``.
    ZeroCoordinateObstruction
        For some j every usable coordinate pair vanishes.
    """
    F = C.field
    alphas = tuple(F.coerce(a) for a in alphas)
    n = C.n
    if len(alphas) != n - 3:
        raise ShapeMismatch(f"expected {n - 3} alphas for n={n}")
    if C.k != d + 1:
        raise ShapeMismatch(f"code dimension {C.k} differs from d+1={d + 1}")
    if not 0 <= d <= n - 2:
        raise DegreeOutOfRange(f"degree {d} outside [0, {n - 2}]")
    points = (F.zero, F.one) + alphas
    hs = h_values(F, points)
    coords = pluecker_of_code(C).as_dict()
    m = n - d - 1
    scalars = []
    for j in range(1, n):
        for iota in index_tuples(n - 1, m):
            if j not in iota:
                continue
            swapped = tuple(sorted(set(iota) - {j} | {n}))
            hi, hs_ = coords[iota], coords[swapped]
            if hi != F.zero and hs_ != F.zero:
                ratio = F.div(alpha_part(F, n, d, points, hs, iota),
                              alpha_part(F, n, d, points, hs, swapped))
                scalars.append(F.mul(ratio, F.div(hs_, hi)))
                break
        else:
            raise ZeroCoordinateObstruction(f"no nonvanishing coordinate pair isolates l_{j}")
    g = LevelStructure(F, n, d, alphas, tuple(scalars))
    if code(g) != C:
        raise NotInFiber("the code is not the Goppa code of any structure over these points")
    return g.scalars
