"""Genus-zero level structures and their Goppa codes.

A canonical level structure lives on the projective line with points
``p1 = inf, p2 = 0, p3 = 1, p4 = alpha_4, ..., pn = alpha_n``.  Its sheaf is
``O(d * inf)`` with global sections ``k[t]_{<=d}``, and its trivializations
are the canonical ones rescaled by ``l_1, ..., l_{n-1}`` with ``l_n = 1``.
At infinity the canonical trivialization sends ``f`` to ``u^d f(1/u)`` at
``u = 0``, i.e. to the coefficient of ``t^d``.

Pinning ``l_n = 1`` picks one representative of each class under the
diagonal scaling, so equivalence of structures over the same points is
plain equality of the stored data.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

from . import codes as _codes
from .codes import LinearCode
from .errors import (
    BadLength,
    DegenerateConfiguration,
    DegreeOutOfRange,
    DivisorMeetsPoints,
    FieldMismatch,
    InvalidStructure,
    PointMismatch,
)
from .fields import Field, parse_field
from .exact_linalg import Matrix, kernel_basis, matmul

INF = "inf"


@dataclass(frozen=True)
class ProjPoint:
    """A rational point of P^1: ``[a; 1]`` or infinity ``[1; 0]``."""

    value: object = None  # raw field value, or None for infinity

    @classmethod
    def infinity(cls) -> "ProjPoint":
        return cls(None)

    @property
    def is_infinity(self) -> bool:
        return self.value is None

    def homogeneous(self, F: Field) -> tuple:
        return (F.one, F.zero) if self.is_infinity else (self.value, F.one)

    @classmethod
    def from_homogeneous(cls, F: Field, x, y) -> "ProjPoint":
        if y == F.zero:
            if x == F.zero:
                raise DegenerateConfiguration("[0; 0] is not a point")
            return cls(None)
        return cls(F.div(x, y))

    def to_json(self, F: Field):
        return INF if self.is_infinity else F.to_json_value(self.value)

    @classmethod
    def from_json(cls, F: Field, obj) -> "ProjPoint":
        return cls(None) if obj == INF else cls(F.from_json_value(obj))


@dataclass(frozen=True)
class LevelStructure:
    """Canonical genus-0 level structure.

    ``alphas`` holds ``alpha_4..alpha_n`` and ``scalars`` holds
    ``l_1..l_{n-1}`` as raw field values.  Use :func:`make_structure` to
    build one from user values with validation.
    """

    field: Field
    n: int
    d: int
    alphas: tuple
    scalars: tuple

    def __post_init__(self):
        F = self.field
        if self.n < 3:
            raise InvalidStructure("a level structure needs n >= 3 points")
        if len(self.alphas) != self.n - 3:
            raise BadLength(f"expected {self.n - 3} alphas, got {len(self.alphas)}")
        if len(self.scalars) != self.n - 1:
            raise BadLength(f"expected {self.n - 1} scalars, got {len(self.scalars)}")
        if any(a in (F.zero, F.one) for a in self.alphas):
            raise InvalidStructure("alphas must avoid 0 and 1")
        if len(set(self.alphas)) != len(self.alphas):
            raise InvalidStructure("alphas must be pairwise distinct")
        if any(s == F.zero for s in self.scalars):
            raise InvalidStructure("scalars must be nonzero")

    @property
    def points(self) -> tuple:
        """Finite coordinates ``alpha_2..alpha_n`` (``alpha_2 = 0``, ``alpha_3 = 1``)."""
        F = self.field
        return (F.zero, F.one) + self.alphas

    @property
    def all_scalars(self) -> tuple:
        """``l_1..l_n`` including the pinned ``l_n = 1``."""
        return self.scalars + (self.field.one,)

    def to_json(self) -> dict:
        F = self.field
        return {"type": "level_structure", "field": F.spec, "n": self.n, "d": self.d,
                "alphas": [F.to_json_value(a) for a in self.alphas],
                "scalars": [F.to_json_value(s) for s in self.scalars]}

    @classmethod
    def from_json(cls, obj: dict) -> "LevelStructure":
        F = parse_field(obj["field"])
        return cls(F, int(obj["n"]), int(obj["d"]),
                   tuple(F.from_json_value(a) for a in obj["alphas"]),
                   tuple(F.from_json_value(s) for s in obj["scalars"]))

    def __str__(self) -> str:
        fmt = self.field.format
        return (f"LevelStructure(F={self.field.spec}, n={self.n}, d={self.d}, "
                f"alphas=({', '.join(map(fmt, self.alphas))}), "
                f"scalars=({', '.join(map(fmt, self.scalars))}))")


def make_structure(field, n: int, d: int, alphas: Sequence, scalars: Sequence | None = None) -> LevelStructure:
    """Build a validated :class:`LevelStructure`; scalars default to all ones."""
    F = parse_field(field)
    alphas = tuple(F.coerce(a) for a in alphas)
    if scalars is None:
        scalars = (F.one,) * (n - 1)
    scalars = tuple(F.coerce(s) for s in scalars)
    if F.is_finite and F.order < n - 1:
        raise InvalidStructure(f"|F| = {F.order} < n - 1 = {n - 1}")
    return LevelStructure(F, n, d, alphas, scalars)


def _require_code_degree(g: LevelStructure, max_d: int):
    if not 0 <= g.d <= max_d:
        raise DegreeOutOfRange(f"degree {g.d} outside [0, {max_d}] for n={g.n}")


def h_values(field: Field, points: Sequence) -> tuple:
    """``h_j = 1 / prod_{i != 1, j} (alpha_j - alpha_i)`` for j = 2..n."""
    F = field
    out = []
    for j, aj in enumerate(points):
        out.append(F.inv(F.prod(F.sub(aj, ai) for i, ai in enumerate(points) if i != j)))
    return tuple(out)


def encode(g: LevelStructure, message: Sequence) -> tuple:
    """Codeword of ``f = m_0 + m_1 t + ... + m_d t^d``.

    Returns raw values ``(l_1 m_d, l_2 f(0), l_3 f(1), l_4 f(alpha_4), ...)``.
    """
    F = g.field
    _require_code_degree(g, g.n - 1)
    message = [F.coerce(m) for m in message]
    if len(message) != g.d + 1:
        raise BadLength(f"message must have {g.d + 1} coefficients")
    ls = g.all_scalars
    word = [F.mul(ls[0], message[-1])]
    for a, l in zip(g.points, ls[1:]):
        acc = F.zero
        for m in reversed(message):
            acc = F.add(F.mul(acc, a), m)
        word.append(F.mul(l, acc))
    return tuple(word)


def generator_matrix(g: LevelStructure) -> Matrix:
    """``(d+1) x n`` matrix whose row m is the codeword of ``t^m``."""
    F = g.field
    _require_code_degree(g, g.n - 1)
    ls = g.all_scalars
    cols = [[F.zero] * g.d + [ls[0]]]
    for a, l in zip(g.points, ls[1:]):
        cols.append([F.mul(l, F.pow(a, m)) for m in range(g.d + 1)])
    return Matrix._raw(F, zip(*cols), g.n)


def parity_check_matrix(g: LevelStructure) -> Matrix:
    """``n x (n-d-1)`` residue matrix; ``G H = 0``.

    Row 1 is ``(0, ..., 0, -1/l_1)``; row j >= 2 is
    ``h_j / l_j * (1, alpha_j, ..., alpha_j^(n-d-2))``.
    """
    F = g.field
    _require_code_degree(g, g.n - 2)
    width = g.n - g.d - 1
    ls = g.all_scalars
    rows = [[F.zero] * (width - 1) + [F.neg(F.inv(ls[0]))]]
    for a, h, l in zip(g.points, h_values(F, g.points), ls[1:]):
        c = F.div(h, l)
        rows.append([F.mul(c, F.pow(a, m)) for m in range(width)])
    return Matrix._raw(F, rows, width)


def code(g: LevelStructure) -> LinearCode:
    """The Goppa code: row space of the generator matrix."""
    return _codes.from_generator(generator_matrix(g))


def code_from_parity_check(g: LevelStructure) -> LinearCode:
    """Kernel of ``H^T``; equal to :func:`code` for ``0 <= d <= n-2``."""
    return _codes.from_generator(kernel_basis(parity_check_matrix(g).T))


def _normalized(F: Field, scalars: Sequence) -> tuple:
    """Divide ``l_1..l_n`` by ``l_n`` and drop it."""
    c = F.inv(scalars[-1])
    return tuple(F.mul(s, c) for s in scalars[:-1])


def dual_structure(g: LevelStructure) -> LevelStructure:
    """Residue structure of degree ``n-d-2`` whose code is the dual code."""
    F = g.field
    _require_code_degree(g, g.n - 2)
    ls = g.all_scalars
    lam = [F.neg(F.inv(ls[0]))]
    lam += [F.div(h, l) for h, l in zip(h_values(F, g.points), ls[1:])]
    return LevelStructure(F, g.n, g.n - g.d - 2, g.alphas, _normalized(F, lam))


def _check_compatible(g1: LevelStructure, g2: LevelStructure):
    if g1.field != g2.field:
        raise FieldMismatch("structures over different fields")
    if g1.n != g2.n or g1.alphas != g2.alphas:
        raise PointMismatch("structures over different points")


def tensor(g1: LevelStructure, g2: LevelStructure) -> LevelStructure:
    """Group law: degrees add, scalars multiply."""
    _check_compatible(g1, g2)
    F = g1.field
    return LevelStructure(F, g1.n, g1.d + g2.d, g1.alphas,
                          tuple(F.mul(a, b) for a, b in zip(g1.scalars, g2.scalars)))


def inverse(g: LevelStructure) -> LevelStructure:
    F = g.field
    return LevelStructure(F, g.n, -g.d, g.alphas, tuple(F.inv(s) for s in g.scalars))


def unit(field, n: int, alphas: Sequence) -> LevelStructure:
    """Neutral element: degree 0, all scalars one."""
    return make_structure(field, n, 0, alphas)


def is_equivalent(g1: LevelStructure, g2: LevelStructure) -> bool:
    """Equivalence of canonical forms, which is equality of the data."""
    if g1.field != g2.field:
        raise FieldMismatch("structures over different fields")
    if g1.n != g2.n:
        return False
    return g1.d == g2.d and g1.alphas == g2.alphas and g1.scalars == g2.scalars


def canonical_differential_structure(field, n: int, alphas: Sequence) -> LevelStructure:
    """The residue structure of ``omega(D)``: degree n-2, scalars ``(-1, h_2, ..., h_n)``."""
    F = parse_field(field)
    alphas = tuple(F.coerce(a) for a in alphas)
    points = (F.zero, F.one) + alphas
    lam = (F.neg(F.one),) + h_values(F, points)
    return LevelStructure(F, n, n - 2, alphas, _normalized(F, lam))


def is_self_dual(g: LevelStructure) -> bool:
    """``n = 2(d+1)`` and ``g (x) g`` equals the canonical differential structure."""
    if g.n != 2 * (g.d + 1):
        return False
    return is_equivalent(tensor(g, g), canonical_differential_structure(g.field, g.n, g.alphas))


def is_self_dual_direct(g: LevelStructure) -> bool:
    """``C = C^perp`` checked on the codes themselves."""
    C = code(g)
    return C == _codes.dual(C)


# ---------------------------------------------------------------------------
# raw (classical) structures


@dataclass(frozen=True)
class RawLevelStructure:
    """Classical data: n distinct points, a divisor off the points, n scalars."""

    field: Field
    points: tuple  # ProjPoint
    divisor: tuple  # ((ProjPoint, multiplicity), ...)
    scalars: tuple  # raw values, length n

    @property
    def n(self) -> int:
        return len(self.points)

    @property
    def degree(self) -> int:
        return sum(m for _, m in self.divisor)

    def __post_init__(self):
        F = self.field
        if len(set(self.points)) != len(self.points):
            raise DegenerateConfiguration("points must be distinct")
        if len(self.points) < 3:
            raise InvalidStructure("need at least three points")
        if len(self.scalars) != len(self.points):
            raise BadLength("one scalar per point is required")
        if any(s == F.zero for s in self.scalars):
            raise InvalidStructure("scalars must be nonzero")
        support = {P for P, m in self.divisor if m}
        meets = support & set(self.points)
        if meets and not (meets == {self.points[0]} and self._standard_frame()):
            raise DivisorMeetsPoints("divisor support meets the evaluation points")

    def _standard_frame(self) -> bool:
        # p1, p2, p3 = inf, 0, 1: a multiple of [inf] is then read in the
        # chart u = 1/t, the trivialization used by the canonical form
        F = self.field
        return self.points[:3] == (ProjPoint(None), ProjPoint(F.zero), ProjPoint(F.one))

    def to_json(self) -> dict:
        F = self.field
        return {"type": "raw_level_structure", "field": F.spec, "n": self.n, "d": self.degree,
                "points": [P.to_json(F) for P in self.points],
                "divisor": [[P.to_json(F), m] for P, m in self.divisor],
                "scalars": [F.to_json_value(s) for s in self.scalars]}

    @classmethod
    def from_json(cls, obj: dict) -> "RawLevelStructure":
        F = parse_field(obj["field"])
        return cls(F, tuple(ProjPoint.from_json(F, P) for P in obj["points"]),
                   tuple((ProjPoint.from_json(F, P), int(m)) for P, m in obj["divisor"]),
                   tuple(F.from_json_value(s) for s in obj["scalars"]))


def make_raw(field, points: Sequence, divisor: Sequence, scalars: Sequence | None = None) -> RawLevelStructure:
    """Points are field values or ``"inf"``; divisor is ``[(point, mult), ...]``."""
    F = parse_field(field)

    def pt(x):
        if isinstance(x, ProjPoint):
            return x
        return ProjPoint(None) if x == INF else ProjPoint(F.coerce(x))

    points = tuple(pt(x) for x in points)
    divisor = tuple((pt(P), int(m)) for P, m in divisor)
    if scalars is None:
        scalars = [F.one] * len(points)
    return RawLevelStructure(F, points, divisor, tuple(F.coerce(s) for s in scalars))


def moebius_to_standard(F: Field, p1: ProjPoint, p2: ProjPoint, p3: ProjPoint):
    """2x2 matrix of the automorphism sending p1, p2, p3 to inf, 0, 1."""
    a1, b1 = p1.homogeneous(F)
    a2, b2 = p2.homogeneous(F)
    a3, b3 = p3.homogeneous(F)
    r1 = (b2, F.neg(a2))  # vanishes on p2
    r2 = (b1, F.neg(a1))  # vanishes on p1
    s1 = F.add(F.mul(r1[0], a3), F.mul(r1[1], b3))
    s2 = F.add(F.mul(r2[0], a3), F.mul(r2[1], b3))
    if s1 == F.zero or s2 == F.zero:
        raise DegenerateConfiguration("the first three points are not distinct")
    s1, s2 = F.inv(s1), F.inv(s2)
    return ((F.mul(r1[0], s1), F.mul(r1[1], s1)), (F.mul(r2[0], s2), F.mul(r2[1], s2)))


def apply_moebius(F: Field, M, P: ProjPoint) -> ProjPoint:
    x, y = P.homogeneous(F)
    return ProjPoint.from_homogeneous(F, F.add(F.mul(M[0][0], x), F.mul(M[0][1], y)),
                                      F.add(F.mul(M[1][0], x), F.mul(M[1][1], y)))


def classical_to_canonical(raw: RawLevelStructure) -> LevelStructure:
    """Canonical structure with the same code as ``raw``.

    Moves ``p1, p2, p3`` to ``inf, 0, 1`` by a Moebius map, then trades the
    transported divisor ``G = sum m_b [b]`` for ``d * inf`` through
    ``u = prod (t - b)^{m_b}``: a section ``f`` of ``O(G)`` becomes
    ``F = f u`` in ``k[t]_{<=d}``.  Finite points therefore get their scalar
    divided by ``u(alpha_i)``; at infinity ``f(inf)`` is the ``t^d``
    coefficient of ``F`` because ``u`` is monic, so ``l_1`` is unchanged.
    """
    F = raw.field
    M = moebius_to_standard(F, *raw.points[:3])
    moved = [apply_moebius(F, M, P) for P in raw.points]
    support = []
    for P, m in raw.divisor:
        Q = apply_moebius(F, M, P)
        # a multiple of [inf] only adds to the degree
        if not Q.is_infinity:
            support.append((Q.value, m))
    scalars = [raw.scalars[0]]
    for Q, s in zip(moved[1:], raw.scalars[1:]):
        u = F.prod(F.pow(F.sub(Q.value, b), m) for b, m in support)
        scalars.append(F.div(s, u))
    alphas = tuple(Q.value for Q in moved[3:])
    return LevelStructure(F, raw.n, raw.degree, alphas, _normalized(F, scalars))


def check_annihilation(g: LevelStructure) -> bool:
    """``G H = 0`` exactly."""
    return matmul(generator_matrix(g), parity_check_matrix(g)).is_zero()

