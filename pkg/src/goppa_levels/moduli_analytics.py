"""Dimension counts for level structures of type (g, n, d).

With ``a = n - 2 + 2g`` the excess of the Grassmannian over the moduli space,

    xi(d) = dim Gr(k, n) - dim LS = -d^2 + a d - (a (g+1) - (g-1)^2),

is a downward parabola in d.  Degrees strictly between its real roots give
codes from a lower-dimensional family than random codes of the same shape.
All quantities here are exact integers or rationals.
"""

from __future__ import annotations

import math
from dataclasses import asdict, dataclass
from fractions import Fraction

from .errors import ParameterViolation


@dataclass(frozen=True)
class Dimension:
    value: int
    exact: bool  # False: value is only an upper bound


def code_dimension(g: int, n: int, d: int) -> Dimension:
    """Dimension of the Goppa code: ``1-g+d`` when strong, else bounded by g."""
    if n <= d:
        raise ParameterViolation(f"need n > d, got n={n}, d={d}")
    if d > 2 * g - 2:
        return Dimension(1 - g + d, True)
    return Dimension(g, False)


def grassmannian_dimension(k: int, n: int) -> int:
    return k * (n - k)


def moduli_dimension(g: int, n: int) -> int:
    """``dim LS_{g,n,d} = 4g - 4 + 2n`` (independent of d)."""
    return 4 * g - 4 + 2 * n


def xi(g: int, n: int, d: int) -> int:
    a = n - 2 + 2 * g
    return -d * d + a * d - (a * (g + 1) - (g - 1) ** 2)


def discriminant(g: int, n: int) -> int:
    return n * n - 8 * n + 16 * (1 - g)


@dataclass(frozen=True)
class CutPoints:
    """Roots ``center -+ sqrt(discriminant) / 2`` of ``xi(d) = 0``."""

    center: Fraction
    discriminant: int

    @property
    def exact(self) -> bool:
        return math.isqrt(self.discriminant) ** 2 == self.discriminant

    @property
    def lower(self) -> Fraction | float:
        return self._root(-1)

    @property
    def upper(self) -> Fraction | float:
        return self._root(1)

    def _root(self, sign: int):
        if self.exact:
            return self.center + sign * Fraction(math.isqrt(self.discriminant), 2)
        return float(self.center) + sign * math.sqrt(self.discriminant) / 2

    def contains(self, d: int) -> bool:
        """Strict interior membership, decided with integers only."""
        # |2d - 2c|^2 < disc, with 2c an integer
        twice = 2 * d - int(2 * self.center)
        return twice * twice < self.discriminant

    def to_json(self) -> dict:
        return {"center": str(self.center), "discriminant": self.discriminant,
                "exact": self.exact, "lower": float(self.lower), "upper": float(self.upper)}


def cut_points(g: int, n: int) -> CutPoints | None:
    """Exact roots of the parabola, or None when there are no real roots."""
    disc = discriminant(g, n)
    if disc < 0:
        return None
    return CutPoints(Fraction(n - 2 * (1 - g), 2), disc)


@dataclass(frozen=True)
class ParameterReport:
    g: int
    n: int
    d: int
    k: int
    k_exact: bool
    strong: bool
    dim_ls: int
    dim_gr: int | None
    xi: int
    unsafe_range: CutPoints | None
    unsafe_degrees: tuple
    unsafe: bool
    universally_injective: bool
    in_theorem_range: bool

    def to_json(self) -> dict:
        out = asdict(self)
        out["unsafe_range"] = self.unsafe_range.to_json() if self.unsafe_range else None
        out["unsafe_degrees"] = list(self.unsafe_degrees)
        return out


def unsafe_degrees(g: int, n: int) -> tuple:
    """Integers strictly inside the root interval and inside ``(2g-1, n)``."""
    cp = cut_points(g, n)
    if cp is None:
        return ()
    return tuple(d for d in range(max(2 * g, 0), n) if cp.contains(d))


def is_universally_injective(g: int, n: int, d: int) -> bool:
    return 2 * d < n and d > 2 * g + 1


def parameter_report(g: int, n: int, d: int) -> ParameterReport:
    if g < 0 or n < 1:
        raise ParameterViolation(f"invalid genus/length g={g}, n={n}")
    dim = code_dimension(g, n, d)
    strong = dim.exact
    degrees = unsafe_degrees(g, n)
    return ParameterReport(
        g=g, n=n, d=d, k=dim.value, k_exact=dim.exact, strong=strong,
        dim_ls=moduli_dimension(g, n),
        dim_gr=grassmannian_dimension(dim.value, n) if strong else None,
        xi=xi(g, n, d),
        unsafe_range=cut_points(g, n),
        unsafe_degrees=degrees,
        unsafe=d in degrees,
        universally_injective=is_universally_injective(g, n, d),
        in_theorem_range=n > 2 * g + 1 and 2 * g - 2 + n > 0,
    )


def sweep(g: int, n: int) -> list[ParameterReport]:
    """Reports for every degree in ``(2g-1, n)``."""
    return [parameter_report(g, n, d) for d in range(max(2 * g, 0), n)]
