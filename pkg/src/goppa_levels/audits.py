"""Exhaustive experiments over small finite fields.

Structures are enumerated in a fixed order: alpha tuples (ordered, distinct,
avoiding 0 and 1) in lexicographic element order, then scalar tuples in
lexicographic order.  The heavy audits run one alpha tuple at a time through
the vectorized kernels in :mod:`goppa_levels.batch`; each alpha tuple is an
independent partition and partitions merge by concatenating code keys.
"""

from __future__ import annotations

import itertools
import math
import random
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field as dc_field
from fractions import Fraction
from typing import Iterator

import numpy as np

from . import batch
from .codes import LinearCode, dual, enumerate_subspaces, from_generator, subfield_subcode, trace_code
from .errors import FieldTooSmall, InfiniteField, ParameterViolation, UnsupportedField
from .fields import Field, parse_field
from .level_structures import (
    LevelStructure,
    canonical_differential_structure,
    code,
    dual_structure,
    generator_matrix,
    is_self_dual,
    parity_check_matrix,
)
from .exact_linalg import Matrix
from .pluecker import pluecker_closed_form


def _check_params(F: Field, n: int, d: int | None = None):
    if not F.is_finite:
        raise InfiniteField(f"{F} cannot be enumerated")
    if n < 3:
        raise ParameterViolation("n must be at least 3")
    if F.order < n - 1:
        raise FieldTooSmall(f"q = {F.order} < n - 1 = {n - 1}")
    if d is not None and not 0 <= d < n:
        raise ParameterViolation(f"need 0 <= d < n, got d={d}, n={n}")


def alpha_tuples(F: Field, n: int) -> list[tuple]:
    return list(itertools.permutations(F.elements()[2:], n - 3))


def count_structures(q: int, n: int) -> int:
    """``(q-2)(q-3)...(q-n+2) * (q-1)^(n-1)``."""
    return math.prod(q - i for i in range(2, n - 1)) * (q - 1) ** (n - 1)


def enumerate_structures(F, n: int, d: int) -> Iterator[LevelStructure]:
    F = parse_field(F)
    _check_params(F, n, d)
    nonzero = F.elements()[1:]
    for alphas in alpha_tuples(F, n):
        for scalars in itertools.product(nonzero, repeat=n - 1):
            yield LevelStructure(F, n, d, alphas, scalars)


def scalar_grid(F: Field, n: int) -> np.ndarray:
    """All scalar tuples ``(l_1..l_{n-1}, 1)`` as a uint8 array, enumeration order."""
    q = F.order
    nonzero = np.arange(1, q, dtype=np.uint8)
    grids = np.meshgrid(*([nonzero] * (n - 1)), indexing="ij")
    L = np.stack([g.reshape(-1) for g in grids], axis=1)
    return np.concatenate([L, np.ones((L.shape[0], 1), dtype=np.uint8)], axis=1)


def gaussian_binomial(n: int, k: int, q: int) -> int:
    """Number of k-dimensional subspaces of F_q^n."""
    if k < 0 or k > n:
        return 0
    num = den = 1
    for i in range(k):
        num *= q ** (n - i) - 1
        den *= q ** (i + 1) - 1
    return num // den


def _as_array(M: Matrix) -> np.ndarray:
    return np.array(M.rows, dtype=np.uint8).reshape(M.nrows, M.ncols)


def _code_keys_for_alphas(args) -> np.ndarray:
    spec, n, d, alphas = args
    F = parse_field(spec)
    T = batch.tables(F)
    L = scalar_grid(F, n)
    G0 = _as_array(generator_matrix(LevelStructure(F, n, d, alphas, (F.one,) * (n - 1))))
    _, sub, mul, inv, _ = T.arrays
    return batch.keys(batch.scaled_code_rrefs(G0, L, sub, mul, inv))


@dataclass
class AuditReport:
    kind: str
    field: str
    n: int
    d: int
    structures_enumerated: int = 0
    distinct_codes: int = 0
    collisions: list = dc_field(default_factory=list)
    collision_groups: int = 0
    grassmannian_size: int | None = None
    image_density: Fraction | None = None
    exploratory: bool = False
    elapsed: float = 0.0

    @property
    def clean(self) -> bool:
        return self.collision_groups == 0

    def to_json(self) -> dict:
        return {"kind": self.kind, "field": self.field, "n": self.n, "d": self.d,
                "structures_enumerated": self.structures_enumerated,
                "distinct_codes": self.distinct_codes,
                "collision_groups": self.collision_groups,
                "collisions": self.collisions,
                "grassmannian_size": self.grassmannian_size,
                "image_density": None if self.image_density is None else str(self.image_density),
                "exploratory": self.exploratory,
                "elapsed_seconds": round(self.elapsed, 3)}


def _image_keys(F: Field, n: int, d: int, jobs: int) -> tuple[list, np.ndarray]:
    tuples = alpha_tuples(F, n)
    work = [(F.spec, n, d, a) for a in tuples]
    if jobs > 1 and len(work) > 1:
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            parts = list(pool.map(_code_keys_for_alphas, work, chunksize=max(1, len(work) // (4 * jobs))))
    else:
        parts = [_code_keys_for_alphas(w) for w in work]
    return tuples, np.concatenate(parts)


def injectivity_audit(F, n: int, d: int, jobs: int = 1, max_reported: int = 50) -> AuditReport:
    """Map every structure to its canonical code and report coinciding codes.

    Collisions are listed as pairs of structures (the first structure of a
    group against each other member), capped at ``max_reported`` pairs;
    ``collision_groups`` counts every code hit more than once.
    """
    F = parse_field(F)
    _check_params(F, n, d)
    start = time.perf_counter()
    tuples, keys = _image_keys(F, n, d, jobs)
    per_alpha = (F.order - 1) ** (n - 1)
    order = np.argsort(keys, kind="stable")
    sorted_keys = keys[order]
    boundary = np.ones(len(keys), dtype=bool)
    boundary[1:] = sorted_keys[1:] != sorted_keys[:-1]
    starts = np.nonzero(boundary)[0]
    sizes = np.diff(np.append(starts, len(keys)))
    report = AuditReport("injectivity", F.spec, n, d, structures_enumerated=len(keys),
                         distinct_codes=len(starts), collision_groups=int((sizes > 1).sum()),
                         exploratory=not (n > 2 * d and d > 1))
    nonzero = F.elements()[1:]

    def structure(flat):
        a, s = divmod(int(flat), per_alpha)
        digits = []
        for _ in range(n - 1):
            s, r = divmod(s, F.order - 1)
            digits.append(nonzero[r])
        return LevelStructure(F, n, d, tuples[a], tuple(reversed(digits))).to_json()

    for st, size in zip(starts[sizes > 1], sizes[sizes > 1]):
        first = order[st]
        for other in order[st + 1:st + size]:
            if len(report.collisions) >= max_reported:
                break
            report.collisions.append([structure(first), structure(other)])
    report.elapsed = time.perf_counter() - start
    return report


def image_census(F, n: int, d: int, jobs: int = 1) -> AuditReport:
    """Count distinct image codes against the Grassmannian size."""
    F = parse_field(F)
    _check_params(F, n, d)
    start = time.perf_counter()
    _, keys = _image_keys(F, n, d, jobs)
    distinct = len(np.unique(keys))
    size = gaussian_binomial(n, d + 1, F.order)
    report = AuditReport("census", F.spec, n, d, structures_enumerated=len(keys),
                         distinct_codes=distinct, grassmannian_size=size,
                         image_density=Fraction(distinct, size),
                         exploratory=not (n > 2 * d and d > 1))
    report.elapsed = time.perf_counter() - start
    return report


# ---------------------------------------------------------------------------
# structure identities over the whole enumeration


@dataclass
class IdentityReport:
    field: str
    n: int
    d: int
    structures: int = 0
    annihilation_failures: int = 0
    dimension_failures: int = 0
    duality_failures: int = 0
    double_dual_failures: int = 0
    pluecker_failures: int = 0
    first_failure: dict | None = None
    elapsed: float = 0.0

    @property
    def failures(self) -> int:
        return (self.annihilation_failures + self.dimension_failures + self.duality_failures
                + self.double_dual_failures + self.pluecker_failures)

    def to_json(self) -> dict:
        out = dict(self.__dict__)
        out["elapsed"] = round(self.elapsed, 3)
        return out


_CHECKS = {"annihilation": batch.ANNIHILATION, "dimension": batch.DIMENSION,
           "duality": batch.DUALITY, "pluecker": batch.PLUECKER}


def identity_audit(F, n: int, d: int, checks=("annihilation", "dimension", "duality", "pluecker")) -> IdentityReport:
    """Check the structure identities on every enumerated structure.

    * annihilation: ``G H = 0``
    * dimension: ``rank G = d + 1``
    * duality: ``code(dual_structure(g)) = dual(code(g))`` and
      ``dual_structure(dual_structure(g)) = g``
    * pluecker: closed-form Plücker vector equals the minors of a
      parity-check matrix of ``code(g)``

    The alpha-dependent matrices come from the scalar routines at unit
    scalars; the scalars enter through column and row scaling, which is how
    they enter the definitions.  Everything downstream (products, echelon
    forms, duals, minors) is computed per structure by the compiled kernels.
    Rank is always computed, so dimension failures are always counted.
    """
    F = parse_field(F)
    _check_params(F, n, d)
    if d > n - 2:
        raise ParameterViolation("identity audit needs d <= n - 2")
    unknown = set(checks) - set(_CHECKS)
    if unknown:
        raise ValueError(f"unknown checks {sorted(unknown)}")
    start = time.perf_counter()
    T = batch.tables(F)
    L = scalar_grid(F, n)
    flags = np.zeros(5, dtype=np.bool_)
    for name in checks:
        flags[_CHECKS[name]] = True
    tuples = np.array(list(itertools.combinations(range(n), n - d - 1)), dtype=np.int64)
    rep = IdentityReport(F.spec, n, d)
    ones = (F.one,) * (n - 1)
    for alphas in alpha_tuples(F, n):
        g0 = LevelStructure(F, n, d, alphas, ones)
        G0 = _as_array(generator_matrix(g0))
        H0 = _as_array(parity_check_matrix(g0))
        Gd0 = _as_array(generator_matrix(LevelStructure(F, n, n - d - 2, alphas, ones)))
        c = np.array(dual_structure(g0).all_scalars, dtype=np.uint8)
        P0 = np.array(pluecker_closed_form(g0).coords, dtype=np.uint8)
        counts, first = batch.identity_scan(G0, H0, Gd0, c, P0, tuples, L, flags, *T.arrays)
        rep.structures += len(L)
        rep.annihilation_failures += int(counts[batch.ANNIHILATION])
        rep.dimension_failures += int(counts[batch.DIMENSION])
        rep.duality_failures += int(counts[batch.DUALITY])
        rep.double_dual_failures += int(counts[batch.DOUBLE_DUAL])
        rep.pluecker_failures += int(counts[batch.PLUECKER])
        if first >= 0 and rep.first_failure is None:
            scalars = tuple(int(x) for x in L[first, :-1])
            rep.first_failure = LevelStructure(F, n, d, alphas, scalars).to_json()
    rep.elapsed = time.perf_counter() - start
    return rep


# ---------------------------------------------------------------------------
# self-duality census


@dataclass
class SelfDualReport:
    field: str
    n: int
    d: int
    configurations: list = dc_field(default_factory=list)  # one dict per alpha tuple
    structures_checked: int = 0
    criterion_mismatches: int = 0
    torsor_violations: int = 0

    @property
    def clean(self) -> bool:
        return self.criterion_mismatches == 0 and self.torsor_violations == 0

    def to_json(self) -> dict:
        return dict(self.__dict__)


def selfdual_census(F, n: int, d: int, crosscheck_all: bool = True) -> SelfDualReport:
    """Self-dual structures per point configuration, for odd q and n = 2(d+1).

    Counts must be 0 or ``2^(n-1)``.  Every hit is confirmed by
    ``C = C^perp``; with ``crosscheck_all`` the direct check also runs on
    every non-hit.
    """
    F = parse_field(F)
    _check_params(F, n, d)
    if F.p == 2:
        raise ParameterViolation("self-dual census needs odd characteristic")
    if n != 2 * (d + 1):
        raise ParameterViolation(f"self-dual codes need n = 2(d+1), got n={n}, d={d}")
    rep = SelfDualReport(F.spec, n, d)
    nonzero = F.elements()[1:]
    for alphas in alpha_tuples(F, n):
        can = canonical_differential_structure(F, n, alphas)
        hits = []
        for scalars in itertools.product(nonzero, repeat=n - 1):
            g = LevelStructure(F, n, d, alphas, scalars)
            criterion = is_self_dual(g)
            rep.structures_checked += 1
            if criterion or crosscheck_all:
                C = code(g)
                if criterion != (C == dual(C)):
                    rep.criterion_mismatches += 1
            if criterion:
                hits.append([F.to_json_value(s) for s in scalars])
        if len(hits) not in (0, 2 ** (n - 1)):
            rep.torsor_violations += 1
        rep.configurations.append({
            "alphas": [F.to_json_value(a) for a in alphas],
            "canonical_scalars": [F.to_json_value(s) for s in can.scalars],
            "count": len(hits),
            "self_dual_scalars": hits,
        })
    return rep


# ---------------------------------------------------------------------------
# Delsarte identity


@dataclass
class DelsarteReport:
    field: str
    n_max: int
    mode: str
    codes_checked: int = 0
    failures: int = 0
    counterexample: dict | None = None

    @property
    def clean(self) -> bool:
        return self.failures == 0

    def to_json(self) -> dict:
        return dict(self.__dict__)


def delsarte_holds(C: LinearCode) -> bool:
    """``Tr(C^perp) = (C restricted to F_p)^perp``."""
    return trace_code(dual(C)) == dual(subfield_subcode(C))


def random_code(F: Field, n: int, k: int, rng: random.Random) -> LinearCode:
    els = F.elements()
    rows = [[rng.choice(els) for _ in range(n)] for _ in range(k)]
    return from_generator(Matrix._raw(F, rows, n)) if k else from_generator(Matrix(F, (), n))


def delsarte_audit(F, n_max: int, samples: int | None = None, seed: int = 0) -> DelsarteReport:
    """Check Delsarte's identity exhaustively (``samples=None``) or on random codes."""
    F = parse_field(F)
    if not F.is_finite or F.r < 2:
        raise UnsupportedField(f"Delsarte audit needs a proper extension field, got {F}")
    rep = DelsarteReport(F.spec, n_max, "exhaustive" if samples is None else "sampled")

    def check(C):
        rep.codes_checked += 1
        if not delsarte_holds(C):
            rep.failures += 1
            if rep.counterexample is None:
                rep.counterexample = C.to_json()

    if samples is None:
        for n in range(1, n_max + 1):
            for k in range(n + 1):
                for C in enumerate_subspaces(F, n, k):
                    check(C)
    else:
        rng = random.Random(seed)
        for _ in range(samples):
            n = rng.randint(1, n_max)
            check(random_code(F, n, rng.randint(0, n), rng))
    return rep
