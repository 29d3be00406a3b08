"""Compiled finite-field kernels for exhaustive audits.

Elements are stored as their raw indices in ``uint8`` arrays (so q <= 256)
and arithmetic goes through precomputed ``q x q`` tables.  The kernels are
plain loops compiled with numba; they reproduce the scalar routines in
:mod:`goppa_levels.exact_linalg` exactly, including the first-nonzero pivot
rule, so echelon forms can be compared entry by entry.
"""

from __future__ import annotations

import numpy as np
from numba import njit

from .errors import UnsupportedField
from .fields import Field

# identity_scan check flags and result slots
ANNIHILATION, DIMENSION, DUALITY, DOUBLE_DUAL, PLUECKER = range(5)


class FieldTables:
    """Addition, multiplication and inversion tables of a small finite field."""

    def __init__(self, field: Field):
        if not field.is_finite or field.order > 256:
            raise UnsupportedField(f"batch kernels need a finite field with q <= 256, got {field}")
        self.field = field
        q = self.q = field.order
        els = range(q)
        self.add_t = np.array([[field.add(a, b) for b in els] for a in els], dtype=np.uint8)
        self.sub_t = np.array([[field.sub(a, b) for b in els] for a in els], dtype=np.uint8)
        self.mul_t = np.array([[field.mul(a, b) for b in els] for a in els], dtype=np.uint8)
        self.inv_t = np.array([0] + [field.inv(a) for a in range(1, q)], dtype=np.uint8)
        self.neg_t = np.array([field.neg(a) for a in els], dtype=np.uint8)

    @property
    def arrays(self) -> tuple:
        return self.add_t, self.sub_t, self.mul_t, self.inv_t, self.neg_t


_CACHE: dict = {}


def tables(field: Field) -> FieldTables:
    key = field.spec
    if key not in _CACHE:
        _CACHE[key] = FieldTables(field)
    return _CACHE[key]


@njit(cache=True)
def _rref_inplace(A, piv, sub, mul, inv):
    """Reduce A in place; pivot columns go to ``piv``; returns the rank."""
    nr, nc = A.shape
    r = 0
    for c in range(nc):
        if r == nr:
            break
        p = -1
        for i in range(r, nr):
            if A[i, c] != 0:
                p = i
                break
        if p < 0:
            continue
        if p != r:
            for j in range(nc):
                t = A[p, j]
                A[p, j] = A[r, j]
                A[r, j] = t
        s = inv[A[r, c]]
        for j in range(nc):
            A[r, j] = mul[A[r, j], s]
        for i in range(nr):
            f = A[i, c]
            if i != r and f != 0:
                for j in range(nc):
                    A[i, j] = sub[A[i, j], mul[f, A[r, j]]]
        piv[r] = c
        r += 1
    return r


@njit(cache=True)
def _kernel_rows(R, rank, piv, K, neg):
    """Kernel basis of an rref matrix, one row per free column (rank < ncols)."""
    nc = R.shape[1]
    K[:, :] = 0
    row = 0
    p = 0
    for f in range(nc):
        if p < rank and piv[p] == f:
            p += 1
            continue
        K[row, f] = 1
        for r in range(rank):
            K[row, piv[r]] = neg[R[r, f]]
        row += 1


@njit(cache=True)
def _det_inplace(M, sub, mul, inv, neg):
    m = M.shape[0]
    result = 1
    for c in range(m):
        p = -1
        for i in range(c, m):
            if M[i, c] != 0:
                p = i
                break
        if p < 0:
            return 0
        if p != c:
            for j in range(m):
                t = M[p, j]
                M[p, j] = M[c, j]
                M[c, j] = t
            result = neg[result]
        pv = M[c, c]
        result = mul[result, pv]
        ip = inv[pv]
        for i in range(c + 1, m):
            f = mul[M[i, c], ip]
            if f != 0:
                for j in range(c, m):
                    M[i, j] = sub[M[i, j], mul[f, M[c, j]]]
    return result


@njit(cache=True)
def rref_stack(A, sub, mul, inv):
    """rref of every matrix in an (N, r, c) stack; returns (R, rank)."""
    N, nr, nc = A.shape
    R = A.copy()
    rank = np.zeros(N, dtype=np.int64)
    piv = np.zeros(nr, dtype=np.int64)
    for b in range(N):
        rank[b] = _rref_inplace(R[b], piv, sub, mul, inv)
    return R, rank


@njit(cache=True)
def det_stack(A, sub, mul, inv, neg):
    N = A.shape[0]
    out = np.zeros(N, dtype=np.uint8)
    for b in range(N):
        out[b] = _det_inplace(A[b].copy(), sub, mul, inv, neg)
    return out


@njit(cache=True)
def dual_stack(R, rank, sub, mul, inv, neg):
    """rref generators of the duals of full-rank rref generators (N, k, n)."""
    N, k, n = R.shape
    out = np.zeros((N, n - k, n), dtype=np.uint8)
    piv = np.zeros(max(k, n - k), dtype=np.int64)
    for b in range(N):
        Rb = R[b].copy()
        _rref_inplace(Rb, piv, sub, mul, inv)
        _kernel_rows(Rb, rank[b], piv, out[b], neg)
        _rref_inplace(out[b], piv, sub, mul, inv)
    return out


@njit(cache=True)
def scaled_code_rrefs(G0, L, sub, mul, inv):
    """rref of ``G0 * diag(l)`` for every scalar row ``l`` of L."""
    k, n = G0.shape
    N = L.shape[0]
    out = np.empty((N, k, n), dtype=np.uint8)
    piv = np.zeros(k, dtype=np.int64)
    for b in range(N):
        G = out[b]
        for i in range(k):
            for j in range(n):
                G[i, j] = mul[G0[i, j], L[b, j]]
        _rref_inplace(G, piv, sub, mul, inv)
    return out


@njit(cache=True)
def _normalize_vec(v, mul, inv):
    s = 0
    for t in range(v.shape[0]):
        if v[t] != 0:
            s = inv[v[t]]
            break
    for t in range(v.shape[0]):
        v[t] = mul[v[t], s]


@njit(cache=True)
def identity_scan(G0, H0, Gd0, c, P0, tuples, L, flags, add, sub, mul, inv, neg):
    """Check the structure identities for every scalar row of L.

    ``G0``, ``H0``, ``Gd0`` are the generator, parity-check and dual generator
    matrices at unit scalars, ``c`` the dual scalars at unit scalars and
    ``P0`` the closed-form Plücker coordinates at unit scalars (0-based
    ``tuples``).  Returns per-check failure counts and the first failing row.
    """
    k, n = G0.shape
    m = n - k
    N = L.shape[0]
    ntup = tuples.shape[0]
    counts = np.zeros(5, dtype=np.int64)
    first = -1
    G = np.empty((k, n), dtype=np.uint8)
    R = np.empty((k, n), dtype=np.uint8)
    D = np.empty((m, n), dtype=np.uint8)
    Gd = np.empty((m, n), dtype=np.uint8)
    M = np.empty((m, m), dtype=np.uint8)
    piv = np.zeros(max(k, m), dtype=np.int64)
    linv = np.empty(n, dtype=np.uint8)
    lam = np.empty(n, dtype=np.uint8)
    closed = np.empty(ntup, dtype=np.uint8)
    minors = np.empty(ntup, dtype=np.uint8)
    for b in range(N):
        bad = False
        for j in range(n):
            linv[j] = inv[L[b, j]]
            for i in range(k):
                G[i, j] = mul[G0[i, j], L[b, j]]
        if flags[ANNIHILATION]:
            fail = False
            for a in range(k):
                for e in range(m):
                    acc = 0
                    for j in range(n):
                        acc = add[acc, mul[G[a, j], mul[linv[j], H0[j, e]]]]
                    if acc != 0:
                        fail = True
            if fail:
                counts[ANNIHILATION] += 1
                bad = True
        R[:, :] = G
        rank = _rref_inplace(R, piv, sub, mul, inv)
        if rank != k:
            # the remaining checks presuppose a [n, d+1] code
            counts[DIMENSION] += 1
            bad = True
        elif flags[DUALITY] or flags[PLUECKER]:
            _kernel_rows(R, rank, piv, D, neg)
            _rref_inplace(D, piv, sub, mul, inv)
            if flags[DUALITY]:
                for j in range(n):
                    lam[j] = mul[c[j], linv[j]]
                s = inv[lam[n - 1]]
                for j in range(n):
                    lam[j] = mul[lam[j], s]
                for i in range(m):
                    for j in range(n):
                        Gd[i, j] = mul[Gd0[i, j], lam[j]]
                _rref_inplace(Gd, piv, sub, mul, inv)
                fail = False
                for i in range(m):
                    for j in range(n):
                        if Gd[i, j] != D[i, j]:
                            fail = True
                if fail:
                    counts[DUALITY] += 1
                    bad = True
                # dual of the dual: c_j / lam_j, pinned
                s = inv[mul[c[n - 1], inv[lam[n - 1]]]]
                fail = False
                for j in range(n):
                    if mul[mul[c[j], inv[lam[j]]], s] != L[b, j]:
                        fail = True
                if fail:
                    counts[DOUBLE_DUAL] += 1
                    bad = True
            if flags[PLUECKER]:
                for t in range(ntup):
                    pr = 1
                    for i in range(m):
                        pr = mul[pr, L[b, tuples[t, i]]]
                    closed[t] = mul[P0[t], inv[pr]]
                    for i in range(m):
                        for e in range(m):
                            M[e, i] = D[e, tuples[t, i]]
                    minors[t] = _det_inplace(M, sub, mul, inv, neg)
                _normalize_vec(closed, mul, inv)
                _normalize_vec(minors, mul, inv)
                fail = False
                for t in range(ntup):
                    if closed[t] != minors[t]:
                        fail = True
                if fail:
                    counts[PLUECKER] += 1
                    bad = True
        if bad and first < 0:
            first = b
    return counts, first


def keys(R: np.ndarray) -> np.ndarray:
    """One opaque byte key per matrix; equal keys iff equal matrices."""
    flat = np.ascontiguousarray(R.reshape(R.shape[0], -1))
    return flat.view(np.dtype((np.void, flat.shape[1]))).reshape(-1)
