"""Canonical forms of integer symmetric matrices under signed permutations.

An integer unitary is exactly a signed permutation matrix, so unitary
similarity classes of integer symmetric matrices are signed graphs up to
relabelling and sign switching.  Components are canonicalized by
exhaustive lexicographic minimization.

Entry order used for "lexicographically least": 0 < 1 < -1 < 2 < -2 < ...
(absolute value first, positive before negative), so an all-positive edge
pattern beats its switched variants.
"""

from __future__ import annotations

import itertools

import numpy as np

from .errors import NotInteger, NotSymmetric, SizeCapExceeded

DEFAULT_SIZE_CAP = 8


def entry_key(v: int) -> tuple:
    return (abs(int(v)), 0 if v >= 0 else 1)


def matrix_key(mat: np.ndarray) -> tuple:
    return tuple(entry_key(v) for v in np.asarray(mat).ravel())


def check_symmetric_integer(mat: np.ndarray) -> np.ndarray:
    mat = np.asarray(mat)
    if not np.issubdtype(mat.dtype, np.integer):
        raise NotInteger("entries must be integers")
    if mat.ndim != 2 or mat.shape[0] != mat.shape[1]:
        raise NotSymmetric("matrix must be square")
    if not np.array_equal(mat, mat.T):
        raise NotSymmetric("matrix must be symmetric")
    return mat


def connected_components(mat: np.ndarray) -> list[list[int]]:
    """Components of the off-diagonal support graph, each sorted ascending."""
    n = mat.shape[0]
    seen = [False] * n
    comps = []
    for start in range(n):
        if seen[start]:
            continue
        stack = [start]
        seen[start] = True
        comp = []
        while stack:
            v = stack.pop()
            comp.append(v)
            for w in range(n):
                if w != v and not seen[w] and mat[v, w] != 0:
                    seen[w] = True
                    stack.append(w)
        comps.append(sorted(comp))
    return comps


def is_connected(mat: np.ndarray) -> bool:
    return mat.shape[0] > 0 and len(connected_components(mat)) == 1


def _orbit_min_for_perm(sub: np.ndarray, perm: tuple) -> tuple[tuple, np.ndarray]:
    """Lex-least (key, signs) over sign vectors for one vertex ordering.

    Signs act as D M D with D = diag(signs); the first sign is pinned to +1
    because D and -D give the same conjugation.
    """
    n = sub.shape[0]
    p = np.array(perm)
    m = sub[np.ix_(p, p)]
    if n == 1:
        return matrix_key(m), np.array([1])
    nfree = n - 1
    signs = np.ones((2**nfree, n), dtype=np.int64)
    for b in range(nfree):
        pattern = np.array([(idx >> b) & 1 for idx in range(2**nfree)])
        signs[:, b + 1] = 1 - 2 * pattern
    cands = signs[:, :, None] * m[None, :, :] * signs[:, None, :]
    flat = cands.reshape(cands.shape[0], -1)
    keys = np.stack([np.abs(flat), (flat < 0).astype(np.int64)], axis=-1)
    order = np.lexsort(
        tuple(keys[:, i, j] for i in reversed(range(flat.shape[1])) for j in (1, 0))
    )
    best = order[0]
    return matrix_key(cands[best]), signs[best]


def canonical_component(sub: np.ndarray, size_cap: int = DEFAULT_SIZE_CAP):
    """Canonical form of a connected signed graph.

    Returns (canonical matrix, perm, signs) where conjugating `sub` by the
    signed permutation built from (perm, signs) yields the canonical form:
    canonical[i, j] = signs[i] signs[j] sub[perm[i], perm[j]].
    """
    sub = np.asarray(sub, dtype=np.int64)
    n = sub.shape[0]
    if n > size_cap:
        raise SizeCapExceeded(f"component of size {n} exceeds cap {size_cap}")
    best_key = None
    best = None
    for perm in itertools.permutations(range(n)):
        key, signs = _orbit_min_for_perm(sub, perm)
        if best_key is None or key < best_key:
            best_key = key
            best = (perm, signs)
    perm, signs = best
    p = np.array(perm)
    canon = signs[:, None] * sub[np.ix_(p, p)] * signs[None, :]
    return canon, p, signs


def is_canonical_connected(mat: np.ndarray, size_cap: int = DEFAULT_SIZE_CAP) -> bool:
    mat = np.asarray(mat, dtype=np.int64)
    if mat.shape[0] == 0 or not np.array_equal(mat, mat.T):
        return False
    if not is_connected(mat):
        return False
    canon, _, _ = canonical_component(mat, size_cap)
    return np.array_equal(canon, mat)
