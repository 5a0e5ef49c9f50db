"""Brute-force oracles used to cross-check the closed-form decisions.

None of these is on a production path; they exist so that tests (and
curious users) can compare the local-invariant machinery against
direct search.
"""
from __future__ import annotations

import os
from functools import lru_cache
from itertools import combinations
from math import lcm, prod

import numpy as np

from .errors import UnsupportedRankError
from .qform import QuadraticForm, hasse_invariant, scale, signature
from .rational import is_prime

DEFAULT_SEARCH_BOUND = 200
AUX_PRIME_LIMIT = 100


def search_bound() -> int:
    """Box size for integer searches; ``WITT_KERNEL_SEARCH_BOUND`` overrides the default."""
    raw = os.environ.get("WITT_KERNEL_SEARCH_BOUND")
    return int(raw) if raw else DEFAULT_SEARCH_BOUND


def integer_coefficients(q: QuadraticForm) -> list[int]:
    den = lcm(*(c.denominator for c in q.coefficients))
    return [int(c * den) for c in q.coefficients]


def search_integer_zero(q: QuadraticForm, bound: int | None = None):
    """A nonzero integer zero (x, y, z) of a ternary form with entries in [-bound, bound], or None."""
    if q.rank != 3:
        raise UnsupportedRankError("integer zero search is implemented for ternary forms")
    B = search_bound() if bound is None else bound
    a, b, c = integer_coefficients(q)
    xs = np.arange(B + 1, dtype=np.int64)
    sq = xs * xs
    # a x^2 + b y^2 = -c z^2; signs of x, y, z do not matter
    t = -(a * sq[:, None] + b * sq[None, :])
    ok = (t % c == 0)
    z2 = np.where(ok, t // c, -1)
    ok &= (z2 >= 0) & (z2 <= B * B)
    is_sq = np.zeros(B * B + 1, dtype=bool)
    is_sq[sq] = True
    ok &= is_sq[np.clip(z2, 0, B * B)]
    ok[0, 0] = False
    hits = np.argwhere(ok)
    if len(hits) == 0:
        return None
    x, y = (int(v) for v in hits[0])
    zz = int(z2[x, y])
    z = int(np.searchsorted(sq, zz))
    return x, y, z


def scalar_candidates(q: QuadraticForm, q2: QuadraticForm) -> tuple[int, ...]:
    """Signed products of the joint support, alone or times one auxiliary prime < 100."""
    return _candidates(frozenset(q.support | q2.support | {2}))


@lru_cache(maxsize=256)
def _candidates(support: frozenset[int]) -> tuple[int, ...]:
    joint = sorted(support)
    base = []
    for r in range(len(joint) + 1):
        for sub in combinations(joint, r):
            base.append(prod(sub))
    aux = [p for p in range(3, AUX_PRIME_LIMIT) if is_prime(p) and p not in joint]
    out = []
    for s in (1, -1):
        for c in base:
            out.append(s * c)
            out.extend(s * c * p for p in aux)
    return tuple(out)


@lru_cache(maxsize=1 << 18)
def equivalence_key(q: QuadraticForm) -> tuple:
    """Complete isometry invariant for rank <= 4: two forms are isometric iff keys match."""
    if q.rank > 4:
        raise UnsupportedRankError("isometry keys are only complete for rank <= 4")
    minus = frozenset(v for v in q.relevant_places if hasse_invariant(q, v) == -1)
    return q.rank, q.discriminant, signature(q), minus


@lru_cache(maxsize=1 << 14)
def scaled_keys(q: QuadraticForm, candidates: tuple) -> frozenset[tuple]:
    return frozenset(equivalence_key(scale(c, q)) for c in candidates)


def similar_by_scalar_search(q: QuadraticForm, q2: QuadraticForm, candidates=None) -> bool:
    """Similarity by trying explicit scalars c with cq isometric to q2."""
    if q.rank != q2.rank or q.rank > 4:
        raise UnsupportedRankError("scalar search needs equal rank <= 4")
    if candidates is None:
        candidates = scalar_candidates(q, q2)
    return equivalence_key(q2) in scaled_keys(q, tuple(candidates))
