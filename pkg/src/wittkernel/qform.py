"""Diagonal nondegenerate quadratic forms over Q and their local invariants."""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import cached_property, lru_cache
from math import prod

from .errors import DomainError, UnsupportedRankError
from .hilbert import hilbert_symbol
from .rational import (
    Place, SquareClass, as_rational, is_local_square, places, prime_support,
    square_class,
)


@dataclass(frozen=True)
class QuadraticForm:
    """The diagonal form <a_1, ..., a_n>."""

    coefficients: tuple[Fraction, ...]

    def __init__(self, coefficients):
        coeffs = tuple(as_rational(c) for c in coefficients)
        if not coeffs:
            raise DomainError("a quadratic form needs rank >= 1")
        if any(c == 0 for c in coeffs):
            raise DomainError(f"degenerate form: zero coefficient in {coeffs}")
        object.__setattr__(self, "coefficients", coeffs)

    @classmethod
    def parse(cls, text: str) -> QuadraticForm:
        """Parse ``"1,-2,3/5"`` (spaces tolerated)."""
        parts = [t for t in text.replace(" ", "").split(",")]
        if not parts or any(not t for t in parts):
            raise DomainError(f"malformed form: {text!r}")
        return cls(as_rational(t) for t in parts)

    @property
    def rank(self) -> int:
        return len(self.coefficients)

    def __len__(self) -> int:
        return self.rank

    def __iter__(self):
        return iter(self.coefficients)

    def __str__(self) -> str:
        return ",".join(str(c) for c in self.coefficients)

    def __repr__(self) -> str:
        return f"<{', '.join(str(c) for c in self.coefficients)}>"

    def __add__(self, other: QuadraticForm) -> QuadraticForm:
        """Orthogonal sum."""
        return QuadraticForm(self.coefficients + other.coefficients)

    @cached_property
    def support(self) -> frozenset[int]:
        out: frozenset[int] = frozenset()
        for c in self.coefficients:
            out |= prime_support(c)
        return out

    @cached_property
    def relevant_places(self) -> list[Place]:
        return places(self.support)

    @cached_property
    def discriminant(self) -> SquareClass:
        return square_class(prod(self.coefficients))


@dataclass(frozen=True)
class FormInvariants:
    rank: int
    discriminant: SquareClass
    signature: tuple[int, int]
    hasse_at: dict[Place, int]
    witt_at: dict[Place, int]


def discriminant(q: QuadraticForm) -> SquareClass:
    return q.discriminant


def signature(q: QuadraticForm) -> tuple[int, int]:
    pos = sum(1 for c in q.coefficients if c > 0)
    return pos, q.rank - pos


@lru_cache(maxsize=1 << 16)
def hasse_invariant(q: QuadraticForm, v: Place) -> int:
    """Product of (a_i, a_j)_v over i < j."""
    c = q.coefficients
    s = 1
    for i in range(len(c)):
        for j in range(i + 1, len(c)):
            s *= hilbert_symbol(c[i], c[j], v)
    return s


def witt_correction(q: QuadraticForm, v: Place) -> int:
    """The rank-mod-8 correction turning the Hasse invariant into the Witt invariant."""
    r = q.rank % 8
    d = q.discriminant.value
    if r in (1, 2):
        return 1
    if r in (3, 4):
        return hilbert_symbol(-1, -d, v)
    if r in (5, 6):
        return hilbert_symbol(-1, -1, v)
    return hilbert_symbol(-1, d, v)


def witt_invariant(q: QuadraticForm, v: Place) -> int:
    return hasse_invariant(q, v) * witt_correction(q, v)


def witt_ramification(q: QuadraticForm) -> frozenset[Place]:
    """Places where the Witt invariant is -1 (a quaternion class over Q)."""
    return frozenset(v for v in q.relevant_places if witt_invariant(q, v) == -1)


def invariants(q: QuadraticForm) -> FormInvariants:
    pl = q.relevant_places
    return FormInvariants(
        rank=q.rank,
        discriminant=q.discriminant,
        signature=signature(q),
        hasse_at={v: hasse_invariant(q, v) for v in pl},
        witt_at={v: witt_invariant(q, v) for v in pl},
    )


def is_isotropic_local(q: QuadraticForm, v: Place) -> bool:
    n = q.rank
    if v.is_real:
        pos, neg = signature(q)
        return pos > 0 and neg > 0
    if n == 1:
        return False
    d = q.discriminant.value
    if n == 2:
        return is_local_square(-d, v)
    if n == 3:
        return hilbert_symbol(-1, -d, v) == hasse_invariant(q, v)
    if n == 4:
        return (not is_local_square(d, v)) or hasse_invariant(q, v) == hilbert_symbol(-1, -1, v)
    return True


@lru_cache(maxsize=1 << 14)
def is_isotropic(q: QuadraticForm) -> bool:
    """Hasse-Minkowski: isotropic over Q iff isotropic at every relevant place."""
    return all(is_isotropic_local(q, v) for v in q.relevant_places)


def equivalent(q: QuadraticForm, q2: QuadraticForm) -> bool:
    """Isometry over Q for rank <= 4, via rank, discriminant, signature and Hasse invariants."""
    if q.rank > 4 or q2.rank > 4:
        raise UnsupportedRankError("equivalence is only implemented for rank <= 4")
    if q.rank != q2.rank or q.discriminant != q2.discriminant:
        return False
    if signature(q) != signature(q2):
        return False
    pl = places(q.support | q2.support)
    return all(hasse_invariant(q, v) == hasse_invariant(q2, v) for v in pl)


def scale(c, q: QuadraticForm) -> QuadraticForm:
    c = as_rational(c)
    if c == 0:
        raise DomainError("cannot scale a form by 0")
    return QuadraticForm(c * a for a in q.coefficients)


def pfister2(a, b) -> QuadraticForm:
    """The 2-fold Pfister form <<a, b>> = <1, a, b, ab>."""
    a, b = as_rational(a), as_rational(b)
    if a == 0 or b == 0:
        raise DomainError("Pfister form needs nonzero slots")
    return QuadraticForm((1, a, b, a * b))


def class_splits_over(ram, e: SquareClass) -> bool:
    """Does the 2-torsion Brauer class ramified exactly at ``ram`` split over Q(sqrt e)?"""
    # a 2-torsion class over Q splits over Q(sqrt e) iff e is a nonsquare at each ramified place
    if e.is_trivial():
        return not ram
    return all(not is_local_square(e.value, v) for v in ram)


def similar(q: QuadraticForm, q2: QuadraticForm) -> bool:
    """Similarity (q2 isometric to c*q for some c) in rank 3 or 4.

    Rank 3: equal Witt invariants.  Rank 4: equal discriminant d and
    isotropy; for anisotropic pairs additionally c(q) c(q2) must split
    over Q(sqrt d).
    """
    if q.rank != q2.rank or q.rank not in (3, 4):
        raise UnsupportedRankError(
            f"similarity needs equal rank 3 or 4, got {q.rank} and {q2.rank}")
    if q.rank == 3:
        pl = places(q.support | q2.support)
        return all(witt_invariant(q, v) == witt_invariant(q2, v) for v in pl)
    d = q.discriminant
    if d != q2.discriminant:
        return False
    iso = is_isotropic(q)
    if iso != is_isotropic(q2):
        return False
    if iso:
        return True
    return class_splits_over(witt_ramification(q) ^ witt_ramification(q2), d)
