"""Brauer classes over Q as local-invariant vectors; Severi-Brauer comparisons."""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import gcd, lcm

from .conic import BrauerKernel, CYCLIC, QuaternionAlgebraQ, ramification_set
from .errors import DomainError
from .quadric import QuadricSurface, brauer_kernel_quadric
from .rational import INF, Place, as_rational


@dataclass(frozen=True)
class BrauerClassQ:
    """Element of Br(Q): local invariants in [0, 1), summing to 0 mod 1.

    Zero entries are dropped; anything else that is out of range or
    fails the sum rule is rejected rather than reduced.
    """

    entries: tuple[tuple[Place, Fraction], ...]

    def __init__(self, invariants=None):
        items = invariants.items() if isinstance(invariants, dict) else (invariants or ())
        clean: dict[Place, Fraction] = {}
        for v, x in items:
            if not isinstance(v, Place):
                v = Place.parse(str(v)) if isinstance(v, str) else Place(v)
            x = as_rational(x)
            if v in clean:
                raise DomainError(f"place {v} listed twice")
            if not 0 <= x < 1:
                raise DomainError(f"local invariant at {v} must lie in [0, 1), got {x}")
            if v.is_real and x not in (0, Fraction(1, 2)):
                raise DomainError(f"real invariant must be 0 or 1/2, got {x}")
            if x:
                clean[v] = x
        if sum(clean.values(), Fraction(0)).denominator != 1:
            raise DomainError(f"local invariants do not sum to 0 mod 1: {_fmt(clean)}")
        object.__setattr__(self, "entries", tuple(sorted(clean.items())))

    @classmethod
    def parse(cls, text: str) -> BrauerClassQ:
        """``"7:1/3,13:2/3"``; ``inf`` names the real place; ``0`` or empty is the zero class."""
        t = text.replace(" ", "")
        if t in ("", "0"):
            return cls()
        pairs = []
        for chunk in t.split(","):
            place, sep, value = chunk.partition(":")
            if not sep or not place or not value:
                raise DomainError(f"malformed local invariant {chunk!r}")
            pairs.append((Place.parse(place), as_rational(value)))
        return cls(pairs)

    @property
    def invariants(self) -> dict[Place, Fraction]:
        return dict(self.entries)

    def inv(self, v: Place) -> Fraction:
        return self.invariants.get(v, Fraction(0))

    def is_zero(self) -> bool:
        return not self.entries

    def __add__(self, other: BrauerClassQ) -> BrauerClassQ:
        out = self.invariants
        for v, x in other.entries:
            out[v] = (out.get(v, Fraction(0)) + x) % 1
        return BrauerClassQ(out)

    def __neg__(self) -> BrauerClassQ:
        return BrauerClassQ({v: (-x) % 1 for v, x in self.entries})

    def __sub__(self, other: BrauerClassQ) -> BrauerClassQ:
        return self + (-other)

    def __mul__(self, n: int) -> BrauerClassQ:
        if isinstance(n, bool) or not isinstance(n, int):
            return NotImplemented
        return BrauerClassQ({v: (n * x) % 1 for v, x in self.entries})

    __rmul__ = __mul__

    def __str__(self) -> str:
        return _fmt(self.invariants) if self.entries else "0"


def _fmt(inv: dict[Place, Fraction]) -> str:
    return ",".join(f"{v}:{x}" for v, x in sorted(inv.items()))


def order(x: BrauerClassQ) -> int:
    return lcm(1, *(f.denominator for _, f in x.entries))


def class_of_quaternion(B: QuaternionAlgebraQ) -> BrauerClassQ:
    return BrauerClassQ({v: Fraction(1, 2) for v in ramification_set(B)})


def same_cyclic_subgroup(x: BrauerClassQ, y: BrauerClassQ) -> bool:
    n = order(x)
    if n != order(y):
        return False
    return any(gcd(a, n) == 1 and a * x == y for a in range(1, n + 1))


@dataclass(frozen=True)
class SBVariety:
    """A Severi-Brauer variety of the given dimension with Brauer class ``cls``."""

    dimension: int
    cls: BrauerClassQ

    def __post_init__(self):
        if self.dimension < 1:
            raise DomainError(f"dimension must be positive, got {self.dimension}")
        if (self.dimension + 1) % order(self.cls):
            raise DomainError(
                f"class of order {order(self.cls)} cannot belong to a Severi-Brauer "
                f"variety of dimension {self.dimension}")


def sb_brauer_kernel(V: SBVariety) -> BrauerKernel:
    """The kernel is the cyclic group generated by the class of V."""
    if V.cls.is_zero():
        return BrauerKernel.trivial()
    return BrauerKernel(CYCLIC, cyclic=V.cls)


def sb_fields_isomorphic(V: SBVariety, W: SBVariety) -> bool:
    if V.dimension != W.dimension:
        raise DomainError(f"dimensions differ: {V.dimension} vs {W.dimension}")
    return same_cyclic_subgroup(V.cls, W.cls)


@dataclass(frozen=True)
class SBQuadricDecision:
    isomorphic: bool
    separating: str | None
    kernels_over_q_agree: bool
    ambiguous_kernel_criterion: bool


def sb_vs_quadric_decide(V: SBVariety, q) -> SBQuadricDecision:
    """Function field of a Severi-Brauer surface against that of a quadric surface.

    Equal only when both are rational.  When V is trivial and the quadric
    is anisotropic with discriminant != 1, both kernels over Q are trivial
    although the fields differ; that case is decided by rationality and
    flagged.
    """
    if V.dimension != 2:
        raise DomainError(f"expected a Severi-Brauer surface, got dimension {V.dimension}")
    X = q if isinstance(q, QuadricSurface) else QuadricSurface(q)
    kq = brauer_kernel_quadric(X)
    if not V.cls.is_zero():
        return SBQuadricDecision(False, "3-torsion vs 2-torsion", False, False)
    if X.isotropic:
        return SBQuadricDecision(True, None, True, False)
    agree = kq.is_trivial
    return SBQuadricDecision(False, "rationality: P^2 is rational, anisotropic quadric is not",
                             agree, agree)


__all__ = [
    "BrauerClassQ", "SBVariety", "SBQuadricDecision", "INF", "order",
    "class_of_quaternion", "same_cyclic_subgroup", "sb_brauer_kernel",
    "sb_fields_isomorphic", "sb_vs_quadric_decide",
]
