"""Torsor arithmetic inside one cyclic subgroup of a Weil-Chatelet group.

A class [C] is modelled as a residue ``a`` modulo ``m`` (the order of the
ambient cyclic group).  [C] and -[C] give isomorphic curves, so residues
are reported in the fundamental domain [0, m // 2].
"""
from __future__ import annotations

from dataclasses import dataclass
from math import gcd

from .errors import DomainError
from .rational import factorize

GATE_PERIODS = frozenset({1, 2, 3, 4, 6})


@dataclass(frozen=True)
class CyclicTorsorModel:
    modulus: int
    residue: int

    def __post_init__(self):
        if self.modulus < 1:
            raise DomainError(f"modulus must be >= 1, got {self.modulus}")
        if not 0 <= self.residue < self.modulus:
            raise DomainError(f"residue must lie in [0, {self.modulus}), got {self.residue}")

    def __str__(self) -> str:
        return f"{self.residue} mod {self.modulus}"


def period(t: CyclicTorsorModel) -> int:
    return t.modulus // gcd(t.residue, t.modulus)


def canonical_residue(a: int, m: int) -> int:
    a %= m
    return min(a, m - a) if a else 0


def etale_cover_exists(src: CyclicTorsorModel, dst: CyclicTorsorModel, n: int) -> bool:
    """Is there a degree n^2 etale cover src -> dst, i.e. [dst] = +-n [src]?"""
    if src.modulus != dst.modulus:
        raise DomainError(f"moduli differ: {src.modulus} vs {dst.modulus}")
    if n < 1:
        raise DomainError(f"n must be positive, got {n}")
    m = src.modulus
    return dst.residue in ((n * src.residue) % m, (-n * src.residue) % m)


def cover_degree(n: int) -> int:
    return n * n


def isogeny_orbit(t: CyclicTorsorModel) -> list[int]:
    """Canonical residues of the same-Jacobian curves isogenous to t."""
    n, m = period(t), t.modulus
    return sorted({canonical_residue(u * t.residue, m)
                   for u in range(1, n + 1) if gcd(u, n) == 1})


def totient(n: int) -> int:
    if n < 1:
        raise DomainError(f"totient needs n >= 1, got {n}")
    out = n
    for p in set(factorize(n)):
        out = out // p * (p - 1)
    return out


def n_c(n: int) -> int:
    """#(Z/n)^x / (+-1)."""
    phi = totient(n)
    return phi if n <= 2 else phi // 2


def theorem10_gate(period: int, jacobian_non_cm: bool, jacobian_isolated_or_mw_finite: bool) -> bool:
    """Do the genus-one hypotheses hold?  The two flags are facts supplied by the caller."""
    if period < 1:
        raise DomainError(f"period must be positive, got {period}")
    return period in GATE_PERIODS and jacobian_non_cm and jacobian_isolated_or_mw_finite
