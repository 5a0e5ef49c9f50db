"""Exact rationals, factorization, square classes and places of Q.

Rationals are :class:`fractions.Fraction`; nothing in the package touches
floating point.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from math import isqrt, prod
from numbers import Rational as _RationalABC

from .errors import DomainError

Rational = Fraction

FACTOR_LIMIT = 2**63 - 1


def as_rational(x) -> Fraction:
    """Coerce an int, Fraction or ``"p/q"`` string to a Fraction.

    Floats are refused outright; a binary float is never an exact input.
    """
    if isinstance(x, bool):
        raise DomainError(f"not a rational: {x!r}")
    if isinstance(x, Fraction):
        return x
    if isinstance(x, int) or isinstance(x, _RationalABC):
        return Fraction(x)
    if isinstance(x, str):
        s = x.strip()
        if not s or any(c in s for c in ".eE_ "):
            raise DomainError(f"not an exact rational: {x!r}")
        try:
            return Fraction(s)
        except (ValueError, ZeroDivisionError) as exc:
            raise DomainError(f"not a rational: {x!r}") from exc
    raise DomainError(f"not a rational: {x!r}")


@lru_cache(maxsize=65536)
def factorize(n: int) -> tuple[int, ...]:
    """Prime factors of ``n`` with multiplicity, ascending.

    >>> factorize(12)
    (2, 2, 3)
    """
    if isinstance(n, bool) or not isinstance(n, int):
        raise DomainError(f"factorize expects an int, got {n!r}")
    if n < 1:
        raise DomainError(f"factorize expects a positive integer, got {n}")
    if n > FACTOR_LIMIT:
        raise DomainError(f"{n} exceeds the trial-division bound 2^63-1")
    out = []
    while n % 2 == 0:
        out.append(2)
        n //= 2
    f = 3
    while f * f <= n:
        while n % f == 0:
            out.append(f)
            n //= f
        f += 2
    if n > 1:
        out.append(n)
    return tuple(out)


def is_prime(n: int) -> bool:
    return n >= 2 and factorize(n) == (n,)


def valuation(x, p: int) -> int:
    """p-adic valuation of a nonzero rational."""
    r = as_rational(x)
    if r == 0:
        raise DomainError("valuation of zero")
    v = 0
    num, den = abs(r.numerator), r.denominator
    while num % p == 0:
        num //= p
        v += 1
    while den % p == 0:
        den //= p
        v -= 1
    return v


def prime_support(x) -> frozenset[int]:
    """Primes dividing the numerator or denominator of ``x``."""
    r = as_rational(x)
    if r == 0:
        raise DomainError("prime support of zero")
    return frozenset(factorize(abs(r.numerator))) | frozenset(factorize(r.denominator))


@dataclass(frozen=True, order=True)
class SquareClass:
    """An element of Q^x / Q^x2, stored as sign and the odd-exponent primes."""

    sign: int = 1
    primes: tuple[int, ...] = ()

    def __post_init__(self):
        if self.sign not in (1, -1):
            raise DomainError(f"sign must be +1 or -1, got {self.sign}")
        if list(self.primes) != sorted(set(self.primes)):
            raise DomainError(f"primes must be strictly increasing: {self.primes}")
        for p in self.primes:
            if not is_prime(p):
                raise DomainError(f"{p} is not prime")

    @classmethod
    def of(cls, x) -> SquareClass:
        return square_class(x)

    @property
    def value(self) -> int:
        return self.sign * prod(self.primes)

    def __int__(self) -> int:
        return self.value

    def __mul__(self, other: SquareClass) -> SquareClass:
        return SquareClass(self.sign * other.sign,
                           tuple(sorted(set(self.primes) ^ set(other.primes))))

    def is_trivial(self) -> bool:
        return self.sign == 1 and not self.primes

    def __str__(self) -> str:
        return str(self.value)


@lru_cache(maxsize=65536)
def _square_class_cached(r: Fraction) -> SquareClass:
    odd = []
    counts: dict[int, int] = {}
    for p in factorize(abs(r.numerator)) + factorize(r.denominator):
        counts[p] = counts.get(p, 0) + 1
    for p, k in sorted(counts.items()):
        if k % 2:
            odd.append(p)
    return SquareClass(1 if r > 0 else -1, tuple(odd))


def square_class(x) -> SquareClass:
    """Canonical squarefree representative of ``x`` modulo squares."""
    r = as_rational(x)
    if r == 0:
        raise DomainError("square class of zero is undefined")
    return _square_class_cached(r)


def squarefree_part(x) -> int:
    return square_class(x).value


@dataclass(frozen=True)
class Place:
    """A place of Q: ``Place(p)`` for a prime p, ``Place(None)`` for the real place."""

    prime: int | None = None

    def __post_init__(self):
        if self.prime is not None and not is_prime(self.prime):
            raise DomainError(f"{self.prime} is not a prime")

    @property
    def is_real(self) -> bool:
        return self.prime is None

    @property
    def sort_key(self) -> tuple[int, int]:
        # 2 < 3 < 5 < ... < inf
        return (1, 0) if self.prime is None else (0, self.prime)

    def __lt__(self, other: Place) -> bool:
        return self.sort_key < other.sort_key

    def __str__(self) -> str:
        return "inf" if self.prime is None else str(self.prime)

    @classmethod
    def parse(cls, token: str) -> Place:
        t = token.strip().lower()
        if t in ("inf", "oo", "infinity", "real"):
            return INF
        try:
            p = int(t)
        except ValueError:
            raise DomainError(f"not a place: {token!r}") from None
        return cls(p)


INF = Place(None)


def places(primes) -> list[Place]:
    """Sorted place list: the given primes, plus 2 and the real place."""
    return sorted({INF, Place(2)} | {Place(p) for p in primes})


def relevant_places(*xs) -> list[Place]:
    """``{inf, 2} U {primes of xs}`` in canonical order."""
    support: set[int] = set()
    for x in xs:
        support |= prime_support(x)
    return places(support)


def legendre(a: int, p: int) -> int:
    """Legendre symbol (a/p) for an odd prime p, by Euler's criterion."""
    a %= p
    if a == 0:
        return 0
    return 1 if pow(a, (p - 1) // 2, p) == 1 else -1


def is_local_square(x, v: Place) -> bool:
    """True iff ``x`` is a square in Q_v."""
    r = as_rational(x)
    if r == 0:
        raise DomainError("is_local_square of zero")
    if v.is_real:
        return r > 0
    p = v.prime
    n = square_class(r).value
    if n % p == 0:
        return False
    if p == 2:
        return n % 8 == 1
    return legendre(n, p) == 1


def is_square(x) -> bool:
    r = as_rational(x)
    if r < 0:
        return False
    return all(isqrt(t) ** 2 == t for t in (r.numerator, r.denominator))
