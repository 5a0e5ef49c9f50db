"""Hilbert symbols (a, b)_v over Q.

Symbols are multiplicative (+1/-1).  ``to_additive`` converts to the
0/1 convention used when Br(Q)[2] is written additively.
"""
from __future__ import annotations

from functools import lru_cache

from .errors import DomainError, ImplementationBugError
from .rational import INF, Place, as_rational, legendre, relevant_places, square_class


def to_additive(sym: int) -> int:
    return 0 if sym == 1 else 1


def from_additive(bit: int) -> int:
    return 1 if bit % 2 == 0 else -1


def _split(n: int, p: int) -> tuple[int, int]:
    """n = p^k * u with p not dividing u; returns (k, u)."""
    k = 0
    while n % p == 0:
        n //= p
        k += 1
    return k, n


@lru_cache(maxsize=1 << 18)
def _hilbert_int(a: int, b: int, p: int | None) -> int:
    if p is None:
        return -1 if a < 0 and b < 0 else 1
    alpha, u = _split(a, p)
    beta, w = _split(b, p)
    if p == 2:
        eps_u = ((u - 1) // 2) % 2
        eps_w = ((w - 1) // 2) % 2
        omega_u = ((u * u - 1) // 8) % 2
        omega_w = ((w * w - 1) // 8) % 2
        e = eps_u * eps_w + alpha * omega_w + beta * omega_u
        return -1 if e % 2 else 1
    sign = -1 if (alpha * beta * ((p - 1) // 2)) % 2 else 1
    lu = legendre(u, p) ** beta
    lw = legendre(w, p) ** alpha
    return sign * lu * lw


def hilbert_symbol(a, b, v: Place) -> int:
    """(a, b)_v by the classical local formulas.

    Inputs are first reduced to squarefree integers, which the symbol
    cannot see the difference of.
    """
    ra, rb = as_rational(a), as_rational(b)
    if ra == 0 or rb == 0:
        raise DomainError("Hilbert symbol needs nonzero arguments")
    return _hilbert_int(square_class(ra).value, square_class(rb).value, v.prime)


# --- brute-force oracle ----------------------------------------------------
#
# For squarefree a, b every primitive solution of a X^2 + b Y^2 = Z^2 modulo
# p^3 (odd p) or 2^8 lifts to Z_p, and every p-adic zero reduces to one, so
# the existence of a primitive zero modulo these moduli decides the symbol.

def oracle_modulus(p: int) -> int:
    return 2**8 if p == 2 else p**3


@lru_cache(maxsize=64)
def _squares_mod(m: int) -> tuple[frozenset[int], tuple[int, ...]]:
    sq = {x * x % m for x in range(m)}
    return frozenset(sq), tuple(sorted(sq))


@lru_cache(maxsize=1 << 16)
def _primitive_zero_exists(a: int, b: int, p: int) -> bool:
    m = oracle_modulus(p)
    sq_set, sq_list = _squares_mod(m)
    # Every primitive triple is a unit multiple of one with X = 1, or with
    # p | X and Y = 1, or with p | X, p | Y and Z = 1.
    for s in sq_list:                                    # X = 1
        if (a + b * s) % m in sq_set:
            return True
    mult_sq = sorted({(p * t) ** 2 % m for t in range(m // p)})
    for s in mult_sq:                                    # p | X, Y = 1
        if (a * s + b) % m in sq_set:
            return True
    for s in mult_sq:                                    # p | X, p | Y, Z = 1
        for t in mult_sq:
            if (a * s + b * t - 1) % m == 0:
                return True
    return False


def hilbert_oracle(a, b, v: Place) -> int:
    """(a, b)_v by exhaustive search for a primitive zero of aX^2 + bY^2 - Z^2.

    Shares nothing with :func:`hilbert_symbol` beyond squarefree reduction.
    """
    ra, rb = as_rational(a), as_rational(b)
    if ra == 0 or rb == 0:
        raise DomainError("Hilbert symbol needs nonzero arguments")
    sa, sb = square_class(ra).value, square_class(rb).value
    if v.is_real:
        # a x^2 + b y^2 = z^2 has a real zero unless both terms are negative definite
        return -1 if sa < 0 and sb < 0 else 1
    return 1 if _primitive_zero_exists(sa, sb, v.prime) else -1


def reciprocity_check(a, b) -> bool:
    """Product of (a, b)_v over the relevant places; raises if it is not +1."""
    total = 1
    for v in relevant_places(a, b):
        total *= hilbert_symbol(a, b, v)
    if total != 1:
        raise ImplementationBugError(f"Hilbert reciprocity fails for ({a}, {b})")
    return True


def ramified_places(a, b) -> list[Place]:
    """Places where (a, b)_v = -1, in canonical order."""
    return [v for v in relevant_places(a, b) if hilbert_symbol(a, b, v) == -1]


__all__ = [
    "INF", "hilbert_symbol", "hilbert_oracle", "reciprocity_check",
    "ramified_places", "to_additive", "from_additive", "oracle_modulus",
]
