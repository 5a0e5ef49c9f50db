"""Quaternion algebras over Q, their conics, and Brauer kernels of genus-zero curves."""
from __future__ import annotations

from dataclasses import dataclass, field
from functools import lru_cache
from typing import TYPE_CHECKING

from .errors import ImplementationBugError
from .hilbert import _hilbert_int, hilbert_symbol
from .qform import QuadraticForm, class_splits_over, is_isotropic, witt_ramification
from .rational import Place, SquareClass, is_prime, places, square_class

if TYPE_CHECKING:
    from .brauer import BrauerClassQ

TRIVIAL = "Trivial"
ORDER2 = "Order2"
CYCLIC = "Cyclic"

ISOMORPHIC = "Isomorphic"
NOT_ISOGENOUS = "NotIsogenous"
BOTH_RATIONAL = "BothRational"


@dataclass(frozen=True)
class QuaternionAlgebraQ:
    """The symbol algebra (a, b) over Q; only the square classes of a, b matter."""

    a: SquareClass
    b: SquareClass

    def __init__(self, a, b):
        object.__setattr__(self, "a", a if isinstance(a, SquareClass) else square_class(a))
        object.__setattr__(self, "b", b if isinstance(b, SquareClass) else square_class(b))

    def __str__(self) -> str:
        return f"({self.a.value},{self.b.value})"

    @property
    def relevant_places(self) -> list[Place]:
        return places(set(self.a.primes) | set(self.b.primes))


HAMILTON = QuaternionAlgebraQ(-1, -1)


@dataclass(frozen=True)
class GenusZeroCurve:
    """The conic a X^2 + b Y^2 - ab Z^2 = 0 attached to a quaternion algebra."""

    algebra: QuaternionAlgebraQ

    @classmethod
    def from_symbol(cls, a, b) -> GenusZeroCurve:
        return cls(QuaternionAlgebraQ(a, b))


def format_places(ram) -> str:
    return "{" + ",".join(str(v) for v in sorted(ram)) + "}"


@dataclass(frozen=True)
class BrauerKernel:
    """Brauer kernel of a function field over Q.

    ``Order2`` kernels are identified by their ramification set; the
    witness algebra is carried along but is not part of equality.
    """

    kind: str = TRIVIAL
    ramification: tuple[Place, ...] = ()
    cyclic: BrauerClassQ | None = None
    witness: QuaternionAlgebraQ | None = field(default=None, compare=False)

    def __post_init__(self):
        if self.kind == ORDER2 and not self.ramification:
            raise ImplementationBugError("an Order2 kernel needs a nonsplit representative")
        if self.kind == CYCLIC and (self.cyclic is None or self.cyclic.is_zero()):
            raise ImplementationBugError("a Cyclic kernel needs a nonzero class")

    @classmethod
    def trivial(cls) -> BrauerKernel:
        return cls(TRIVIAL)

    @classmethod
    def order2(cls, ramification, witness: QuaternionAlgebraQ | None = None) -> BrauerKernel:
        return cls(ORDER2, tuple(sorted(ramification)), None, witness)

    @property
    def is_trivial(self) -> bool:
        return self.kind == TRIVIAL

    def __str__(self) -> str:
        if self.kind == ORDER2:
            return f"Order2{format_places(self.ramification)}"
        if self.kind == CYCLIC:
            return f"Cyclic<{self.cyclic}>"
        return TRIVIAL


def conic_form(B: QuaternionAlgebraQ) -> QuadraticForm:
    """<a, b, -ab>."""
    a, b = B.a.value, B.b.value
    return QuadraticForm((a, b, -a * b))


def normalized_form(B: QuaternionAlgebraQ) -> QuadraticForm:
    """The discriminant-1 companion <-a, -b, ab>, whose Witt invariant is B."""
    a, b = B.a.value, B.b.value
    return QuadraticForm((-a, -b, a * b))


def ramification_set(B: QuaternionAlgebraQ) -> frozenset[Place]:
    ram = frozenset(v for v in B.relevant_places
                    if hilbert_symbol(B.a.value, B.b.value, v) == -1)
    if len(ram) % 2:
        raise ImplementationBugError(f"odd ramification set {format_places(ram)} for {B}")
    return ram


def is_split(B: QuaternionAlgebraQ) -> bool:
    by_conic = is_isotropic(conic_form(B))
    by_places = not ramification_set(B)
    if by_conic != by_places:
        raise ImplementationBugError(
            f"{B}: conic isotropy {by_conic} disagrees with empty ramification {by_places}")
    return by_conic


def isomorphic_algebras(B: QuaternionAlgebraQ, B2: QuaternionAlgebraQ) -> bool:
    return ramification_set(B) == ramification_set(B2)


def brauer_kernel_conic(C: GenusZeroCurve) -> BrauerKernel:
    if is_split(C.algebra):
        return BrauerKernel.trivial()
    return BrauerKernel.order2(ramification_set(C.algebra), C.algebra)


def conic_fields_compare(C: GenusZeroCurve, C2: GenusZeroCurve) -> str:
    """Genus-zero function fields are isogenous only when isomorphic."""
    if ramification_set(C.algebra) == ramification_set(C2.algebra):
        return ISOMORPHIC
    return NOT_ISOGENOUS


def splits_over_places(ram, e) -> bool:
    e = e if isinstance(e, SquareClass) else square_class(e)
    return class_splits_over(ram, e)


def splits_over(B: QuaternionAlgebraQ, e) -> bool:
    e = e if isinstance(e, SquareClass) else square_class(e)
    if e.is_trivial():
        return is_split(B)
    return splits_over_places(ramification_set(B), e)


def witt_class_places(q: QuadraticForm) -> frozenset[Place]:
    """Ramification of the Witt invariant c(q) viewed as a quaternion class."""
    ram = witt_ramification(q)
    if len(ram) % 2:
        raise ImplementationBugError(f"Witt invariant of {q!r} has odd ramification")
    return ram


@lru_cache(maxsize=1)
def _b_candidates() -> tuple[int, ...]:
    out = [-1, 2, -2]
    for p in range(3, 20000, 2):
        if is_prime(p):
            out += [p, -p, 2 * p, -2 * p]
    return tuple(out)


@lru_cache(maxsize=4096)
def _presentation(target: frozenset[Place]) -> QuaternionAlgebraQ:
    if not target:
        return QuaternionAlgebraQ(1, 1)
    odd = 1
    for v in target:
        if v.prime not in (None, 2):
            odd *= v.prime
    a_cands = [s * t * odd for t in (1, 2) for s in (-1, 1)]
    inside = [v.prime for v in target]
    for b in _b_candidates():
        for a in a_cands:
            # cheap rejection on the target places before the full check
            if any(_hilbert_int(a, b, p) == 1 for p in inside):
                continue
            B = QuaternionAlgebraQ(a, b)
            if ramification_set(B) == target:
                return B
    raise ImplementationBugError(f"no presentation found for {format_places(target)}")


def algebra_with_ramification(ram) -> QuaternionAlgebraQ:
    """A symbol (a, b) whose ramification set is exactly ``ram``.

    ``a`` runs over signed products of the finite ramified primes (and 2),
    ``b`` over small signed primes and their doubles; the first hit wins,
    so the answer is deterministic.
    """
    target = frozenset(ram)
    if len(target) % 2:
        raise ImplementationBugError(f"no quaternion algebra ramifies at {format_places(target)}")
    return _presentation(target)
