"""Quadric surfaces: isomorphism, isogeny of function fields, Brauer kernels."""
from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property

from .conic import (
    BOTH_RATIONAL, ISOMORPHIC, NOT_ISOGENOUS, BrauerKernel, QuaternionAlgebraQ,
    algebra_with_ramification, format_places, splits_over_places, witt_class_places,
)
from .errors import DomainError, TheoremConsistencyError, UnsupportedRankError
from .qform import (
    QuadraticForm, hasse_invariant, is_isotropic, is_isotropic_local, similar,
    witt_invariant,
)
from .rational import Place, SquareClass, is_local_square, places, square_class
from .report import ClassificationReport


@dataclass(frozen=True)
class QuadricSurface:
    """The surface q = 0 in P^3 for a nondegenerate quaternary diagonal form."""

    form: QuadraticForm

    def __post_init__(self):
        if not isinstance(self.form, QuadraticForm):
            object.__setattr__(self, "form", QuadraticForm(self.form))
        if self.form.rank != 4:
            raise UnsupportedRankError(f"a quadric surface needs rank 4, got {self.form.rank}")

    @classmethod
    def parse(cls, text: str) -> QuadricSurface:
        return cls(QuadraticForm.parse(text))

    @property
    def discriminant(self) -> SquareClass:
        return self.form.discriminant

    @cached_property
    def isotropic(self) -> bool:
        return is_isotropic(self.form)

    @cached_property
    def witt_places(self) -> frozenset[Place]:
        return witt_class_places(self.form)

    def __str__(self) -> str:
        return str(self.form)


def _as_surface(q) -> QuadricSurface:
    return q if isinstance(q, QuadricSurface) else QuadricSurface(q)


def _as_class(e) -> SquareClass:
    return e if isinstance(e, SquareClass) else square_class(e)


def extension_label(e: SquareClass) -> str:
    return "Q" if e.is_trivial() else f"Q(sqrt({e.value}))"


@dataclass(frozen=True)
class KernelOverExtension:
    """Brauer kernel of l(q) for l = Q(sqrt e), described through Q-data.

    ``witness_places`` is the ramification of a Q-algebra whose base
    change to l generates the kernel.
    """

    extension: SquareClass
    kernel: BrauerKernel
    witness: QuaternionAlgebraQ | None = None
    witness_places: frozenset[Place] = frozenset()

    @property
    def is_trivial(self) -> bool:
        return self.kernel.is_trivial

    def __str__(self) -> str:
        if self.is_trivial:
            return "Trivial"
        return f"Order2 generated by {self.witness} (ramified {format_places(self.witness_places)})"


def kernels_equal(k1: KernelOverExtension, k2: KernelOverExtension) -> bool:
    if k1.extension != k2.extension:
        raise DomainError("kernels over different extensions are not comparable")
    if k1.is_trivial or k2.is_trivial:
        return k1.is_trivial and k2.is_trivial
    return splits_over_places(k1.witness_places ^ k2.witness_places, k1.extension)


def quadrics_isomorphic(q, q2) -> bool:
    return similar(_as_surface(q).form, _as_surface(q2).form)


def fields_isogenous(q, q2) -> str:
    X, Y = _as_surface(q), _as_surface(q2)
    if X.isotropic and Y.isotropic:
        return BOTH_RATIONAL
    if X.isotropic != Y.isotropic:
        return NOT_ISOGENOUS
    return ISOMORPHIC if similar(X.form, Y.form) else NOT_ISOGENOUS


def is_isotropic_over_quadratic(q, e) -> bool:
    """Isotropy of q over Q(sqrt e) by Hasse-Minkowski over that field.

    Places of Q where e is a local square split, and the completion there
    is Q_v itself.  At the other places the completion is quadratic over
    Q_v; restriction kills Br(Q_v)[2], so a quaternary form is isotropic
    there.
    """
    X, e = _as_surface(q), _as_class(e)
    if e.is_trivial():
        return X.isotropic
    pl = places(X.form.support | set(e.primes))
    return all(is_isotropic_local(X.form, v) for v in pl if is_local_square(e.value, v))


def kernel_over_quadratic(q, e) -> KernelOverExtension:
    X, e = _as_surface(q), _as_class(e)
    d = X.discriminant
    if X.isotropic or (not d.is_trivial() and d != e):
        return KernelOverExtension(e, BrauerKernel.trivial())
    ram = X.witt_places
    split = splits_over_places(ram, e)
    isotropic_over_l = is_isotropic_over_quadratic(X, e)
    if split != isotropic_over_l:
        raise TheoremConsistencyError(
            f"{X.form!r} over {extension_label(e)}: Witt class split={split} "
            f"but isotropy={isotropic_over_l}")
    if d == e and not d.is_trivial() and split:
        # anisotropy must survive the passage to Q(sqrt d)
        raise TheoremConsistencyError(
            f"anisotropic {X.form!r} became isotropic over {extension_label(e)}")
    if split:
        return KernelOverExtension(e, BrauerKernel.trivial())
    w = algebra_with_ramification(ram)
    return KernelOverExtension(e, BrauerKernel.order2(ram, w), w, ram)


def brauer_kernel_quadric(q) -> BrauerKernel:
    """Brauer kernel over Q: nontrivial exactly for anisotropic forms of discriminant 1."""
    return kernel_over_quadratic(q, 1).kernel


def index_of_quadric(q: QuadraticForm) -> int:
    if q.rank not in (3, 4):
        raise UnsupportedRankError(f"index is implemented for rank 3 or 4, got {q.rank}")
    return 1 if is_isotropic(q) else 2


def tested_extensions(q, q2, extra=()) -> list[SquareClass]:
    out: list[SquareClass] = []
    for e in (SquareClass(), _as_surface(q).discriminant, _as_surface(q2).discriminant,
              *(_as_class(x) for x in extra)):
        if e not in out:
            out.append(e)
    return out


def theorem8b_decide(q, q2, extra_extensions=()) -> ClassificationReport:
    """Compare two quadric surfaces by every route and cross-check the routes.

    Kernels are compared over Q and Q(sqrt e) for e in {d, d'} plus any
    ``extra_extensions``.
    """
    X, Y = _as_surface(q), _as_surface(q2)
    rep = ClassificationReport("quadric compare", {"form": str(X), "form'": str(Y)})
    iso_quadrics = quadrics_isomorphic(X, Y)
    isogeny = fields_isogenous(X, Y)
    fields_iso = isogeny != NOT_ISOGENOUS

    exts = tested_extensions(X, Y, extra_extensions)
    separating = []
    for e in exts:
        k1, k2 = kernel_over_quadratic(X, e), kernel_over_quadratic(Y, e)
        label = extension_label(e)
        rep.invariant(f"kernel over {label}", None, f"{k1} | {k2}")
        if k1.witness is not None:
            rep.witnesses[f"form kernel over {label}"] = str(k1.witness)
        if k2.witness is not None:
            rep.witnesses[f"form' kernel over {label}"] = str(k2.witness)
        if not kernels_equal(k1, k2):
            separating.append(f"kernel over {label}")
    kernels_eq = not separating

    rep.verdict("isomorphic", iso_quadrics, "Prop13")
    rep.verdict("isogenous", isogeny, "Ohm-Thm16")
    rep.verdict("fields_isomorphic", fields_iso, "Thm8b")
    rep.verdict("kernels_equal", kernels_eq, "Thm8b-iii/Prop17")
    rep.verdict("separating_invariants", separating, "Prop17/Thm15a")
    rep.verdict("tested_extensions", [extension_label(e) for e in exts], "Thm8b-iii")
    _describe(rep, "form", X)
    _describe(rep, "form'", Y)

    if isogeny == ISOMORPHIC and not iso_quadrics:
        raise TheoremConsistencyError("Ohm-Thm16: isogenous anisotropic quadrics must be similar")
    if isogeny == NOT_ISOGENOUS and iso_quadrics:
        raise TheoremConsistencyError("Prop13: similar quadrics reported non-isogenous")
    if kernels_eq != fields_iso:
        raise TheoremConsistencyError(
            f"Thm8b: kernel equality {kernels_eq} but field isomorphism {fields_iso}")
    return rep


def _describe(rep: ClassificationReport, name: str, X: QuadricSurface) -> None:
    rep.invariant(f"{name} discriminant", None, X.discriminant.value)
    rep.invariant(f"{name} isotropic", None, X.isotropic)
    for v in X.form.relevant_places:
        rep.invariant(f"{name} hasse", v, hasse_invariant(X.form, v))
    for v in X.form.relevant_places:
        rep.invariant(f"{name} witt", v, witt_invariant(X.form, v))
