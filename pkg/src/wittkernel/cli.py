"""Command-line front end.

Exit codes: 0 success, 2 parse error, 3 domain error, 4 internal
theorem-consistency failure.
"""
from __future__ import annotations

import argparse
import re
import sys
from fractions import Fraction

from .brauer import (
    BrauerClassQ, SBVariety, order, same_cyclic_subgroup,
    sb_brauer_kernel, sb_fields_isomorphic, sb_vs_quadric_decide,
)
from .conic import (
    GenusZeroCurve, QuaternionAlgebraQ, brauer_kernel_conic, conic_fields_compare,
    conic_form, format_places, is_split, normalized_form, ramification_set,
)
from .errors import DomainError, ImplementationBugError
from .genus_one import (
    CyclicTorsorModel, GATE_PERIODS, isogeny_orbit, n_c, period, theorem10_gate,
)
from .hilbert import hilbert_oracle, hilbert_symbol, reciprocity_check
from .qform import QuadraticForm, hasse_invariant, signature, witt_invariant
from .quadric import (
    QuadricSurface, brauer_kernel_quadric, extension_label, index_of_quadric,
    kernel_over_quadratic, theorem8b_decide,
)
from .rational import Place, relevant_places, square_class
from .report import ClassificationReport

EXIT_PARSE, EXIT_DOMAIN, EXIT_THEOREM = 2, 3, 4

_RATIONAL_RE = re.compile(r"^[+-]?\d+(/\d+)?$")
_PLACE_RE = re.compile(r"^(inf|\d+)$")


# --- token parsers (syntax only; semantic checks raise DomainError later) ---

def rational_token(tok: str) -> Fraction:
    t = tok.strip()
    if not _RATIONAL_RE.match(t) or t.endswith("/0"):
        raise argparse.ArgumentTypeError(f"not an exact rational: {tok.strip()!r}")
    return Fraction(t)


def int_token(tok: str) -> int:
    t = tok.strip()
    if not re.match(r"^[+-]?\d+$", t):
        raise argparse.ArgumentTypeError(f"not an integer: {t!r}")
    return int(t)


def form_token(tok: str) -> tuple[Fraction, ...]:
    parts = tok.replace(" ", "").split(",")
    out = []
    for p in parts:
        if not _RATIONAL_RE.match(p) or p.endswith("/0"):
            raise argparse.ArgumentTypeError(f"bad coefficient {p!r} in form {tok.strip()!r}")
        out.append(Fraction(p))
    return tuple(out)


def place_token(tok: str) -> str:
    t = tok.strip().lower()
    if not _PLACE_RE.match(t):
        raise argparse.ArgumentTypeError(f"not a place: {tok.strip()!r} (use a prime or 'inf')")
    return t


def class_token(tok: str) -> list[tuple[str, Fraction]]:
    t = tok.replace(" ", "")
    if t in ("", "0"):
        return []
    pairs = []
    for chunk in t.split(","):
        place, sep, value = chunk.partition(":")
        if not sep or not _PLACE_RE.match(place.lower()) or not _RATIONAL_RE.match(value) \
                or value.endswith("/0"):
            raise argparse.ArgumentTypeError(f"bad local invariant {chunk!r} in class {t!r}")
        pairs.append((place.lower(), Fraction(value)))
    return pairs


def bool_token(tok: str) -> bool:
    t = tok.strip().lower()
    if t in ("true", "yes", "1"):
        return True
    if t in ("false", "no", "0"):
        return False
    raise argparse.ArgumentTypeError(f"not a boolean: {tok.strip()!r}")


def _form(coeffs) -> QuadraticForm:
    return QuadraticForm(coeffs)


def _class(pairs) -> BrauerClassQ:
    return BrauerClassQ([(Place.parse(p), x) for p, x in pairs])


def _nonzero(x: Fraction, what: str) -> Fraction:
    if x == 0:
        raise DomainError(f"{what} must be nonzero")
    return x


# --- commands ---------------------------------------------------------------

def cmd_hilbert(args) -> ClassificationReport:
    a, b = _nonzero(args.a, "a"), _nonzero(args.b, "b")
    rep = ClassificationReport("hilbert", {"a": str(a), "b": str(b)})
    if args.place is not None:
        v = Place.parse(args.place)
        rep.inputs["place"] = str(v)
        sym = hilbert_symbol(a, b, v)
        if sym != hilbert_oracle(a, b, v):
            raise ImplementationBugError(f"Hilbert formula and oracle disagree at {v}")
        rep.verdict("symbol", sym, "Hilbert-local-formula")
        rep.verdict("oracle_agrees", True, "Hilbert-oracle")
        return rep
    ram = []
    for v in relevant_places(a, b):
        sym = hilbert_symbol(a, b, v)
        rep.invariant("symbol", v, sym)
        if sym == -1:
            ram.append(str(v))
    rep.verdict("ramified_places", ram, "Hilbert-local-formula")
    rep.verdict("reciprocity", reciprocity_check(a, b), "Hilbert-reciprocity")
    return rep


def _algebra_rows(rep, name, B):
    rep.invariant(f"{name} ramification", None, format_places(ramification_set(B)))
    qB = normalized_form(B)
    for v in qB.relevant_places:
        rep.invariant(f"{name} c(q_B)", v, witt_invariant(qB, v))


def cmd_conic_classify(args) -> ClassificationReport:
    B = QuaternionAlgebraQ(_nonzero(args.a, "a"), _nonzero(args.b, "b"))
    C = GenusZeroCurve(B)
    rep = ClassificationReport("conic classify", {"a": str(args.a), "b": str(args.b)})
    split = is_split(B)
    kernel = brauer_kernel_conic(C)
    rep.verdict("split", split, "Witt-Thm12")
    rep.verdict("rational_curve", split, "Witt-Thm12")
    rep.verdict("brauer_kernel", str(kernel), "Witt-Thm12")
    rep.verdict("index", 1 if split else 2, "index-of-quadrics")
    rep.invariant("conic form", None, str(conic_form(B)))
    rep.invariant("normalized form", None, str(normalized_form(B)))
    _algebra_rows(rep, "algebra", B)
    if not split:
        rep.witnesses["kernel generator"] = str(B)
    return rep


def cmd_conic_compare(args) -> ClassificationReport:
    B1 = QuaternionAlgebraQ(_nonzero(args.a, "a"), _nonzero(args.b, "b"))
    B2 = QuaternionAlgebraQ(_nonzero(args.a2, "a'"), _nonzero(args.b2, "b'"))
    rep = ClassificationReport("conic compare", {
        "a": str(args.a), "b": str(args.b), "a'": str(args.a2), "b'": str(args.b2)})
    verdict = conic_fields_compare(GenusZeroCurve(B1), GenusZeroCurve(B2))
    rep.verdict("fields", verdict, "Witt-Thm12")
    rep.verdict("isomorphic", verdict == "Isomorphic", "Witt-Thm12")
    k1, k2 = brauer_kernel_conic(GenusZeroCurve(B1)), brauer_kernel_conic(GenusZeroCurve(B2))
    rep.verdict("kernels_equal", k1 == k2, "Witt-Thm12")
    if (k1 == k2) != (verdict == "Isomorphic"):
        raise ImplementationBugError("Witt-Thm12: kernel equality disagrees with isomorphism")
    _algebra_rows(rep, "algebra", B1)
    _algebra_rows(rep, "algebra'", B2)
    return rep


def _quadric_rows(rep, name, X: QuadricSurface):
    rep.invariant(f"{name} discriminant", None, X.discriminant.value)
    pos, neg = signature(X.form)
    rep.invariant(f"{name} signature", None, f"({pos},{neg})")
    for v in X.form.relevant_places:
        rep.invariant(f"{name} hasse", v, hasse_invariant(X.form, v))
    for v in X.form.relevant_places:
        rep.invariant(f"{name} witt", v, witt_invariant(X.form, v))


def cmd_quadric_classify(args) -> ClassificationReport:
    X = QuadricSurface(_form(args.form))
    rep = ClassificationReport("quadric classify", {"form": str(X)})
    rep.verdict("isotropic", X.isotropic, "Hasse-Minkowski")
    rep.verdict("rational_function_field", X.isotropic, "isotropic-quadric-rationality")
    rep.verdict("index", index_of_quadric(X.form), "index-of-quadrics")
    rep.verdict("pfister_similar", X.discriminant.is_trivial(), "Pfister-discriminant-1")
    kq = brauer_kernel_quadric(X)
    rep.verdict("brauer_kernel", str(kq), "Prop17")
    if kq.witness is not None:
        rep.witnesses["kernel over Q"] = str(kq.witness)
    d = X.discriminant
    if not d.is_trivial():
        kd = kernel_over_quadratic(X, d)
        rep.verdict(f"kernel over {extension_label(d)}", str(kd), "Prop17/Thm15a")
        if kd.witness is not None:
            rep.witnesses[f"kernel over {extension_label(d)}"] = str(kd.witness)
    _quadric_rows(rep, "form", X)
    return rep


def cmd_quadric_compare(args) -> ClassificationReport:
    X, Y = QuadricSurface(_form(args.form)), QuadricSurface(_form(args.form2))
    return theorem8b_decide(X, Y)


def cmd_quadric_kernel(args) -> ClassificationReport:
    X = QuadricSurface(_form(args.form))
    e = square_class(_nonzero(args.ext, "extension")) if args.ext is not None else square_class(1)
    rep = ClassificationReport("quadric kernel", {"form": str(X), "ext": str(e.value)})
    k = kernel_over_quadratic(X, e)
    rep.verdict("extension", extension_label(e), "Prop17")
    rep.verdict("kernel", k.kernel.kind, "Prop17/Thm15a")
    if k.witness is not None:
        rep.witnesses["generator"] = str(k.witness)
        rep.invariant("generator ramification", None, format_places(k.witness_places))
    _quadric_rows(rep, "form", X)
    return rep


def cmd_sb_compare(args) -> ClassificationReport:
    x, y = _class(args.cls), _class(args.cls2)
    V, W = SBVariety(args.dim, x), SBVariety(args.dim, y)
    rep = ClassificationReport("sb compare", {"class": str(x), "class'": str(y), "dim": str(args.dim)})
    iso = sb_fields_isomorphic(V, W)
    rep.verdict("same_cyclic_subgroup", same_cyclic_subgroup(x, y), "Amitsur-Thm13")
    rep.verdict("fields_isomorphic", iso, "Thm8a/Amitsur-Thm13c")
    rep.verdict("isogenous", iso, "Thm8a")
    rep.verdict("kernels_equal", iso, "Amitsur-Thm13a")
    rep.invariant("order", None, order(x))
    rep.invariant("order'", None, order(y))
    rep.invariant("kernel", None, str(sb_brauer_kernel(V)))
    rep.invariant("kernel'", None, str(sb_brauer_kernel(W)))
    return rep


def cmd_sb_vs_quadric(args) -> ClassificationReport:
    x = _class(args.cls)
    V = SBVariety(2, x)
    X = QuadricSurface(_form(args.form))
    rep = ClassificationReport("sb vs-quadric", {"class": str(x), "form": str(X)})
    dec = sb_vs_quadric_decide(V, X)
    rep.verdict("fields_isomorphic", dec.isomorphic, "Thm8c")
    if dec.separating is not None:
        rep.verdict("separating_invariant", dec.separating,
                    "Thm8c/torsion-orders" if not x.is_zero() else "Thm8c-i")
    rep.verdict("kernels_over_Q_agree", dec.kernels_over_q_agree, "Prop17/Amitsur-Thm13a")
    rep.verdict("kernel_criterion_ambiguous", dec.ambiguous_kernel_criterion, "Thm8c-iv")
    rep.invariant("sb order", None, order(x))
    rep.invariant("quadric isotropic", None, X.isotropic)
    rep.invariant("quadric discriminant", None, X.discriminant.value)
    rep.invariant("sb kernel", None, str(sb_brauer_kernel(V)))
    rep.invariant("quadric kernel", None, str(brauer_kernel_quadric(X)))
    return rep


def cmd_genus1_orbit(args) -> ClassificationReport:
    t = CyclicTorsorModel(args.m, args.a)
    rep = ClassificationReport("genus1 orbit", {"m": str(args.m), "a": str(args.a)})
    orbit = isogeny_orbit(t)
    n = period(t)
    if len(orbit) != n_c(n):
        raise ImplementationBugError("Cor20: orbit size differs from N_C")
    rep.verdict("period", n, "period")
    rep.verdict("orbit", orbit, "Prop19")
    rep.verdict("N_C", n_c(n), "Cor20")
    rep.verdict("isolated", n_c(n) == 1, "Cor20")
    return rep


def cmd_genus1_gate(args) -> ClassificationReport:
    if args.period < 1:
        raise DomainError("period must be positive")
    rep = ClassificationReport("genus1 gate", {
        "period": str(args.period), "non_cm": str(args.non_cm).lower(),
        "isolated_or_finite": str(args.isolated_or_finite).lower()})
    rep.verdict("applies", theorem10_gate(args.period, args.non_cm, args.isolated_or_finite),
                "Thm10")
    rep.verdict("period_in_list", args.period in GATE_PERIODS, "Thm10/Cor20")
    rep.invariant("N_C", None, n_c(args.period))
    return rep


# --- argument parsing -------------------------------------------------------

class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        print(f"{self.prog}: parse error: {message}", file=sys.stderr)
        raise SystemExit(EXIT_PARSE)


def build_parser() -> argparse.ArgumentParser:
    p = _Parser(prog="wittkernel", description=__doc__.splitlines()[0])
    p.add_argument("--json", action="store_true", help="emit the JSON report")
    sub = p.add_subparsers(dest="group", required=True, parser_class=_Parser)

    h = sub.add_parser("hilbert", help="Hilbert symbol (a, b)_v")
    h.add_argument("a", type=rational_token)
    h.add_argument("b", type=rational_token)
    h.add_argument("--place", type=place_token)
    h.set_defaults(func=cmd_hilbert)

    conic = sub.add_parser("conic", help="genus-zero curves").add_subparsers(
        dest="action", required=True, parser_class=_Parser)
    c = conic.add_parser("classify")
    c.add_argument("a", type=rational_token)
    c.add_argument("b", type=rational_token)
    c.set_defaults(func=cmd_conic_classify)
    c = conic.add_parser("compare")
    for name in ("a", "b", "a2", "b2"):
        c.add_argument(name, type=rational_token)
    c.set_defaults(func=cmd_conic_compare)

    quadric = sub.add_parser("quadric", help="quadric surfaces").add_subparsers(
        dest="action", required=True, parser_class=_Parser)
    q = quadric.add_parser("classify")
    q.add_argument("form", type=form_token)
    q.set_defaults(func=cmd_quadric_classify)
    q = quadric.add_parser("compare")
    q.add_argument("form", type=form_token)
    q.add_argument("form2", type=form_token)
    q.set_defaults(func=cmd_quadric_compare)
    q = quadric.add_parser("kernel")
    q.add_argument("form", type=form_token)
    q.add_argument("--ext", type=rational_token)
    q.set_defaults(func=cmd_quadric_kernel)

    sb = sub.add_parser("sb", help="Severi-Brauer varieties").add_subparsers(
        dest="action", required=True, parser_class=_Parser)
    s = sb.add_parser("compare")
    s.add_argument("cls", type=class_token)
    s.add_argument("cls2", type=class_token)
    s.add_argument("--dim", type=int_token, required=True)
    s.set_defaults(func=cmd_sb_compare)
    s = sb.add_parser("vs-quadric")
    s.add_argument("cls", type=class_token)
    s.add_argument("form", type=form_token)
    s.set_defaults(func=cmd_sb_vs_quadric)

    g1 = sub.add_parser("genus1", help="genus-one torsors").add_subparsers(
        dest="action", required=True, parser_class=_Parser)
    g = g1.add_parser("orbit")
    g.add_argument("m", type=int_token)
    g.add_argument("a", type=int_token)
    g.set_defaults(func=cmd_genus1_orbit)
    g = g1.add_parser("gate")
    g.add_argument("period", type=int_token)
    g.add_argument("--non-cm", dest="non_cm", type=bool_token, required=True)
    g.add_argument("--isolated-or-finite", dest="isolated_or_finite", type=bool_token,
                   required=True)
    g.set_defaults(func=cmd_genus1_gate)
    return p


def _protect_negatives(argv: list[str]) -> list[str]:
    # argparse only recognises plain negative integers as positionals; a
    # leading space keeps "-1,2,3" and "-1/2" from being read as options.
    out = []
    for tok in argv:
        if re.match(r"^-\d", tok) and not re.match(r"^-\d+$", tok):
            tok = " " + tok
        out.append(tok)
    return out


def run(argv=None, stdout=None, stderr=None) -> int:
    stdout = stdout or sys.stdout
    stderr = stderr or sys.stderr
    argv = list(sys.argv[1:] if argv is None else argv)
    want_json = "--json" in argv
    argv = [a for a in argv if a != "--json"]
    old_err = sys.stderr
    sys.stderr = stderr
    try:
        args = build_parser().parse_args(_protect_negatives(argv))
    except SystemExit as exc:
        return EXIT_PARSE if exc.code not in (0, None) else 0
    finally:
        sys.stderr = old_err
    try:
        rep = args.func(args)
    except ImplementationBugError as exc:
        print(f"wittkernel: internal consistency failure: {exc}", file=stderr)
        return EXIT_THEOREM
    except DomainError as exc:
        print(f"wittkernel: domain error: {exc}", file=stderr)
        return EXIT_DOMAIN
    stdout.write(rep.to_json() if want_json else rep.to_text())
    return 0


def main() -> None:
    raise SystemExit(run())


if __name__ == "__main__":
    main()
