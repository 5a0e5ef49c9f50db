import random
from itertools import combinations_with_replacement

import pytest
from hypothesis import given
from hypothesis import strategies as st

from conftest import forms, nonzero_rationals
from wittkernel.conic import BOTH_RATIONAL, ISOMORPHIC, NOT_ISOGENOUS, ORDER2, TRIVIAL, ramification_set
from wittkernel.errors import UnsupportedRankError
from wittkernel.oracles import similar_by_scalar_search
from wittkernel.qform import QuadraticForm, is_isotropic, scale, witt_ramification
from wittkernel.quadric import (
    QuadricSurface, brauer_kernel_quadric, extension_label, fields_isogenous,
    index_of_quadric, is_isotropic_over_quadratic, kernel_over_quadratic,
    kernels_equal, quadrics_isomorphic, theorem8b_decide,
)
from wittkernel import quadric
from wittkernel.rational import INF, Place, SquareClass, square_class

Q = QuadraticForm
POPULATION = [Q(c) for c in combinations_with_replacement([-5, -3, -2, -1, 1, 2, 3, 5], 4)]


def S(*coeffs):
    return QuadricSurface(Q(coeffs))


@pytest.mark.parametrize("a, b, expected", [
    ((1, 1, 1, 1), (2, 2, 2, 2), True),
    ((1, -1, 1, -1), (1, 1, -1, -1), True),
    ((1, 1, 1, 1), (1, 1, 1, 2), False),
])
def test_isomorphism_examples(a, b, expected):
    assert quadrics_isomorphic(S(*a), S(*b)) is expected


@pytest.mark.parametrize("a, b, verdict", [
    ((1, 1, -1, -1), (1, 2, -1, -2), BOTH_RATIONAL),
    ((1, 1, 1, 1), (1, 1, -1, -1), NOT_ISOGENOUS),
    ((1, 1, 1, 1), (1, 1, 1, 2), NOT_ISOGENOUS),
    ((1, 1, 1, 1), (3, 3, 3, 3), ISOMORPHIC),
])
def test_isogeny_examples(a, b, verdict):
    assert fields_isogenous(S(*a), S(*b)) == verdict


def test_brauer_kernel_examples():
    assert brauer_kernel_quadric(S(1, 1, -1, -1)).kind == TRIVIAL
    assert brauer_kernel_quadric(S(1, 1, 1, 2)).kind == TRIVIAL
    k = brauer_kernel_quadric(S(1, 1, 1, 1))
    assert k.kind == ORDER2
    assert set(k.ramification) == {Place(2), INF}
    assert ramification_set(k.witness) == {Place(2), INF}


def test_kernel_over_quadratic_examples():
    k = kernel_over_quadratic(S(1, 1, 1, 2), 2)
    assert k.kernel.kind == ORDER2
    assert k.witness_places == witt_ramification(Q((1, 1, 1, 2)))
    assert kernel_over_quadratic(S(1, 1, 1, 2), 3).is_trivial
    assert kernel_over_quadratic(S(1, 1, 1, 1), -1).is_trivial
    assert not is_isotropic_over_quadratic(S(1, 1, 1, 2), 2)
    assert is_isotropic_over_quadratic(S(1, 1, 1, 1), -1)


def test_decide_scaled_pair():
    rep = theorem8b_decide(S(1, 1, 1, 1), S(2, 2, 2, 2)).to_dict()
    assert rep["verdicts"]["isomorphic"] is True
    assert rep["verdicts"]["kernels_equal"] is True
    assert rep["verdicts"]["separating_invariants"] == []


def test_decide_hamilton_against_discriminant_two():
    # over Q: Order2 against Trivial; over Q(sqrt 2) both kernels are Hamilton
    rep = theorem8b_decide(S(1, 1, 1, 1), S(1, 1, 1, 2)).to_dict()
    v = rep["verdicts"]
    assert v["isomorphic"] is False
    assert v["isogenous"] == NOT_ISOGENOUS
    assert v["separating_invariants"] == ["kernel over Q"]
    assert v["tested_extensions"] == ["Q", "Q(sqrt(2))"]
    k1 = kernel_over_quadratic(S(1, 1, 1, 1), 2)
    k2 = kernel_over_quadratic(S(1, 1, 1, 2), 2)
    assert kernels_equal(k1, k2)


def test_decide_rational_pair():
    rep = theorem8b_decide(S(1, 1, -1, -1), S(1, 3, -1, -3)).to_dict()
    v = rep["verdicts"]
    assert v["isogenous"] == BOTH_RATIONAL
    assert v["kernels_equal"] is True
    for row in rep["invariants"]:
        if row["name"].startswith("kernel over"):
            assert row["value"] == "Trivial | Trivial"


@pytest.mark.parametrize("coeffs, idx", [((1, 1, -1), 1), ((1, 1, 1), 2), ((1, 1, 1, 1), 2),
                                         ((1, 1, -1, -1), 1)])
def test_index_examples(coeffs, idx):
    assert index_of_quadric(Q(coeffs)) == idx


def test_index_rank_limit():
    with pytest.raises(UnsupportedRankError):
        index_of_quadric(Q((1, 1)))


def test_surface_needs_rank_four():
    with pytest.raises(UnsupportedRankError):
        QuadricSurface(Q((1, 1, 1)))


def test_extension_labels_and_tested_set():
    assert extension_label(SquareClass()) == "Q"
    assert extension_label(square_class(-3)) == "Q(sqrt(-3))"
    exts = quadric.tested_extensions(S(1, 1, 1, 2), S(1, 1, 1, 3), extra=[8])
    assert [e.value for e in exts] == [1, 2, 3]


# --- population properties ------------------------------------------------

def test_population_size():
    assert len(POPULATION) == 330


def test_kernel_dichotomy_on_population():
    for q in POPULATION:
        k = brauer_kernel_quadric(q)
        nontrivial = not is_isotropic(q) and q.discriminant.is_trivial()
        assert (k.kind == ORDER2) == nontrivial
        if nontrivial:
            assert k.ramification


def test_anisotropy_survives_discriminant_extension():
    for q in POPULATION:
        d = q.discriminant
        if not is_isotropic(q) and not d.is_trivial():
            assert kernel_over_quadratic(q, d).kernel.kind == ORDER2


def test_isogeny_matches_similarity_on_population():
    rng = random.Random(11)
    pairs = [(rng.choice(POPULATION), rng.choice(POPULATION)) for _ in range(3000)]
    for q, q2 in pairs:
        verdict = fields_isogenous(q, q2)
        sim = quadrics_isomorphic(q, q2)
        if verdict == ISOMORPHIC:
            assert sim
        if not is_isotropic(q) and not is_isotropic(q2):
            assert (verdict == ISOMORPHIC) == sim
        if q.discriminant == q2.discriminant:
            assert sim == similar_by_scalar_search(q, q2)


def test_kernels_are_isogeny_invariants():
    rng = random.Random(12)
    for _ in range(400):
        q = rng.choice(POPULATION)
        c = rng.choice([-30, -7, -6, -1, 2, 3, 5, 10, 21])
        cq = scale(c, q)
        for e in quadric.tested_extensions(q, cq):
            assert kernels_equal(kernel_over_quadratic(q, e), kernel_over_quadratic(cq, e))


def test_non_isogenous_pairs_have_distinct_triples():
    def triple(q):
        d = q.discriminant
        return is_isotropic(q), d, kernel_over_quadratic(q, d).witness_places
    rng = random.Random(13)
    for _ in range(2000):
        q, q2 = rng.choice(POPULATION), rng.choice(POPULATION)
        if fields_isogenous(q, q2) == NOT_ISOGENOUS:
            t1, t2 = triple(q), triple(q2)
            if t1[:2] == t2[:2] and not t1[0]:
                # same discriminant, both anisotropic: the Witt classes differ over Q(sqrt d)
                k1, k2 = kernel_over_quadratic(q, t1[1]), kernel_over_quadratic(q2, t2[1])
                assert not kernels_equal(k1, k2)
            else:
                assert t1[:2] != t2[:2]


def test_auxiliary_extensions_never_separate_beyond_the_tested_set():
    rng = random.Random(14)
    aux = [-1, 2, -2, 3, -3, 5, -5, 6, 7, -7, 10, -15, 30, 11, -13, 17]
    for _ in range(1500):
        q, q2 = rng.choice(POPULATION), rng.choice(POPULATION)
        base = quadric.tested_extensions(q, q2)
        sep_base = any(not kernels_equal(kernel_over_quadratic(q, e), kernel_over_quadratic(q2, e))
                       for e in base)
        e = square_class(rng.choice(aux))
        sep_aux = not kernels_equal(kernel_over_quadratic(q, e), kernel_over_quadratic(q2, e))
        if sep_aux:
            assert sep_base
        iso = fields_isogenous(q, q2) != NOT_ISOGENOUS
        assert iso == (not sep_base)


@given(forms(rank=4, bound=12), nonzero_rationals(20), st.sampled_from([1, -1, 2, -3, 5, 6]))
def test_scaling_invariance(q, c, e):
    cq = scale(c, q)
    partner = Q((1, 1, 1, 1))
    assert is_isotropic(cq) == is_isotropic(q)
    assert brauer_kernel_quadric(cq) == brauer_kernel_quadric(q)
    k1, k2 = kernel_over_quadratic(q, e), kernel_over_quadratic(cq, e)
    assert k1.is_trivial == k2.is_trivial and kernels_equal(k1, k2)
    assert quadrics_isomorphic(q, cq)
    assert quadrics_isomorphic(cq, partner) == quadrics_isomorphic(q, partner)
    assert fields_isogenous(cq, partner) == fields_isogenous(q, partner)
    assert index_of_quadric(cq) == index_of_quadric(q)


@given(forms(rank=4, bound=20), st.integers(-40, 40).filter(bool))
def test_isotropy_over_extension_agrees_with_splitting(q, e):
    # consistency checks inside kernel_over_quadratic raise on disagreement
    k = kernel_over_quadratic(q, e)
    if k.kernel.kind == ORDER2:
        assert not is_isotropic_over_quadratic(q, e)


@given(forms(rank=4, bound=15), forms(rank=4, bound=15))
def test_decide_never_trips_its_consistency_checks(q, q2):
    rep = theorem8b_decide(q, q2)
    assert rep.to_dict()["verdicts"]["isomorphic"] == quadrics_isomorphic(q, q2)
