import random

import pytest
from hypothesis import given
from hypothesis import strategies as st

from conftest import nonzero_ints, nonzero_rationals, small_primes
from wittkernel.errors import DomainError
from wittkernel.hilbert import (
    from_additive, hilbert_oracle, hilbert_symbol, oracle_modulus, ramified_places,
    reciprocity_check, to_additive,
)
from wittkernel.rational import INF, Place, relevant_places

places_st = st.one_of(st.just(INF), small_primes.map(Place))


@pytest.mark.parametrize("a, b, v, expected", [
    (1, 5, INF, 1), (1, 5, Place(2), 1), (1, 5, Place(5), 1),
    (-1, -1, INF, -1),
    (-1, -1, Place(2), -1),
    (2, 5, Place(5), -1),
    (1, 1, Place(3), 1),
    (-1, 3, Place(3), -1),
    (-1, 3, INF, 1),
])
def test_symbol_examples(a, b, v, expected):
    assert hilbert_symbol(a, b, v) == expected
    assert hilbert_oracle(a, b, v) == expected


def test_two_five_matches_legendre():
    # (2/5) = -1: 2 is not among the squares {1, 4} mod 5
    assert 2 not in {x * x % 5 for x in range(1, 5)}


def test_minus_one_three_has_no_primitive_zero_mod_27():
    m = 27
    found = any((-x * x + 3 * y * y - z * z) % m == 0
                for x in range(m) for y in range(m) for z in range(m)
                if x % 3 or y % 3 or z % 3)
    assert not found


@pytest.mark.parametrize("a, b, ramified", [
    (-1, -1, ["2", "inf"]), (1, 7, []), (-1, 3, ["2", "3"]),
])
def test_reciprocity_examples(a, b, ramified):
    assert reciprocity_check(a, b) is True
    assert [str(v) for v in ramified_places(a, b)] == ramified


def test_oracle_moduli():
    assert oracle_modulus(2) == 256
    assert oracle_modulus(7) == 343


def test_zero_arguments_rejected():
    with pytest.raises(DomainError):
        hilbert_symbol(0, 3, INF)
    with pytest.raises(DomainError):
        hilbert_oracle(3, 0, Place(3))


def test_additive_convention_round_trip():
    assert to_additive(1) == 0 and to_additive(-1) == 1
    assert from_additive(0) == 1 and from_additive(1) == -1


@given(nonzero_rationals(), nonzero_rationals(), places_st)
def test_symmetry(a, b, v):
    assert hilbert_symbol(a, b, v) == hilbert_symbol(b, a, v)


@given(nonzero_rationals(), nonzero_rationals(), nonzero_rationals(), places_st)
def test_square_invariance(a, b, t, v):
    assert hilbert_symbol(a * t * t, b, v) == hilbert_symbol(a, b, v)


@given(nonzero_rationals(), nonzero_rationals(), nonzero_rationals(), places_st)
def test_bimultiplicativity(a1, a2, b, v):
    assert hilbert_symbol(a1 * a2, b, v) == hilbert_symbol(a1, b, v) * hilbert_symbol(a2, b, v)


@given(nonzero_rationals(), places_st)
def test_a_minus_a_is_trivial(a, v):
    assert hilbert_symbol(a, -a, v) == 1


@given(nonzero_ints, nonzero_ints, places_st)
def test_formula_matches_oracle(a, b, v):
    assert hilbert_symbol(a, b, v) == hilbert_oracle(a, b, v)


@given(nonzero_rationals(10**4), nonzero_rationals(10**4))
def test_reciprocity_property(a, b):
    assert reciprocity_check(a, b)


@given(st.integers(-30, 30).filter(bool), st.integers(-30, 30).filter(bool))
def test_oracle_obeys_reciprocity(a, b):
    total = 1
    for v in relevant_places(a, b):
        total *= hilbert_oracle(a, b, v)
    assert total == 1


def test_symbol_is_trivial_outside_relevant_places():
    rng = random.Random(5)
    for _ in range(200):
        a, b = rng.choice([-1, 1]) * rng.randint(1, 60), rng.choice([-1, 1]) * rng.randint(1, 60)
        rel = set(relevant_places(a, b))
        for p in (3, 5, 7, 11, 13, 17, 19, 23, 29, 31):
            if Place(p) not in rel:
                assert hilbert_symbol(a, b, Place(p)) == 1
