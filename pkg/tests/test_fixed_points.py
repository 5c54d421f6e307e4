from collections import Counter
from itertools import combinations
from math import comb

import pytest

from quotdeg.fixed_points import (
    FixedComponent,
    WeightVector,
    chow_rank,
    enumerate_components,
    euler_characteristic,
    hilbert_polynomial,
)


def test_d3_has_24_components_in_two_types():
    comps = enumerate_components(3)
    assert len(comps) == 24
    assert Counter((c.b, c.a) for c in comps) == {(3, 0): 12, (2, 1): 12}


def test_d0_components_are_points():
    comps = enumerate_components(0)
    assert len(comps) == 6
    assert all((c.b, c.a) == (0, 0) and c.locus == "point" for c in comps)


def test_d4_type_counts():
    assert Counter((c.b, c.a) for c in enumerate_components(4)) == {(4, 0): 12, (3, 1): 12, (2, 2): 6}


def brute_force_components(d):
    """Every (trivial pair, degree at each torsion slot) assignment, merged up to the b<->a swap."""
    seen = set()
    for trivial in combinations(range(4), 2):
        p, q = [x for x in range(4) if x not in trivial]
        for s in range(d + 1):
            seen.add(frozenset({(p, s), (q, d - s)}))
    return seen


@pytest.mark.parametrize("d", range(0, 9))
def test_enumeration_matches_brute_force(d):
    comps = enumerate_components(d)
    as_sets = {frozenset({(c.pos_b, c.b), (c.pos_a, c.a)}) for c in comps}
    assert as_sets == brute_force_components(d)
    assert len(as_sets) == len(comps) == 6 * (d + 1)


def test_enumeration_is_sorted_and_canonical():
    comps = enumerate_components(5)
    assert comps == sorted(comps, key=lambda c: (c.b, c.pos_b, c.pos_a))
    for c in comps:
        assert c.b >= c.a >= 0 and c.d == 5
        assert {c.pos_b, c.pos_a}.isdisjoint(c.trivial)
        assert c.trivial[0] < c.trivial[1]


def test_euler_characteristic_examples():
    assert euler_characteristic(3) == 120
    assert euler_characteristic(0) == 6
    assert euler_characteristic(4) == 210


def test_chow_rank_examples():
    assert chow_rank(FixedComponent(b=2, pos_b=1, pos_a=0, a=1)) == 6
    assert chow_rank(FixedComponent(b=3, pos_b=0, pos_a=1, a=0)) == 4
    assert chow_rank(FixedComponent(b=0, pos_b=0, pos_a=1, a=0)) == 1


@pytest.mark.parametrize("d", range(0, 51))
def test_rank_sum_is_euler_characteristic(d):
    assert sum(chow_rank(c) for c in enumerate_components(d)) == euler_characteristic(d) == 6 * comb(d + 3, 3)


def test_pattern_and_locus():
    c = FixedComponent(b=2, pos_b=1, pos_a=0, a=1)
    assert c.pattern == ("a:1", "b:2", "t+1", "t+1")
    assert c.locus == "P^2 x P^1"
    assert c.trivial == (2, 3)
    assert c.caps == (2, 1)


@pytest.mark.parametrize(
    "kwargs",
    [
        dict(b=1, pos_b=0, pos_a=1, a=2),  # b < a
        dict(b=1, pos_b=1, pos_a=0, a=1),  # tie not canonical
        dict(b=1, pos_b=2, pos_a=2, a=0),
        dict(b=1, pos_b=0, pos_a=4, a=0),
    ],
)
def test_non_canonical_components_rejected(kwargs):
    with pytest.raises(ValueError):
        FixedComponent(**kwargs)


@pytest.mark.parametrize("w", [(0, 1, 2, 2), (3, 2, 1, 0), (0, 1, 2), (0, 1, 2, 3, 4), (0, 1.5, 2, 3)])
def test_weight_vector_validation(w):
    with pytest.raises(ValueError):
        WeightVector(w)


def test_weight_vector_accepts_negative():
    assert tuple(WeightVector([-3, 0, 2, 11])) == (-3, 0, 2, 11)


def test_hilbert_polynomial():
    assert hilbert_polynomial(3) == (2, 5)
    with pytest.raises(ValueError):
        hilbert_polynomial(-1)
