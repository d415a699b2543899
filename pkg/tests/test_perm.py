from itertools import permutations

import pytest
from hypothesis import given
from hypothesis import strategies as st

from lame_census.perm import (
    canonical_sigma_inf,
    centralizer_generators,
    centralizer_order,
    compose,
    conjugate,
    conjugator_to_canonical,
    cycle_type,
    group_closure,
    identity,
    inverse,
    is_transitive,
)


def perms(max_d=9):
    return st.integers(1, max_d).flatmap(lambda d: st.permutations(list(range(d)))).map(tuple)


@pytest.mark.parametrize(
    "p, expected", [((0, 1, 2, 3), (1, 1, 1, 1)), ((1, 2, 0, 3), (3, 1)), ((1, 0, 3, 2), (2, 2))]
)
def test_cycle_type_examples(p, expected):
    assert cycle_type(p).parts == expected


def test_compose_and_inverse_examples():
    p = (2, 0, 1)
    assert compose(identity(3), p) == p
    assert compose((1, 2, 0), (1, 0, 2)) == (2, 1, 0)
    assert inverse((1, 2, 0)) == (2, 0, 1)


def test_compose_degree_mismatch():
    with pytest.raises(ValueError, match="degree mismatch"):
        compose((0, 1), (0, 1, 2))


@given(perms())
def test_inverse_property(p):
    assert compose(p, inverse(p)) == identity(len(p))
    assert compose(inverse(p), p) == identity(len(p))


@given(perms(), st.data())
def test_conjugate_matches_definition(p, data):
    h = tuple(data.draw(st.permutations(list(range(len(p))))))
    assert conjugate(h, p) == compose(h, compose(p, inverse(h)))


@pytest.mark.parametrize(
    "gens, d, expected",
    [([identity(2)], 2, False), ([(1, 0, 3, 2), (0, 2, 1, 3)], 4, True), ([(1, 0, 2)], 3, False)],
)
def test_is_transitive_examples(gens, d, expected):
    assert is_transitive(gens, d) is expected


@pytest.mark.parametrize(
    "t, expected",
    [((3,), (1, 2, 0)), ((2, 2), (1, 0, 3, 2)), ((4, 2), (1, 2, 3, 0, 5, 4))],
)
def test_canonical_sigma_inf_examples(t, expected):
    assert canonical_sigma_inf(t) == expected


@pytest.mark.parametrize(
    "t, ngens, order",
    [((3,), 1, 3), ((2, 2), 3, 8), ((4, 4, 4), None, 384), ((3, 1), 1, 3), ((1, 1, 1), 2, 6)],
)
def test_centralizer_examples(t, ngens, order):
    p = canonical_sigma_inf(t)
    gens = centralizer_generators(p)
    if ngens is not None:
        assert len(gens) == ngens
    assert centralizer_order(t) == order
    assert len(group_closure(gens, len(p))) == order


@pytest.mark.parametrize("t", [(3, 2, 1), (2, 2, 1, 1), (3, 3), (4, 1, 1)])
def test_centralizer_is_exactly_the_commutant(t):
    p = canonical_sigma_inf(t)
    d = len(p)
    brute = {h for h in permutations(range(d)) if compose(h, p) == compose(p, h)}
    assert group_closure(centralizer_generators(p), d) == brute


def test_centralizer_rejects_noncanonical():
    with pytest.raises(ValueError, match="canonical"):
        centralizer_generators((2, 0, 1))


@given(perms())
def test_conjugator_to_canonical(p):
    h = conjugator_to_canonical(p)
    assert conjugate(h, p) == canonical_sigma_inf(cycle_type(p))
