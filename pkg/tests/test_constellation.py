import json
import random

import pytest

from lame_census.census import dessin_count
from lame_census.constellation import (
    Constellation,
    canonicalize,
    count_dessins,
    dump_ndjson,
    enumerate_representatives,
    per_case_counts,
    total_dessins_bruteforce,
)
from lame_census.errors import EnumerationBoundError, InvariantError
from lame_census.kernel import BACKENDS
from lame_census.perm import conjugate, cycle_type
from lame_census.ramification import build_profile, profiles_for

from oracles import dessins_naive

SMALL = [(n, N) for n in range(1, 7) for N in range(1, 7) if n * N <= 6]


@pytest.mark.parametrize("case, n, N, expected", [("Id", 1, 3, 1), ("Ic", 1, 4, 1), ("II", 1, 4, 0)])
def test_count_examples(case, n, N, expected):
    assert count_dessins(build_profile(case, n, N)) == expected


@pytest.mark.parametrize("n, N", SMALL)
def test_count_matches_naive_oracle(n, N):
    for p in profiles_for(n, N):
        expected = dessins_naive(*(ct.parts for ct in p.types()))
        assert count_dessins(p) == expected


def test_representative_id_1_3():
    (rep,) = enumerate_representatives(build_profile("Id", 1, 3))
    assert rep.g1 == (0, 1, 2)
    assert rep.gInf == (1, 2, 0)
    rep.check()


def test_type_ii_is_empty():
    assert enumerate_representatives(build_profile("II", 1, 4)) == []


@pytest.mark.parametrize("n, N, expected", [(1, 3, 1), (2, 4, 3), (1, 2, 0), (1, 9, 10)])
def test_total_examples(n, N, expected):
    assert total_dessins_bruteforce(n, N) == expected == dessin_count(n, N)


@pytest.mark.parametrize("n, N", [(1, 8), (2, 5), (3, 3), (1, 10)])
def test_representatives_are_valid(n, N):
    for p in profiles_for(n, N):
        reps = enumerate_representatives(p)
        assert len(reps) == count_dessins(p)
        assert [r.g0 for r in reps] == sorted(r.g0 for r in reps)
        for r in reps:
            r.check()
            assert r.cycle_types() == p.types()
            assert canonicalize(r) == r


@pytest.mark.parametrize("n, N", [(1, 7), (2, 4), (1, 9)])
def test_conjugation_invariance(n, N):
    rng = random.Random(n * 100 + N)
    for p in profiles_for(n, N):
        reps = enumerate_representatives(p)
        for r in reps:
            h = list(range(p.degree))
            rng.shuffle(h)
            moved = Constellation(conjugate(h, r.g0), conjugate(h, r.g1), conjugate(h, r.gInf), r.case)
            moved.check()
            assert canonicalize(moved) == r


@pytest.mark.parametrize("n, N", [(1, 6), (1, 7), (2, 4), (3, 3), (2, 5)])
def test_convention_and_fiber_independence(n, N):
    for p in profiles_for(n, N):
        counts = {
            count_dessins(p, convention=conv, fiber=fib)
            for conv in ("right", "left")
            for fib in ("0", "1", "auto")
        }
        assert len(counts) == 1


@pytest.mark.parametrize("backend", BACKENDS)
def test_determinism_across_workers_and_backends(backend):
    p = build_profile("Ic", 1, 8)
    serial = enumerate_representatives(p, backend=backend)
    assert enumerate_representatives(p, backend=backend) == serial
    assert enumerate_representatives(p, backend=backend, workers=3) == serial
    assert enumerate_representatives(p, backend=backend, fiber="0") == serial


def test_bound_refusal():
    p = build_profile("Ib", 3, 5)
    with pytest.raises(EnumerationBoundError, match="max_degree=12"):
        count_dessins(p)
    with pytest.raises(EnumerationBoundError):
        per_case_counts(3, 5)
    assert count_dessins(build_profile("Ic", 1, 4), max_degree=4) == 1


def test_check_catches_broken_triples():
    with pytest.raises(InvariantError, match="!= id"):
        Constellation((1, 0, 2), (0, 1, 2), (1, 2, 0)).check()
    with pytest.raises(InvariantError, match="transitive"):
        Constellation((1, 0, 2), (1, 0, 2), (0, 1, 2)).check()


def test_ndjson_format():
    p = build_profile("Ic", 1, 6)
    text = dump_ndjson(enumerate_representatives(p))
    lines = text.splitlines()
    assert len(lines) == 3 and text.endswith("\n")
    for line in lines:
        obj = json.loads(line)
        assert list(obj) == ["degree", "case", "g0", "g1", "gInf"]
        assert obj["degree"] == 6 and obj["case"] == "Ic"
        assert cycle_type(obj["gInf"]).parts == (6,)
