"""Exit criteria for the census engine.

Every quantity is an integer, so every comparison is exact.  Each test
prints one ``[PASS]``/``[FAIL]`` line; run with ``pytest -s`` to see them.
"""

import time

import pytest

from lame_census.arith import divisors, euler_phi, psi2
from lame_census.census import (
    dessin_count,
    epsilon_cor,
    epsilon_thm,
    lame_count,
    lame_count_via_inversion,
)
from lame_census.cli import main
from lame_census.constellation import count_dessins, total_dessins_bruteforce
from lame_census.kernel import BACKENDS
from lame_census.ramification import profiles_for

from oracles import phi_enum, psi2_enum

ORACLE_GRID = [(n, N) for n in range(1, 13) for N in range(3, 13) if n * N <= 12]


@pytest.fixture
def report():
    def emit(name, ok, detail=""):
        print(f"\n[{'PASS' if ok else 'FAIL'}] {name}{': ' + detail if detail else ''}")
        assert ok, detail

    return emit


@pytest.mark.parametrize("backend", BACKENDS)
def test_criterion_1_oracle_formula_equivalence(report, backend):
    assert ORACLE_GRID == [(1, N) for N in range(3, 13)] + [(2, N) for N in range(3, 7)] + [
        (3, 3), (3, 4), (4, 3)
    ]
    start = time.perf_counter()
    mismatches = []
    for n, N in ORACLE_GRID:
        brute = total_dessins_bruteforce(n, N, backend=backend)
        if brute != dessin_count(n, N):
            mismatches.append((n, N, brute, dessin_count(n, N)))
    elapsed = time.perf_counter() - start
    spot = {(1, 3): 1, (1, 4): 1, (1, 5): 2, (2, 3): 1, (2, 4): 3, (2, 5): 6, (2, 6): 10, (3, 4): 6, (4, 3): 4}
    spot_bad = [
        (k, v) for k, v in spot.items()
        if dessin_count(*k) != v or total_dessins_bruteforce(*k, backend=backend) != v
    ]
    ok = not mismatches and not spot_bad and elapsed < 300
    report(f"1 oracle == Theorem-1 count on nN <= 12 [{backend}]", ok,
           f"{len(ORACLE_GRID)} points in {elapsed:.1f}s, mismatches={mismatches}, spot={spot_bad}")


def test_criterion_2_type_ii_vanishing(report):
    expected = {(1, 4), (1, 6), (1, 8), (1, 10), (1, 12), (2, 4), (2, 6), (3, 4)}
    found = set()
    nonzero = []
    for n in range(1, 13):
        for N in range(1, 13):
            if n * N > 12:
                continue
            for p in profiles_for(n, N):
                if p.case_label == "II":
                    found.add((n, N))
                    if count_dessins(p) != 0:
                        nonzero.append((n, N))
    ok = found == expected and not nonzero
    report("2 no dessins of type II", ok, f"profiles={sorted(found)}, nonzero={nonzero}")


def test_criterion_3_divisor_sum_identity(report):
    start = time.perf_counter()
    bad = [
        (n, N)
        for n in range(-30, 31)
        for N in range(1, 201)
        if sum(lame_count(n, d) for d in divisors(N)) != dessin_count(n, N)
    ]
    elapsed = time.perf_counter() - start
    report("3 sum_{d|N} L(n,d) == D(n,N)", not bad and elapsed < 5, f"{elapsed:.2f}s, failures={bad[:5]}")


def test_criterion_4_closed_form_vs_inversion(report):
    bad = [
        (n, N)
        for n in range(-30, 31)
        for N in range(1, 201)
        if lame_count(n, N) != lame_count_via_inversion(n, N)
    ]
    named = {(1, 3): 1, (1, 4): 1, (1, 6): 3, (1, 9): 9, (2, 5): 6}
    named_bad = [k for k, v in named.items() if lame_count(*k) != v or lame_count_via_inversion(*k) != v]
    report("4 Corollary closed form == Moebius inversion", not bad and not named_bad,
           f"failures={bad[:5]}, named={named_bad}")


def test_criterion_5_totient_identities(report):
    start = time.perf_counter()
    sums_bad = []
    for N in range(1, 10**4 + 1):
        divs = divisors(N)
        if sum(euler_phi(d) for d in divs) != N or sum(psi2(d) for d in divs) != N * N:
            sums_bad.append(N)
    enum_bad = [N for N in range(1, 1001) if euler_phi(N) != phi_enum(N) or psi2(N) != psi2_enum(N)]
    elapsed = time.perf_counter() - start
    report("5 totient divisor sums and definitions", not sums_bad and not enum_bad and elapsed < 30,
           f"{elapsed:.1f}s, sums={sums_bad[:5]}, enum={enum_bad[:5]}")


def test_criterion_6_index_symmetry(report):
    bad = [
        (n, N)
        for n in range(-20, 21)
        for N in range(1, 51)
        if lame_count(n, N) != lame_count(-n - 1, N)
        or epsilon_thm(n, N) != epsilon_thm(-n - 1, N)
        or epsilon_cor(n, N) != epsilon_cor(-n - 1, N)
    ]
    report("6 n -> -n-1 symmetry", not bad, f"failures={bad[:5]}")


def test_criterion_7_vanishing_floor(report):
    counts_bad = [
        n for n in range(-50, 51)
        if any(f(n, N) for f in (lame_count, dessin_count) for N in (1, 2))
    ]
    profiles_bad = [(n, N) for n in range(1, 11) for N in (1, 2) if profiles_for(n, N)]
    report("7 vanishing for N <= 2", not counts_bad and not profiles_bad,
           f"counts={counts_bad}, profiles={profiles_bad}")


def _enumerate_bytes(tmp_path, n, N, case, workers, tag):
    path = tmp_path / f"{case}_{n}_{N}_{workers}_{tag}.ndjson"
    code = main(["enumerate", "--n", str(n), "--N", str(N), "--case", case,
                 "--out", str(path), "--workers", str(workers)])
    assert code == 0
    return path.read_bytes()


def test_criterion_8_determinism(report, tmp_path):
    details = []
    ok = True
    for n, N, case in [(1, 4, "Ic"), (2, 4, "Ia")]:
        runs = [_enumerate_bytes(tmp_path, n, N, case, 1, i) for i in range(3)]
        runs += [_enumerate_bytes(tmp_path, n, N, case, 4, "par")]
        same = all(r == runs[0] for r in runs)
        ok &= same
        details.append(f"{case}({n},{N}): {len(runs[0].splitlines())} lines, identical={same}")
    report("8 enumerate output is deterministic", ok, "; ".join(details))
