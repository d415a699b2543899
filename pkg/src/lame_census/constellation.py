"""Brute-force count of dessins d'enfants with prescribed ramification.

A dessin of degree ``d`` is a triple ``(g0, g1, ginf)`` of permutations with
``g0 o g1 o ginf = id`` generating a transitive group, taken up to
simultaneous conjugation in S_d.  To count them we fix ``ginf`` in canonical
block form, enumerate one of ``g0``/``g1`` over its conjugacy class (the
other is then determined), keep the triples with the right cycle types that
are transitive, and split the survivors into orbits under the centralizer
of ``ginf``.  Each orbit is one dessin.
"""

from __future__ import annotations

import json
from collections.abc import Iterable
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from math import factorial

from .errors import EnumerationBoundError, InvariantError
from .kernel import chunk_keys, get_scan
from .perm import (
    Perm,
    canonical_sigma_inf,
    centralizer_generators,
    centralizer_order,
    check_perm,
    compose,
    conjugate,
    conjugator_to_canonical,
    cycle_type,
    identity,
    inverse,
    is_transitive,
)
from .ramification import CycleType, RamificationProfile, profiles_for

DEFAULT_MAX_DEGREE = 12
CONVENTIONS = ("right", "left")


@dataclass(frozen=True)
class Constellation:
    g0: Perm
    g1: Perm
    gInf: Perm
    case: str = ""

    @property
    def degree(self) -> int:
        return len(self.gInf)

    def check(self) -> None:
        """Raise :class:`InvariantError` unless the triple is a valid transitive constellation."""
        d = self.degree
        for name in ("g0", "g1", "gInf"):
            p = getattr(self, name)
            if len(p) != d:
                raise InvariantError(f"{name} has degree {len(p)}, expected {d}")
            check_perm(p)
        if compose(self.g0, compose(self.g1, self.gInf)) != identity(d):
            raise InvariantError(f"g0 g1 gInf != id for {self}")
        if not is_transitive([self.g0, self.g1], d):
            raise InvariantError(f"<g0, g1> is not transitive for {self}")

    def cycle_types(self) -> tuple[CycleType, CycleType, CycleType]:
        return cycle_type(self.g0), cycle_type(self.g1), cycle_type(self.gInf)

    def to_json(self) -> dict:
        return {
            "degree": self.degree,
            "case": self.case,
            "g0": list(self.g0),
            "g1": list(self.g1),
            "gInf": list(self.gInf),
        }


def _class_size(t: CycleType) -> int:
    return factorial(t.degree) // centralizer_order(t)


def _plan(profile: RamificationProfile, convention: str, fiber: str):
    """Decide which of g0/g1 to enumerate and how the other one is recovered.

    Returns ``(role, pre)``: ``role`` is ``"g0"`` or ``"g1"``, and the
    complementary permutation is the inverse of ``c o ginf`` when ``pre`` is
    true, of ``ginf o c`` otherwise.
    """
    if convention not in CONVENTIONS:
        raise ValueError(f"unknown convention {convention!r}")
    if fiber == "auto":
        small0 = _class_size(profile.type_over_0) <= _class_size(profile.type_over_1)
        role = "g0" if small0 else "g1"
    elif fiber in ("0", "g0"):
        role = "g0"
    elif fiber in ("1", "g1"):
        role = "g1"
    else:
        raise ValueError(f"unknown fiber {fiber!r}")
    # right: g0 g1 ginf = id  => g1^-1 = ginf g0,  g0^-1 = g1 ginf
    # left:  ginf g1 g0 = id  => g1^-1 = g0 ginf,  g0^-1 = ginf g1
    pre = (role == "g1") == (convention == "right")
    return role, pre


def _scan_chunk(args):
    backend, parts, ginf, target, pre, chunk = args
    return get_scan(backend)(parts, ginf, target, pre, chunk)


def _check_bound(profile: RamificationProfile, max_degree: int) -> None:
    if profile.degree > max_degree:
        raise EnumerationBoundError(profile.degree, max_degree)


def _survivors(profile, *, max_degree, workers, backend, convention, fiber):
    _check_bound(profile, max_degree)
    role, pre = _plan(profile, convention, fiber)
    ginf = canonical_sigma_inf(profile.type_over_inf)
    if role == "g0":
        cand_type, other_type = profile.type_over_0, profile.type_over_1
    else:
        cand_type, other_type = profile.type_over_1, profile.type_over_0
    parts, target = cand_type.parts, other_type.parts

    if workers <= 1:
        found = get_scan(backend)(parts, ginf, target, pre)
    else:
        tasks = [(backend, parts, ginf, target, pre, key)
                 for key in chunk_keys(parts, len(ginf))]
        found = []
        with ProcessPoolExecutor(max_workers=workers) as pool:
            for chunk in pool.map(_scan_chunk, tasks):
                found.extend(chunk)
    return role, pre, ginf, sorted(set(found))


def _orbits(survivors: list[Perm], ginf: Perm) -> list[list[Perm]]:
    """Partition ``survivors`` into orbits of the centralizer of ``ginf`` (acting by conjugation)."""
    gens = centralizer_generators(ginf)
    pool = set(survivors)
    seen: set[Perm] = set()
    orbits = []
    for s in survivors:
        if s in seen:
            continue
        seen.add(s)
        orbit = [s]
        frontier = [s]
        while frontier:
            nxt = []
            for c in frontier:
                for h in gens:
                    c2 = conjugate(h, c)
                    if c2 in seen:
                        continue
                    if c2 not in pool:
                        raise InvariantError(f"survivor set not closed under conjugation: {c2}")
                    seen.add(c2)
                    orbit.append(c2)
                    nxt.append(c2)
            frontier = nxt
        orbits.append(orbit)
    return orbits


def _triple(c: Perm, role: str, pre: bool, ginf: Perm) -> tuple[Perm, Perm]:
    w = compose(c, ginf) if pre else compose(ginf, c)
    other = inverse(w)
    return (c, other) if role == "g0" else (other, c)


def count_dessins(
    profile: RamificationProfile,
    *,
    max_degree: int = DEFAULT_MAX_DEGREE,
    workers: int = 1,
    backend: str | None = None,
    convention: str = "right",
    fiber: str = "auto",
) -> int:
    """Number of dessins with ramification ``profile``, up to conjugation.

    ``convention="left"`` counts with the product condition read left to
    right (``ginf o g1 o g0 = id``); the answer does not depend on it.
    ``fiber`` picks the enumerated class: ``"0"``, ``"1"`` or ``"auto"``
    (the smaller one).  Raises :class:`EnumerationBoundError` when the degree
    exceeds ``max_degree``.
    """
    _, _, ginf, survivors = _survivors(
        profile, max_degree=max_degree, workers=workers, backend=backend,
        convention=convention, fiber=fiber,
    )
    return len(_orbits(survivors, ginf))


def enumerate_representatives(
    profile: RamificationProfile,
    *,
    max_degree: int = DEFAULT_MAX_DEGREE,
    workers: int = 1,
    backend: str | None = None,
    fiber: str = "auto",
) -> list[Constellation]:
    """One constellation per dessin, sorted by ``g0``.

    The representative of a class is its lexicographically least triple
    with ``gInf`` in canonical block form.
    """
    role, pre, ginf, survivors = _survivors(
        profile, max_degree=max_degree, workers=workers, backend=backend,
        convention="right", fiber=fiber,
    )
    reps = []
    for orbit in _orbits(survivors, ginf):
        g0, g1 = min(_triple(c, role, pre, ginf) for c in orbit)
        rep = Constellation(g0, g1, ginf, profile.case_label)
        rep.check()
        reps.append(rep)
    reps.sort(key=lambda r: r.g0)
    return reps


def canonicalize(con: Constellation) -> Constellation:
    """The representative of ``con``'s class: conjugate ``gInf`` to block form, then minimize."""
    h = conjugator_to_canonical(con.gInf)
    g0 = conjugate(h, con.g0)
    g1 = conjugate(h, con.g1)
    ginf = conjugate(h, con.gInf)
    gens = centralizer_generators(ginf)
    best = (g0, g1)
    seen = {g0}
    frontier = [(g0, g1)]
    while frontier:
        nxt = []
        for a, b in frontier:
            for k in gens:
                a2 = conjugate(k, a)
                if a2 in seen:
                    continue
                seen.add(a2)
                pair = (a2, conjugate(k, b))
                best = min(best, pair)
                nxt.append(pair)
        frontier = nxt
    return Constellation(best[0], best[1], ginf, con.case)


def per_case_counts(
    n: int,
    N: int,
    *,
    max_degree: int = DEFAULT_MAX_DEGREE,
    workers: int = 1,
    backend: str | None = None,
) -> dict[str, int]:
    """Brute-force dessin count of every valid case at ``(n, N)``, keyed by case label."""
    if n * N > max_degree:
        raise EnumerationBoundError(n * N, max_degree)
    return {
        p.case_label: count_dessins(p, max_degree=max_degree, workers=workers, backend=backend)
        for p in profiles_for(n, N)
    }


def total_dessins_bruteforce(n: int, N: int, **kwargs) -> int:
    """Sum of :func:`count_dessins` over every case valid at ``(n, N)``."""
    return sum(per_case_counts(n, N, **kwargs).values())


def dump_ndjson(reps: Iterable[Constellation]) -> str:
    """Newline-delimited JSON, one constellation per line, sorted by ``(case, g0)``."""
    ordered = sorted(reps, key=lambda r: (r.case, r.g0))
    return "".join(json.dumps(r.to_json(), separators=(", ", ": ")) + "\n" for r in ordered)
