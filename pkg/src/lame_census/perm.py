"""Permutations of ``{0, ..., d-1}`` as tuples of images.

Composition follows one convention everywhere: ``compose(p, q)`` is
``x -> p[q[x]]``, i.e. the right factor acts first.
"""

from __future__ import annotations

from collections.abc import Iterable, Sequence
from math import factorial

from .ramification import CycleType

Perm = tuple[int, ...]


def check_perm(p: Sequence[int]) -> Perm:
    p = tuple(p)
    if sorted(p) != list(range(len(p))):
        raise ValueError(f"not a permutation: {p}")
    return p


def identity(d: int) -> Perm:
    return tuple(range(d))


def compose(p: Sequence[int], q: Sequence[int]) -> Perm:
    """``x -> p[q[x]]``."""
    if len(p) != len(q):
        raise ValueError(f"degree mismatch: {len(p)} != {len(q)}")
    return tuple(p[x] for x in q)


def inverse(p: Sequence[int]) -> Perm:
    inv = [0] * len(p)
    for x, y in enumerate(p):
        inv[y] = x
    return tuple(inv)


def conjugate(h: Sequence[int], p: Sequence[int]) -> Perm:
    """``h p h^-1``."""
    out = [0] * len(p)
    for x, y in enumerate(p):
        out[h[x]] = h[y]
    return tuple(out)


def cycles(p: Sequence[int]) -> list[list[int]]:
    """Cycles of ``p`` (fixed points included), each starting at its smallest point."""
    seen = [False] * len(p)
    out = []
    for start in range(len(p)):
        if seen[start]:
            continue
        cyc = []
        x = start
        while not seen[x]:
            seen[x] = True
            cyc.append(x)
            x = p[x]
        out.append(cyc)
    return out


def cycle_type(p: Sequence[int]) -> CycleType:
    return CycleType(tuple(len(c) for c in cycles(p)))


def is_transitive(gens: Iterable[Sequence[int]], d: int) -> bool:
    """True iff the group generated by ``gens`` acts transitively on ``range(d)``."""
    gens = list(gens)
    if d <= 1:
        return True
    seen = {0}
    stack = [0]
    while stack:
        x = stack.pop()
        for g in gens:
            y = g[x]
            if y not in seen:
                seen.add(y)
                stack.append(y)
    return len(seen) == d


def canonical_sigma_inf(t: CycleType | Sequence[int]) -> Perm:
    """Block-form permutation of cycle type ``t``.

    Cycles occupy consecutive blocks in descending length order, and each
    block is the shift ``i -> i + 1`` wrapping at the block end.
    """
    parts = t.parts if isinstance(t, CycleType) else CycleType(tuple(t)).parts
    images = []
    start = 0
    for length in parts:
        images.extend(start + (k + 1) % length for k in range(length))
        start += length
    return tuple(images)


def _blocks(p: Sequence[int]) -> list[tuple[int, int]]:
    ct = cycle_type(p)
    if tuple(p) != canonical_sigma_inf(ct):
        raise ValueError(f"permutation is not in canonical block form: {tuple(p)}")
    blocks = []
    start = 0
    for length in ct.parts:
        blocks.append((start, length))
        start += length
    return blocks


def centralizer_generators(p: Sequence[int]) -> list[Perm]:
    """Generators of the centralizer of a canonical block-form permutation in S_d.

    One rotation per block, and one swap per adjacent pair of equal-length
    blocks.  Fixed points give trivial rotations, which are omitted.
    """
    d = len(p)
    blocks = _blocks(p)
    gens = []
    for start, length in blocks:
        if length == 1:
            continue
        g = list(range(d))
        for k in range(length):
            g[start + k] = start + (k + 1) % length
        gens.append(tuple(g))
    for (s1, l1), (s2, l2) in zip(blocks, blocks[1:]):
        if l1 != l2:
            continue
        g = list(range(d))
        for k in range(l1):
            g[s1 + k] = s2 + k
            g[s2 + k] = s1 + k
        gens.append(tuple(g))
    return gens


def centralizer_order(t: CycleType | Sequence[int]) -> int:
    """``prod(l**m * m!)`` over the distinct part lengths ``l`` with multiplicity ``m``."""
    parts = t.parts if isinstance(t, CycleType) else tuple(t)
    order = 1
    for length in set(parts):
        m = parts.count(length)
        order *= length**m * factorial(m)
    return order


def group_closure(gens: Sequence[Sequence[int]], d: int) -> set[Perm]:
    """All elements of the group generated by ``gens``. Only for small groups."""
    e = identity(d)
    elements = {e}
    frontier = [e]
    gens = [tuple(g) for g in gens]
    while frontier:
        nxt = []
        for x in frontier:
            for g in gens:
                y = compose(g, x)
                if y not in elements:
                    elements.add(y)
                    nxt.append(y)
        frontier = nxt
    return elements


def conjugator_to_canonical(p: Sequence[int]) -> Perm:
    """A permutation ``h`` with ``conjugate(h, p) == canonical_sigma_inf(cycle_type(p))``."""
    cyc = sorted(cycles(p), key=len, reverse=True)
    h = [0] * len(p)
    pos = 0
    for c in cyc:
        for x in c:
            h[x] = pos
            pos += 1
    return tuple(h)
