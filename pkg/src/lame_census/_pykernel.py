"""Pure-Python enumeration kernel.

Reference implementation of :func:`scan_class`; ``_ckernel.pyx`` is a
line-for-line compiled port and must return identical lists.
"""

from __future__ import annotations


def chunk_keys(parts, d):
    """Keys ``(length, image_of_0)`` partitioning the class of cycle type ``parts``.

    The key fixes the length of the cycle through 0 and the image of 0.
    """
    keys = []
    for length in sorted(set(parts), reverse=True):
        if length == 1:
            keys.append((1, 0))
        else:
            keys.extend((length, y) for y in range(1, d))
    return keys


def scan_class(parts, ginf, target, pre, chunk=None):
    """Permutations ``c`` of cycle type ``parts`` passing the constellation filter.

    ``w`` is ``c o ginf`` when ``pre`` is true and ``ginf o c`` otherwise.  A
    candidate survives when ``w`` has cycle type ``target`` and ``<c, ginf>``
    is transitive.  Candidates are generated in lexicographic order of their
    construction: the smallest unused point opens the next cycle, its length
    is chosen among the remaining parts (descending), then its points.  If
    ``chunk`` is given, only candidates with that key are visited.
    """
    d = len(ginf)
    remaining = [0] * (d + 1)
    for p in parts:
        remaining[p] += 1
    lengths = sorted(set(parts), reverse=True)
    tcounts = [0] * (d + 1)
    for t in target:
        tcounts[t] += 1
    c = [-1] * d
    used = [False] * d
    out = []

    def leaf():
        w = [c[ginf[x]] for x in range(d)] if pre else [ginf[c[x]] for x in range(d)]
        seen = [False] * d
        counts = [0] * (d + 1)
        for s in range(d):
            if seen[s]:
                continue
            length = 0
            x = s
            while not seen[x]:
                seen[x] = True
                x = w[x]
                length += 1
            counts[length] += 1
            if counts[length] > tcounts[length]:
                return
        seen = [False] * d
        seen[0] = True
        stack = [0]
        reached = 1
        while stack:
            x = stack.pop()
            for y in (c[x], ginf[x]):
                if not seen[y]:
                    seen[y] = True
                    reached += 1
                    stack.append(y)
        if reached == d:
            out.append(tuple(c))

    def open_cycle(u):
        while u < d and used[u]:
            u += 1
        if u == d:
            leaf()
            return
        for length in lengths:
            if not remaining[length]:
                continue
            if chunk is not None and u == 0 and length != chunk[0]:
                continue
            remaining[length] -= 1
            used[u] = True
            extend(u, u, length - 1)
            used[u] = False
            remaining[length] += 1

    def extend(start, last, k):
        if k == 0:
            c[last] = start
            open_cycle(start + 1)
            return
        restrict = chunk is not None and start == 0 and last == 0
        for y in range(start + 1, d):
            if used[y] or (restrict and y != chunk[1]):
                continue
            used[y] = True
            c[last] = y
            extend(start, y, k - 1)
            used[y] = False

    open_cycle(0)
    return out
