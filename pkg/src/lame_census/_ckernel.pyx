# cython: language_level=3
"""Compiled enumeration kernel; same contract as ``_pykernel.scan_class``."""

cdef enum:
    MAXD = 64

cdef struct State:
    int d
    int pre
    int chunk_len
    int chunk_img
    int nlengths
    int lengths[MAXD]
    int remaining[MAXD + 1]
    int tcounts[MAXD + 1]
    int ginf[MAXD]
    int c[MAXD]
    char used[MAXD]


cdef bint _survives(State* st):
    cdef int d = st.d
    cdef int w[MAXD]
    cdef char seen[MAXD]
    cdef int counts[MAXD + 1]
    cdef int stack[MAXD]
    cdef int x, y, s, length, top, reached, k
    for x in range(d):
        if st.pre:
            w[x] = st.c[st.ginf[x]]
        else:
            w[x] = st.ginf[st.c[x]]
        seen[x] = 0
    for x in range(d + 1):
        counts[x] = 0
    for s in range(d):
        if seen[s]:
            continue
        length = 0
        x = s
        while not seen[x]:
            seen[x] = 1
            x = w[x]
            length += 1
        counts[length] += 1
        if counts[length] > st.tcounts[length]:
            return False
    for x in range(d):
        seen[x] = 0
    seen[0] = 1
    stack[0] = 0
    top = 1
    reached = 1
    while top:
        top -= 1
        x = stack[top]
        for k in range(2):
            y = st.c[x] if k == 0 else st.ginf[x]
            if not seen[y]:
                seen[y] = 1
                reached += 1
                stack[top] = y
                top += 1
    return reached == d


cdef void _open_cycle(State* st, int u, list out):
    cdef int i, length, d = st.d
    while u < d and st.used[u]:
        u += 1
    if u == d:
        if _survives(st):
            out.append(tuple([st.c[i] for i in range(d)]))
        return
    for i in range(st.nlengths):
        length = st.lengths[i]
        if not st.remaining[length]:
            continue
        if st.chunk_len > 0 and u == 0 and length != st.chunk_len:
            continue
        st.remaining[length] -= 1
        st.used[u] = 1
        _extend(st, u, u, length - 1, out)
        st.used[u] = 0
        st.remaining[length] += 1


cdef void _extend(State* st, int start, int last, int k, list out):
    cdef int y
    cdef bint restrict
    if k == 0:
        st.c[last] = start
        _open_cycle(st, start + 1, out)
        return
    restrict = st.chunk_len > 0 and start == 0 and last == 0
    for y in range(start + 1, st.d):
        if st.used[y] or (restrict and y != st.chunk_img):
            continue
        st.used[y] = 1
        st.c[last] = y
        _extend(st, start, y, k - 1, out)
        st.used[y] = 0


def scan_class(parts, ginf, target, pre, chunk=None):
    cdef State st
    cdef int i, d = len(ginf)
    if d > MAXD:
        raise ValueError(f"compiled kernel supports degree <= {MAXD}, got {d}")
    st.d = d
    st.pre = 1 if pre else 0
    if chunk is None:
        st.chunk_len = 0
        st.chunk_img = -1
    else:
        st.chunk_len = chunk[0]
        st.chunk_img = chunk[1]
    for i in range(d + 1):
        st.remaining[i] = 0
        st.tcounts[i] = 0
    for p in parts:
        st.remaining[p] += 1
    for t in target:
        st.tcounts[t] += 1
    lengths = sorted(set(parts), reverse=True)
    st.nlengths = len(lengths)
    for i in range(st.nlengths):
        st.lengths[i] = lengths[i]
    for i in range(d):
        st.ginf[i] = ginf[i]
        st.c[i] = -1
        st.used[i] = 0
    out = []
    _open_cycle(&st, 0, out)
    return out
