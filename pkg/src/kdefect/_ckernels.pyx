# cython: language_level=3
# cython: boundscheck=False, wraparound=False, cdivision=True
"""Compiled search kernels: the algorithmic twin of ``_kernels_py``.

Same algorithms, same search order, identical results; masks are 64-bit,
so callers must dispatch here only for ground sets of at most 63 vertices.
"""

from libc.stdlib cimport malloc, free

from time import monotonic

from kdefect.errors import SolveTimeout

cdef extern from *:
    int __builtin_popcountll(unsigned long long) nogil
    int __builtin_ctzll(unsigned long long) nogil

ctypedef unsigned long long u64


cdef struct Clock:
    double deadline
    unsigned long long ticks


cdef int _tick(Clock* ck) except -9:
    ck.ticks += 1
    if ck.deadline != 0.0 and (ck.ticks & 0x3FF) == 0:
        if monotonic() > ck.deadline:
            raise SolveTimeout("search exceeded its deadline")
    return 0


# ---------------------------------------------------------------- partition

cdef struct PartCtx:
    int n
    int r
    int has_caps
    u64* part_mask
    int* counts
    int* caps
    int* assign
    int* rest_start
    u64* rest_data
    Clock* ck


cdef int _place(PartCtx* cx, int v) except -9:
    _tick(cx.ck)
    if v == cx.n:
        return 1
    cdef u64 bit = (<u64>1) << v
    cdef u64 pm, rest
    cdef int p, k, ok
    for p in range(cx.r):
        if not cx.has_caps:
            if p > 0 and cx.part_mask[p - 1] == 0:
                break
        else:
            if cx.counts[p] >= cx.caps[p]:
                continue
            if (p > 0 and cx.counts[p] == 0 and cx.counts[p - 1] == 0
                    and cx.caps[p] == cx.caps[p - 1]):
                continue
        pm = cx.part_mask[p]
        ok = 1
        for k in range(cx.rest_start[v], cx.rest_start[v + 1]):
            rest = cx.rest_data[k]
            if (rest & ~pm) == 0:
                ok = 0
                break
        if not ok:
            continue
        cx.assign[v] = p
        cx.part_mask[p] = pm | bit
        cx.counts[p] += 1
        if _place(cx, v + 1):
            return 1
        cx.assign[v] = -1
        cx.part_mask[p] = pm
        cx.counts[p] -= 1
    return 0


def find_partition(int n, list edge_masks, int r, capacities=None, double deadline=0.0):
    cdef int m = len(edge_masks)
    cdef int i, v, hi
    cdef u64 e
    for i in range(m):
        e = <u64>edge_masks[i]
        if e != 0 and (e & (e - 1)) == 0:
            return None
    if n == 0:
        return []
    cdef Clock ck
    ck.deadline = deadline
    ck.ticks = 0
    cdef int* degree = <int*>malloc(n * sizeof(int))
    cdef int* rest_start = <int*>malloc((n + 1) * sizeof(int))
    cdef u64* rest_data = <u64*>malloc((m if m else 1) * sizeof(u64))
    cdef u64* part_mask = <u64*>malloc(r * sizeof(u64))
    cdef int* counts = <int*>malloc(r * sizeof(int))
    cdef int* caps = <int*>malloc(r * sizeof(int))
    cdef int* assign = <int*>malloc(n * sizeof(int))
    cdef int* fill = <int*>malloc(n * sizeof(int))
    cdef PartCtx cx
    try:
        for v in range(n):
            degree[v] = 0
        for i in range(m):
            e = <u64>edge_masks[i]
            hi = 0
            while (e >> (hi + 1)) != 0:
                hi += 1
            degree[hi] += 1
        rest_start[0] = 0
        for v in range(n):
            rest_start[v + 1] = rest_start[v] + degree[v]
            fill[v] = rest_start[v]
        for i in range(m):
            e = <u64>edge_masks[i]
            hi = 0
            while (e >> (hi + 1)) != 0:
                hi += 1
            rest_data[fill[hi]] = e & ~((<u64>1) << hi)
            fill[hi] += 1
        for i in range(r):
            part_mask[i] = 0
            counts[i] = 0
            caps[i] = 0
        if capacities is not None:
            for i in range(r):
                caps[i] = <int>capacities[i]
        for v in range(n):
            assign[v] = -1
        cx.n = n
        cx.r = r
        cx.has_caps = 0 if capacities is None else 1
        cx.part_mask = part_mask
        cx.counts = counts
        cx.caps = caps
        cx.assign = assign
        cx.rest_start = rest_start
        cx.rest_data = rest_data
        cx.ck = &ck
        if _place(&cx, 0):
            return [assign[v] for v in range(n)]
        return None
    finally:
        free(degree)
        free(rest_start)
        free(rest_data)
        free(part_mask)
        free(counts)
        free(caps)
        free(assign)
        free(fill)


# ----------------------------------------------------------------- matching

cdef struct MatchCtx:
    int m
    u64* edges
    int* sizes
    int best
    int* best_set
    int* chosen
    int n_chosen
    Clock* ck


cdef int _match_ub(MatchCtx* cx, int i, u64 used) nogil:
    cdef int cnt = 0
    cdef u64 union_ = 0
    cdef int mn = 1 << 30
    cdef int j
    cdef u64 e
    for j in range(i, cx.m):
        e = cx.edges[j]
        if (e & used) == 0:
            cnt += 1
            union_ |= e
            if cx.sizes[j] < mn:
                mn = cx.sizes[j]
    if cnt == 0:
        return 0
    cdef int vb = __builtin_popcountll(union_) / mn
    return cnt if cnt < vb else vb


cdef int _match_dfs(MatchCtx* cx, int i, u64 used) except -9:
    _tick(cx.ck)
    if cx.n_chosen + _match_ub(cx, i, used) <= cx.best:
        return 0
    cdef int j = i
    cdef int k
    while j < cx.m and (cx.edges[j] & used) != 0:
        j += 1
    if j == cx.m:
        if cx.n_chosen > cx.best:
            cx.best = cx.n_chosen
            for k in range(cx.n_chosen):
                cx.best_set[k] = cx.chosen[k]
        return 0
    cx.chosen[cx.n_chosen] = j
    cx.n_chosen += 1
    _match_dfs(cx, j + 1, used | cx.edges[j])
    cx.n_chosen -= 1
    _match_dfs(cx, j + 1, used)
    return 0


def max_matching(list edge_masks, double deadline=0.0):
    cdef int m = len(edge_masks)
    cdef Clock ck
    ck.deadline = deadline
    ck.ticks = 0
    cdef u64* edges = <u64*>malloc((m if m else 1) * sizeof(u64))
    cdef int* sizes = <int*>malloc((m if m else 1) * sizeof(int))
    cdef int* best_set = <int*>malloc((m if m else 1) * sizeof(int))
    cdef int* chosen = <int*>malloc((m if m else 1) * sizeof(int))
    cdef MatchCtx cx
    cdef int i, nb
    cdef u64 used = 0
    try:
        for i in range(m):
            edges[i] = <u64>edge_masks[i]
            sizes[i] = __builtin_popcountll(edges[i])
        nb = 0
        for i in range(m):
            if (edges[i] & used) == 0:
                best_set[nb] = i
                nb += 1
                used |= edges[i]
        cx.m = m
        cx.edges = edges
        cx.sizes = sizes
        cx.best = nb
        cx.best_set = best_set
        cx.chosen = chosen
        cx.n_chosen = 0
        cx.ck = &ck
        _match_dfs(&cx, 0, 0)
        return cx.best, [best_set[i] for i in range(cx.best)]
    finally:
        free(edges)
        free(sizes)
        free(best_set)
        free(chosen)


# ------------------------------------------------------------- independence

cdef struct MisCtx:
    int n
    u64* adj
    int best
    u64 best_mask
    Clock* ck


cdef int _cover_bound(MisCtx* cx, u64 p_mask) nogil:
    cdef u64 cliques[64]
    cdef int nc = 0
    cdef u64 rem = p_mask
    cdef u64 bit
    cdef int v, idx, placed
    while rem:
        bit = rem & (0 - rem)
        v = __builtin_ctzll(bit)
        rem &= ~bit
        placed = 0
        for idx in range(nc):
            if (cliques[idx] & ~cx.adj[v]) == 0:
                cliques[idx] |= bit
                placed = 1
                break
        if not placed:
            cliques[nc] = bit
            nc += 1
    return nc


cdef int _mis_dfs(MisCtx* cx, u64 p_mask, int size, u64 cur) except -9:
    _tick(cx.ck)
    if p_mask == 0:
        if size > cx.best:
            cx.best = size
            cx.best_mask = cur
        return 0
    if size + _cover_bound(cx, p_mask) <= cx.best:
        return 0
    cdef int v = -1
    cdef int vd = -1
    cdef u64 rem = p_mask
    cdef u64 bit
    cdef int u, d
    while rem:
        bit = rem & (0 - rem)
        u = __builtin_ctzll(bit)
        rem &= ~bit
        d = __builtin_popcountll(cx.adj[u] & p_mask)
        if d > vd:
            vd = d
            v = u
    bit = (<u64>1) << v
    _mis_dfs(cx, p_mask & ~(cx.adj[v] | bit), size + 1, cur | bit)
    _mis_dfs(cx, p_mask & ~bit, size, cur)
    return 0


def max_independent(int n, list adj_masks, double deadline=0.0):
    cdef Clock ck
    ck.deadline = deadline
    ck.ticks = 0
    cdef u64* adj = <u64*>malloc((n if n else 1) * sizeof(u64))
    cdef MisCtx cx
    cdef int i, v, seed
    cdef u64 p, bit, seed_mask
    try:
        for i in range(n):
            adj[i] = <u64>adj_masks[i]
        p = ((<u64>1) << n) - 1 if n < 64 else <u64>0 - 1
        seed_mask = 0
        seed = 0
        while p:
            bit = p & (0 - p)
            v = __builtin_ctzll(bit)
            seed_mask |= bit
            seed += 1
            p &= ~(adj[v] | bit)
        cx.n = n
        cx.adj = adj
        cx.best = seed
        cx.best_mask = seed_mask
        cx.ck = &ck
        _mis_dfs(&cx, ((<u64>1) << n) - 1, 0, 0)
        return cx.best, cx.best_mask
    finally:
        free(adj)


# ------------------------------------------------------- kneser class count

cdef int _has_disjoint(u64* members, int cnt, int idx, u64 used, int need,
                       Clock* ck) except -9:
    _tick(ck)
    if need == 0:
        return 1
    cdef int j
    for j in range(idx, cnt):
        if (members[j] & used) == 0:
            if _has_disjoint(members, cnt, j + 1, used | members[j], need - 1, ck):
                return 1
    return 0


cdef struct KnCtx:
    int m
    int r
    int t
    u64* edges
    u64* members
    int* csize
    int* assign
    Clock* ck


cdef int _kneser_place(KnCtx* cx, int i, int opened) except -9:
    _tick(cx.ck)
    if i == cx.m:
        return 1
    cdef u64 e = cx.edges[i]
    cdef int cap = opened + 1
    if cap > cx.t:
        cap = cx.t
    cdef int c, joinable
    for c in range(cap):
        if cx.r - 1 <= 0:
            joinable = 0
        else:
            joinable = not _has_disjoint(cx.members + c * cx.m, cx.csize[c],
                                         0, e, cx.r - 1, cx.ck)
        if joinable:
            cx.members[c * cx.m + cx.csize[c]] = e
            cx.csize[c] += 1
            cx.assign[i] = c
            if _kneser_place(cx, i + 1, opened + (1 if c == opened else 0)):
                return 1
            cx.csize[c] -= 1
            cx.assign[i] = -1
    return 0


def min_kneser_classes(list edge_masks, int r, double deadline=0.0):
    cdef int m = len(edge_masks)
    cdef Clock ck
    ck.deadline = deadline
    ck.ticks = 0
    cdef u64* edges = <u64*>malloc((m if m else 1) * sizeof(u64))
    cdef u64* members = <u64*>malloc((m * m if m else 1) * sizeof(u64))
    cdef int* csize = <int*>malloc((m if m else 1) * sizeof(int))
    cdef int* assign = <int*>malloc((m if m else 1) * sizeof(int))
    cdef KnCtx cx
    cdef int i, t
    try:
        for i in range(m):
            edges[i] = <u64>edge_masks[i]
            assign[i] = -1
        cx.m = m
        cx.r = r
        cx.edges = edges
        cx.members = members
        cx.csize = csize
        cx.assign = assign
        cx.ck = &ck
        for t in range(2, m + 1):
            for i in range(m):
                csize[i] = 0
                assign[i] = -1
            cx.t = t
            if _kneser_place(&cx, 0, 0):
                return t, [assign[i] for i in range(m)]
        raise AssertionError("single-edge classes always pack-free for r >= 2")
    finally:
        free(edges)
        free(members)
        free(csize)
        free(assign)
