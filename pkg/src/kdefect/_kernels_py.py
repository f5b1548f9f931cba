"""Pure-Python search kernels.

Bitmask-based exact searches: weak hypergraph coloring with optional part
capacities, maximum set packing, maximum independent set, and minimum
class count for packing-free edge partitions. The compiled twin in
``_ckernels.pyx`` implements the same algorithms with the same search
order; both backends must return identical results. Masks here are plain
Python ints, so this backend also covers ground sets wider than 63 bits.
"""

from __future__ import annotations

from time import monotonic

from .errors import SolveTimeout

_CHECK_EVERY = 0x3FF


class _Clock:
    __slots__ = ("deadline", "ticks")

    def __init__(self, deadline: float):
        self.deadline = deadline
        self.ticks = 0

    def tick(self):
        self.ticks += 1
        if self.deadline and not (self.ticks & _CHECK_EVERY):
            if monotonic() > self.deadline:
                raise SolveTimeout("search exceeded its deadline")


def find_partition(n, edge_masks, r, capacities=None, deadline=0.0):
    """Assign each of n vertices to one of r parts with no edge fully inside
    a single part.

    ``capacities`` fixes exact part sizes (len r, summing to n); None means
    unconstrained sizes. Vertices are processed in natural order; parts are
    tried in index order with symmetry breaking (a new part may open only
    after the previous one is nonempty; empty parts with equal capacity are
    interchangeable). Returns the 0-based part index per vertex, or None.
    """
    for e in edge_masks:
        if e and e & (e - 1) == 0:
            return None  # singleton edge is always monochromatic
    if n == 0:
        return []
    rest_at = [[] for _ in range(n)]  # edge minus top vertex, keyed by top
    for e in edge_masks:
        hi = e.bit_length() - 1
        rest_at[hi].append(e & ~(1 << hi))
    assign = [-1] * n
    part_mask = [0] * r
    counts = [0] * r
    clock = _Clock(deadline)

    def place(v: int) -> bool:
        clock.tick()
        if v == n:
            return True
        bit = 1 << v
        rests = rest_at[v]
        for p in range(r):
            if capacities is None:
                if p > 0 and part_mask[p - 1] == 0:
                    break
            else:
                if counts[p] >= capacities[p]:
                    continue
                if (
                    p > 0
                    and counts[p] == 0
                    and counts[p - 1] == 0
                    and capacities[p] == capacities[p - 1]
                ):
                    continue
            pm = part_mask[p]
            ok = True
            for rest in rests:
                if rest & ~pm == 0:
                    ok = False  # every other vertex of the edge sits in p
                    break
            if not ok:
                continue
            assign[v] = p
            part_mask[p] = pm | bit
            counts[p] += 1
            if place(v + 1):
                return True
            assign[v] = -1
            part_mask[p] = pm
            counts[p] -= 1
        return False

    return list(assign) if place(0) else None


def max_matching(edge_masks, deadline=0.0):
    """Maximum number of pairwise disjoint edges, plus one witness (edge
    indices). Branch and bound over edges in canonical order: greedy start,
    include-first DFS, bound = min(remaining candidates, free vertices over
    the smallest remaining edge)."""
    m = len(edge_masks)
    sizes = [e.bit_count() for e in edge_masks]
    used = 0
    greedy = []
    for i, e in enumerate(edge_masks):
        if not e & used:
            greedy.append(i)
            used |= e
    best = len(greedy)
    best_set = list(greedy)
    clock = _Clock(deadline)
    chosen: list[int] = []

    def ub(i: int, used_mask: int) -> int:
        cnt = 0
        union = 0
        mn = 1 << 30
        for j in range(i, m):
            e = edge_masks[j]
            if not e & used_mask:
                cnt += 1
                union |= e
                if sizes[j] < mn:
                    mn = sizes[j]
        if cnt == 0:
            return 0
        return min(cnt, union.bit_count() // mn)

    def dfs(i: int, used_mask: int):
        nonlocal best, best_set
        clock.tick()
        if len(chosen) + ub(i, used_mask) <= best:
            return
        j = i
        while j < m and edge_masks[j] & used_mask:
            j += 1
        if j == m:
            if len(chosen) > best:
                best = len(chosen)
                best_set = list(chosen)
            return
        chosen.append(j)
        dfs(j + 1, used_mask | edge_masks[j])
        chosen.pop()
        dfs(j + 1, used_mask)

    dfs(0, 0)
    return best, best_set


def _clique_cover_bound(p_mask, adj):
    """Greedy clique cover of the candidate set: an upper bound on the size
    of any independent subset."""
    cliques: list[int] = []
    rem = p_mask
    while rem:
        bit = rem & -rem
        v = bit.bit_length() - 1
        rem &= ~bit
        for idx, c in enumerate(cliques):
            if c & ~adj[v] == 0:
                cliques[idx] = c | bit
                break
        else:
            cliques.append(bit)
    return len(cliques)


def max_independent(n, adj_masks, deadline=0.0):
    """Maximum independent set in a graph given per-vertex adjacency masks.
    Returns (size, vertex mask)."""
    best = 0
    best_mask = 0
    clock = _Clock(deadline)
    # greedy seed: lowest-index vertex first
    p = (1 << n) - 1
    seed_mask = 0
    seed = 0
    while p:
        bit = p & -p
        v = bit.bit_length() - 1
        seed_mask |= bit
        seed += 1
        p &= ~(adj_masks[v] | bit)
    best, best_mask = seed, seed_mask

    def dfs(p_mask: int, size: int, cur: int):
        nonlocal best, best_mask
        clock.tick()
        if p_mask == 0:
            if size > best:
                best = size
                best_mask = cur
            return
        if size + _clique_cover_bound(p_mask, adj_masks) <= best:
            return
        # pivot: max degree inside the candidate set, lowest index on ties
        v = -1
        vd = -1
        rem = p_mask
        while rem:
            bit = rem & -rem
            u = bit.bit_length() - 1
            rem &= ~bit
            d = (adj_masks[u] & p_mask).bit_count()
            if d > vd:
                vd = d
                v = u
        bit = 1 << v
        dfs(p_mask & ~(adj_masks[v] | bit), size + 1, cur | bit)
        dfs(p_mask & ~bit, size, cur)

    dfs((1 << n) - 1, 0, 0)
    return best, best_mask


def _has_disjoint(members, avoid, k, clock) -> bool:
    """True iff k pairwise disjoint members exist, all avoiding ``avoid``."""
    if k <= 0:
        return True

    def rec(idx: int, used: int, need: int) -> bool:
        clock.tick()
        if need == 0:
            return True
        for j in range(idx, len(members)):
            e = members[j]
            if not e & used and rec(j + 1, used | e, need - 1):
                return True
        return False

    return rec(0, avoid, k)


def min_kneser_classes(edge_masks, r, deadline=0.0):
    """Minimum t such that the edges split into t classes none of which
    contains r pairwise disjoint edges. Caller guarantees at least one edge
    and an r-packing among all edges (so the answer is >= 2). Returns
    (t, 0-based class index per edge).

    Iterative deepening on t; edge i may only open class (opened + 1), and
    joining a class is allowed when no r-1 of its members are pairwise
    disjoint and disjoint from the incoming edge.
    """
    m = len(edge_masks)
    clock = _Clock(deadline)
    assign = [-1] * m
    classes: list[list[int]] = [[] for _ in range(m)]

    def place(i: int, opened: int, t: int) -> bool:
        clock.tick()
        if i == m:
            return True
        e = edge_masks[i]
        for c in range(min(opened + 1, t)):
            if not _has_disjoint(classes[c], e, r - 1, clock):
                classes[c].append(e)
                assign[i] = c
                if place(i + 1, opened + (1 if c == opened else 0), t):
                    return True
                classes[c].pop()
                assign[i] = -1
        return False

    for t in range(2, m + 1):
        for c in classes:
            c.clear()
        if place(0, 0, t):
            return t, list(assign)
    raise AssertionError("single-edge classes always pack-free for r >= 2")
