"""Finite hypergraphs on the ground set {1, ..., n} and the structural
operations the exact solvers build on: cyclic-gap stability predicates,
stable subfamilies, disjointness (Kneser-style) hypergraphs, induced
restrictions, and augmentation with the graph of all non-stable pairs.

Vertices are 1-indexed everywhere. Edges are stored as strictly increasing
tuples, deduplicated and sorted lexicographically, so two hypergraphs are
structurally equal exactly when their dataclass fields compare equal. All
types are immutable; every operation is a pure function.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass

from .errors import CapExceeded

Edge = tuple[int, ...]

#: Edge-count cap for materializing a disjointness hypergraph explicitly;
#: C(m, r) blows up fast and the solver module never needs the explicit object.
DEFAULT_KNESER_CAP = 20


@dataclass(frozen=True)
class Hypergraph:
    """A hypergraph with ground set {1, ..., n} and a canonical edge list.

    ``n = 0`` (the empty ground set, no edges) is permitted so that removing
    every vertex still yields a valid induced subhypergraph.
    """

    n: int
    edges: tuple[Edge, ...] = ()

    def __post_init__(self):
        if self.n < 0:
            raise ValueError(f"ground-set size must be >= 0, got {self.n}")
        canon = set()
        for e in self.edges:
            t = tuple(sorted(e))
            if not t:
                raise ValueError("empty hyperedge")
            if len(set(t)) != len(t):
                raise ValueError(f"repeated vertex in hyperedge {e}")
            if t[0] < 1 or t[-1] > self.n:
                raise ValueError(f"hyperedge {e} out of range [1, {self.n}]")
            canon.add(t)
        object.__setattr__(self, "edges", tuple(sorted(canon)))

    @property
    def num_edges(self) -> int:
        return len(self.edges)

    @property
    def is_graph(self) -> bool:
        return all(len(e) == 2 for e in self.edges)

    def has_singleton_edge(self) -> bool:
        return any(len(e) == 1 for e in self.edges)

    def edge_masks(self) -> list[int]:
        """Edges as bitmasks (vertex v -> bit v-1), in canonical edge order."""
        out = []
        for e in self.edges:
            m = 0
            for v in e:
                m |= 1 << (v - 1)
            out.append(m)
        return out

    def adjacency_masks(self) -> list[int]:
        """Neighbor bitmask per vertex; defined only for graphs."""
        if not self.is_graph:
            raise ValueError("adjacency is defined for graphs only")
        adj = [0] * self.n
        for x, y in self.edges:
            adj[x - 1] |= 1 << (y - 1)
            adj[y - 1] |= 1 << (x - 1)
        return adj


@dataclass(frozen=True)
class StabilityKind:
    """Pairwise-gap condition on subsets of {1, ..., n}.

    Plain stability requires every pair to satisfy s <= |x - y| <= n - s
    (both cyclic gaps at least s); the almost variant drops the wrap-around
    bound and requires only |x - y| >= s.
    """

    s: int
    almost: bool = False

    def __post_init__(self):
        if self.s < 1:
            raise ValueError(f"stability gap must be >= 1, got {self.s}")


def stable(s: int) -> StabilityKind:
    return StabilityKind(s)


def almost_stable(s: int) -> StabilityKind:
    return StabilityKind(s, almost=True)


def is_stable_pair(x: int, y: int, n: int, s: int) -> bool:
    """True iff s <= |x - y| <= n - s, i.e. the cyclic distance of x and y
    on the n-cycle is at least s."""
    if s < 1:
        raise ValueError(f"stability gap must be >= 1, got {s}")
    if not (1 <= x <= n and 1 <= y <= n):
        raise ValueError(f"vertices {x}, {y} out of range [1, {n}]")
    if x == y:
        raise ValueError("stability is defined for distinct vertices")
    return s <= abs(x - y) <= n - s


def is_stable_set(e, n: int, kind: StabilityKind) -> bool:
    """Check every pair of ``e`` against the gap condition.

    Singletons qualify vacuously for both kinds.
    """
    vs = sorted(e)
    if not vs:
        raise ValueError("empty set has no stability kind")
    if vs[0] < 1 or vs[-1] > n:
        raise ValueError(f"set {vs} out of range [1, {n}]")
    if len(set(vs)) != len(vs):
        raise ValueError(f"repeated vertex in {e}")
    for x, y in itertools.combinations(vs, 2):
        gap = y - x
        if gap < kind.s:
            return False
        if not kind.almost and gap > n - kind.s:
            return False
    return True


def stable_subhypergraph(h: Hypergraph, kind: StabilityKind) -> Hypergraph:
    """Keep exactly the edges that pass :func:`is_stable_set`."""
    kept = tuple(e for e in h.edges if is_stable_set(e, h.n, kind))
    return Hypergraph(h.n, kept)


def kneser_hypergraph(h: Hypergraph, r: int, cap: int = DEFAULT_KNESER_CAP) -> Hypergraph:
    """Materialize the disjointness hypergraph: one vertex per edge of ``h``
    (numbered by canonical edge order), one hyperedge per r-set of pairwise
    disjoint edges.

    Intended as a brute-force oracle only; guarded by ``cap`` because the
    number of candidate r-sets is C(m, r).
    """
    if r < 2:
        raise ValueError(f"disjointness arity must be >= 2, got {r}")
    m = h.num_edges
    if m > cap:
        raise CapExceeded(
            f"{m} edges: too large for explicit construction (cap {cap})"
        )
    sets = [frozenset(e) for e in h.edges]
    hyper = []
    for combo in itertools.combinations(range(m), r):
        ok = True
        for i, j in itertools.combinations(combo, 2):
            if sets[i] & sets[j]:
                ok = False
                break
        if ok:
            hyper.append(tuple(k + 1 for k in combo))
    return Hypergraph(m, tuple(hyper))


def induced_subhypergraph(h: Hypergraph, removed) -> tuple[Hypergraph, dict[int, int]]:
    """Delete ``removed`` and every edge meeting it; relabel the survivors to
    {1, ..., n - |removed|} preserving order.

    Returns the subhypergraph together with the old->new vertex map so that
    certificates computed on the restriction can be lifted back.
    """
    gone = set(removed)
    if not gone <= set(range(1, h.n + 1)):
        raise ValueError(f"removal set {sorted(gone)} out of range [1, {h.n}]")
    relabel: dict[int, int] = {}
    nxt = 1
    for v in range(1, h.n + 1):
        if v not in gone:
            relabel[v] = nxt
            nxt += 1
    kept = tuple(
        tuple(relabel[v] for v in e) for e in h.edges if not gone & set(e)
    )
    return Hypergraph(h.n - len(gone), kept), relabel


def non_stable_pairs(n: int, s: int) -> tuple[Edge, ...]:
    """All pairs of [1, n] failing the plain stability condition."""
    return tuple(
        (x, y)
        for x, y in itertools.combinations(range(1, n + 1), 2)
        if not is_stable_pair(x, y, n, s)
    )


def augment_with_fns(h: Hypergraph, s: int) -> Hypergraph:
    """Union ``h`` with the graph of all non-s-stable pairs on the same
    ground set.

    Requires that ``h`` has no s-stable edge (singletons count as stable);
    under that hypothesis every edge of the union contains a non-stable pair,
    which is what makes defect computations on the union collapse to the
    pair graph alone.
    """
    for e in h.edges:
        if is_stable_set(e, h.n, stable(s)):
            raise ValueError(f"input has an s-stable edge: {e} (s={s})")
    return Hypergraph(h.n, h.edges + non_stable_pairs(h.n, s))


@dataclass
class Coloring:
    """Total map from {1, ..., domain_size} to colors {1, ..., num_colors},
    with every color used at least once (num_colors is exact).

    Treated as immutable after construction.
    """

    domain_size: int
    colors: dict[int, int]
    num_colors: int = 0

    def __post_init__(self):
        if set(self.colors) != set(range(1, self.domain_size + 1)):
            raise ValueError("coloring is not a total map on the domain")
        used = set(self.colors.values())
        if self.domain_size == 0:
            if self.num_colors != 0:
                raise ValueError("empty domain uses no colors")
            return
        if used != set(range(1, self.num_colors + 1)):
            raise ValueError(
                f"colors used {sorted(used)} != 1..{self.num_colors}"
            )

    def as_sequence(self) -> tuple[int, ...]:
        return tuple(self.colors[v] for v in range(1, self.domain_size + 1))
