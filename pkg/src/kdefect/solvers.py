"""Exact exponential-time solvers for the invariants the conjecture checkers
need: weak (and equitable) colorability, chromatic number, independence
number, matching number, colorability defects, and the chromatic number of
the disjointness hypergraph computed without materializing it.

Every solver is deterministic, accepts an optional ``deadline`` (absolute
``time.monotonic()`` value) and raises :class:`SolveTimeout` when it is
exceeded; no partial answers are ever returned as exact.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass

from . import kernels
from .errors import CapExceeded
from .hypergraph import Edge, Hypergraph, induced_subhypergraph


class _Infeasible:
    """Distinguished chromatic-number result for hypergraphs with a singleton
    edge: no number of colors avoids a monochromatic edge."""

    _instance = None

    def __new__(cls):
        if cls._instance is None:
            cls._instance = super().__new__(cls)
        return cls._instance

    def __repr__(self):
        return "Infeasible"


INFEASIBLE = _Infeasible()


@dataclass(frozen=True)
class DefectCertificate:
    """A removed vertex set plus an r-part partition of the remainder with no
    hyperedge inside a single part (part sizes within 1 of each other when
    ``equitable``). Vertices carry original labels."""

    removed: tuple[int, ...]
    parts: tuple[tuple[int, ...], ...]
    equitable: bool

    def to_obj(self) -> dict:
        return {
            "type": "defect",
            "removed": list(self.removed),
            "parts": [list(p) for p in self.parts],
            "equitable": self.equitable,
        }


@dataclass(frozen=True)
class KneserColoring:
    """Partition of an edge set into classes, none containing r pairwise
    disjoint edges; ``witnesses[i]`` is a maximum pairwise-disjoint subfamily
    of class i (so each has size <= r - 1)."""

    r: int
    classes: tuple[tuple[Edge, ...], ...]
    witnesses: tuple[tuple[Edge, ...], ...]

    @property
    def num_classes(self) -> int:
        return len(self.classes)

    def to_obj(self) -> dict:
        return {
            "type": "kneser_coloring",
            "r": self.r,
            "classes": [[list(e) for e in cls] for cls in self.classes],
            "witnesses": [[list(e) for e in w] for w in self.witnesses],
        }


def _equitable_capacities(n: int, r: int) -> list[int]:
    """Exact part sizes of an equitable r-partition of an n-set: (n mod r)
    parts of size ceil(n/r) first, then floor-size parts."""
    big, small = -(-n // r), n // r
    k = n % r
    return [big] * k + [small] * (r - k)


def matching_number(h: Hypergraph, deadline: float = 0.0) -> tuple[int, tuple[Edge, ...]]:
    """Maximum number of pairwise disjoint edges and one maximum witness."""
    size, idx = kernels.max_matching(h.edge_masks(), h.n, deadline)
    return size, tuple(h.edges[i] for i in idx)


def is_r_colorable(
    h: Hypergraph, r: int, equitable: bool = False, deadline: float = 0.0
) -> DefectCertificate | None:
    """Search for a partition of the full vertex set into r parts with no
    edge inside a part; None when impossible (in particular whenever a
    singleton edge is present)."""
    if r < 1:
        raise ValueError(f"part count must be >= 1, got {r}")
    caps = _equitable_capacities(h.n, r) if equitable else None
    assign = kernels.find_partition(h.n, h.edge_masks(), r, caps, deadline)
    if assign is None:
        return None
    parts = [[] for _ in range(r)]
    for v0, p in enumerate(assign):
        parts[p].append(v0 + 1)
    return DefectCertificate((), tuple(tuple(p) for p in parts), equitable)


def chromatic_number(h: Hypergraph, deadline: float = 0.0):
    """Least r admitting a proper weak coloring; INFEASIBLE when a singleton
    edge makes every coloring improper. Conventions: 0 for the empty ground
    set, 1 for an edgeless hypergraph on n >= 1 vertices."""
    if h.has_singleton_edge():
        return INFEASIBLE
    if h.n == 0:
        return 0
    if not h.edges:
        return 1
    masks = h.edge_masks()
    for r in itertools.count(2):  # an edge of size >= 2 rules out r = 1
        if kernels.find_partition(h.n, masks, r, None, deadline) is not None:
            return r


def independence_number(h: Hypergraph, deadline: float = 0.0) -> int:
    """Maximum independent set size; graphs (all edges of size 2) only."""
    if not h.is_graph:
        raise ValueError("independence number requires a graph (2-uniform edges)")
    if h.n == 0:
        return 0
    size, _ = kernels.max_independent(h.n, h.adjacency_masks(), deadline)
    return size


def _canonical_key(h: Hypergraph, gone: tuple[int, ...]):
    """Canonical form of the induced subhypergraph after removing ``gone``:
    relabeled ground-set size plus relabeled edge tuple."""
    relabel = {}
    nxt = 1
    gone_set = set(gone)
    for v in range(1, h.n + 1):
        if v not in gone_set:
            relabel[v] = nxt
            nxt += 1
    kept = tuple(
        sorted(
            tuple(relabel[v] for v in e)
            for e in h.edges
            if not gone_set & set(e)
        )
    )
    return (h.n - len(gone), kept), relabel


def colorability_defect(
    h: Hypergraph,
    r: int,
    equitable: bool = False,
    max_removal: int | None = None,
    deadline: float = 0.0,
) -> tuple[int, DefectCertificate]:
    """Least number of vertices whose removal leaves an (equitably if asked)
    r-colorable induced subhypergraph, plus a witnessing certificate.

    Removal sizes are tried in increasing order; within a size, subsets are
    enumerated lexicographically and the first success is returned, so the
    certificate is deterministic. Vertices covered by singleton edges must
    appear in every valid removal set and are forced up front. Colorability
    results are memoized on the canonical form of the restriction.
    """
    if r < 1:
        raise ValueError(f"part count must be >= 1, got {r}")
    cap = h.n if max_removal is None else max_removal
    forced = sorted({e[0] for e in h.edges if len(e) == 1})
    free = [v for v in range(1, h.n + 1) if v not in set(forced)]
    memo: dict = {}

    def colorable(gone: tuple[int, ...]):
        key, relabel = _canonical_key(h, gone)
        if key not in memo:
            n_sub, kept = key
            sub = Hypergraph(n_sub, kept)
            memo[key] = is_r_colorable(sub, r, equitable, deadline)
        cert = memo[key]
        if cert is None:
            return None
        inverse = {new: old for old, new in relabel.items()}
        parts = tuple(
            tuple(inverse[v] for v in part) for part in cert.parts
        )
        return DefectCertificate(tuple(gone), parts, equitable)

    for d in range(len(forced), h.n + 1):
        if d > cap:
            raise CapExceeded(
                f"defect exceeds removal cap {cap} (r={r}, equitable={equitable})"
            )
        for extra in itertools.combinations(free, d - len(forced)):
            gone = tuple(sorted(forced + list(extra)))
            cert = colorable(gone)
            if cert is not None:
                return d, cert
    raise AssertionError("removing every vertex always leaves a colorable rest")


def equitable_colorability_defect(
    h: Hypergraph,
    r: int,
    max_removal: int | None = None,
    deadline: float = 0.0,
) -> tuple[int, DefectCertificate]:
    return colorability_defect(h, r, True, max_removal, deadline)


def defect_pair(h: Hypergraph, r: int, deadline: float = 0.0) -> tuple[int, int]:
    """Plain and equitable defect together, with the always-true cross check
    that the equitable value dominates the plain one."""
    cd, _ = colorability_defect(h, r, False, None, deadline)
    ecd, _ = colorability_defect(h, r, True, None, deadline)
    if ecd < cd:
        raise AssertionError(f"equitable defect {ecd} below plain defect {cd}")
    return cd, ecd


def kneser_chromatic_number(
    h: Hypergraph, r: int, deadline: float = 0.0
) -> tuple[int, KneserColoring]:
    """Chromatic number of the disjointness hypergraph of ``h`` at arity r:
    the least t such that the edges split into t classes none of which
    contains r pairwise disjoint edges.

    Conventions: 0 for an empty edge set; 1 when edges exist but no r of
    them are pairwise disjoint. Computed by iterative deepening over t with
    backtracking over edges, without materializing the disjointness
    hypergraph.
    """
    if r < 2:
        raise ValueError(f"disjointness arity must be >= 2, got {r}")
    if not h.edges:
        return 0, KneserColoring(r, (), ())
    masks = h.edge_masks()
    nu, witness_idx = kernels.max_matching(masks, h.n, deadline)
    if nu <= r - 1:
        witness = tuple(h.edges[i] for i in witness_idx)
        return 1, KneserColoring(r, (h.edges,), (witness,))
    t, assign = kernels.min_kneser_classes(masks, r, h.n, deadline)
    index_classes = [[] for _ in range(t)]
    for i, c in enumerate(assign):
        index_classes[c].append(i)
    classes = []
    witnesses = []
    for idxs in index_classes:
        _, widx = kernels.max_matching([masks[i] for i in idxs], h.n, deadline)
        classes.append(tuple(h.edges[i] for i in idxs))
        witnesses.append(tuple(h.edges[idxs[i]] for i in widx))
    return t, KneserColoring(r, tuple(classes), tuple(witnesses))
