"""Backend selection for the search kernels.

Prefers the compiled extension when it was built and the instance fits in
64-bit masks; otherwise falls back to the pure-Python twin. Both backends
implement identical algorithms with identical search order, so results do
not depend on the selection. Set ``KDEFECT_PURE=1`` to force the fallback.
"""

from __future__ import annotations

import os

from . import _kernels_py as pure

compiled = None
if not os.environ.get("KDEFECT_PURE"):
    try:
        from . import _ckernels as compiled  # type: ignore[no-redef]
    except ImportError:
        compiled = None

BACKEND = "compiled" if compiled is not None else "pure"

_MASK_BITS = 63


def _pick(n_bits: int):
    if compiled is not None and n_bits <= _MASK_BITS:
        return compiled
    return pure


def find_partition(n, edge_masks, r, capacities=None, deadline=0.0):
    return _pick(n).find_partition(n, edge_masks, r, capacities, deadline)


def max_matching(edge_masks, n_bits, deadline=0.0):
    return _pick(n_bits).max_matching(edge_masks, deadline)


def max_independent(n, adj_masks, deadline=0.0):
    return _pick(n).max_independent(n, adj_masks, deadline)


def min_kneser_classes(edge_masks, r, n_bits, deadline=0.0):
    return _pick(n_bits).min_kneser_classes(edge_masks, r, deadline)
