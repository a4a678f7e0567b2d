"""Exact minimal-colouring solvers, used as test oracles.

Both solvers run iterative deepening on the colour count over a canonical
backtracking search (a vertex or subset may only use colours 1..1+max
colour used before it), so each colouring is visited once up to renaming.
Size limits are hard errors, never silent truncation.
"""

from __future__ import annotations

import itertools
from math import comb
from typing import Optional

from . import _pykernels as codes
from .hypergraph import Hypergraph, SizeLimitError, SubsetColouring, VertexColouring, subset_rank
from .validate import _resolve_notion

__all__ = [
    "MAX_SOLVER_VERTICES",
    "MAX_SOLVER_SUBSETS",
    "exact_min_colours",
    "exact_min_subset_tokens",
]

MAX_SOLVER_VERTICES = 12
MAX_SOLVER_SUBSETS = 21  # e.g. all pairs of up to 7 vertices


def _edge_ok(cols, code, t):
    return codes._edge_ok(list(cols), code, t)


def exact_min_colours(
    h: Hypergraph, notion: str, t: Optional[int] = None
) -> tuple[int, VertexColouring]:
    """Minimum colours admitting a valid colouring, plus one witness.

    For the unordered notions a vertex may only take colours up to one past
    the maximum used before it (each partition is visited once).  The
    unique-maximum notions are sensitive to colour order, so there every
    colour 1..k is tried; order-compression of any witness keeps the
    iterative deepening complete.
    """
    code, tt = _resolve_notion(notion, t)
    ordered = code == codes.NOTION_TUM
    n = h.n
    if n > MAX_SOLVER_VERTICES:
        raise SizeLimitError(
            f"exact vertex solver supports n <= {MAX_SOLVER_VERTICES}, got {n}"
        )
    if n == 0:
        return 0, VertexColouring(())
    # check each hyperedge once, when its largest vertex is coloured
    edges_by_last: list[list[tuple]] = [[] for _ in range(n)]
    for e in h.hyperedges:
        edges_by_last[e[-1]].append(e)

    colours = [0] * n

    def search(v: int, used: int, k: int) -> bool:
        if v == n:
            return True
        cap = k if ordered else min(used + 1, k)
        for c in range(1, cap + 1):
            colours[v] = c
            ok = True
            for e in edges_by_last[v]:
                if not _edge_ok((colours[u] for u in e), code, tt):
                    ok = False
                    break
            if ok and search(v + 1, max(used, c), k):
                return True
        colours[v] = 0
        return False

    for k in range(1, n + 1):
        if search(0, 0, k):
            return len(set(colours)), VertexColouring(tuple(colours))
    raise AssertionError("all-distinct colouring must be valid")


def exact_min_subset_tokens(h: Hypergraph, t: int) -> tuple[int, SubsetColouring]:
    """Minimum distinct tokens for a valid t-subset-CF colouring, plus a witness.

    Backtracks over token assignments in colex subset order; each hyperedge
    is checked once its last t-subset is assigned.
    """
    if t < 1:
        raise ValueError("t must be >= 1")
    n = h.n
    nvars = comb(n, t)
    if nvars > MAX_SOLVER_SUBSETS:
        raise SizeLimitError(
            f"exact subset solver supports C(n,t) <= {MAX_SOLVER_SUBSETS}, got {nvars}"
        )
    subsets = list(itertools.combinations(range(n), t))
    subsets.sort(key=subset_rank)
    assert [subset_rank(s) for s in subsets] == list(range(nvars))

    # hyperedge -> ranks of its t-subsets; attach to the last-assigned rank
    complete_at: list[list[list[int]]] = [[] for _ in range(nvars)]
    constrained = 0
    for e in h.hyperedges:
        if len(e) <= t:
            continue
        constrained += 1
        ranks = [subset_rank(s) for s in itertools.combinations(e, t)]
        complete_at[max(ranks)].append(ranks)

    if nvars == 0 or constrained == 0:
        tokens = SubsetColouring.from_function(t, n, lambda s: 1)
        return (1 if nvars else 0), tokens

    assign = [0] * nvars

    def search(r: int, used: int, k: int) -> bool:
        if r == nvars:
            return True
        for c in range(1, min(used + 1, k) + 1):
            assign[r] = c
            ok = True
            for ranks in complete_at[r]:
                counts: dict[int, int] = {}
                for rr in ranks:
                    counts[assign[rr]] = counts.get(assign[rr], 0) + 1
                if 1 not in counts.values():
                    ok = False
                    break
            if ok and search(r + 1, max(used, c), k):
                return True
        assign[r] = 0
        return False

    for k in range(1, nvars + 1):
        if search(0, 0, k):
            mapping = {s: assign[subset_rank(s)] for s in subsets}
            return max(assign), SubsetColouring.from_mapping(t, n, mapping)
    raise AssertionError("all-distinct tokens must be valid")
