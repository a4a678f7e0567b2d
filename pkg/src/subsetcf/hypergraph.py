"""Hypergraph containers and set-level operations.

Vertices are the integers ``0..n-1``.  Hyperedges are kept canonical
(members sorted, edges deduplicated and sorted lexicographically), so two
hypergraphs are equal exactly when their canonical forms are.  All types
are immutable after construction and safe to share across workers.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from math import comb
from typing import Any, Callable, Iterable, Iterator, Mapping, Sequence

import numpy as np

from ._backend import kernels

__all__ = [
    "BOTTOM",
    "Graph",
    "Hypergraph",
    "SizeLimitError",
    "SubsetColouring",
    "VertexColouring",
    "count_pairs_in_small_hyperedges",
    "delaunay_graph",
    "induced_subhypergraph",
    "subset_rank",
    "subsets_in_rank_order",
    "union_hypergraph",
]

# Materialising a union hypergraph walks |E|^2 pairs; refuse beyond this.
UNION_PAIR_LIMIT = 200_000_000


class SizeLimitError(ValueError):
    """An instance exceeds a documented solver or enumeration limit."""


class _Bottom:
    """The distinguished dummy token for subset colourings."""

    __slots__ = ()

    def __repr__(self) -> str:
        return "BOTTOM"


BOTTOM = _Bottom()


def _canonical_hyperedges(n: int, hyperedges: Iterable[Iterable[int]]) -> tuple:
    seen = set()
    for h in hyperedges:
        e = tuple(sorted(set(h)))
        if not e:
            continue
        if e[0] < 0 or e[-1] >= n:
            raise ValueError(f"hyperedge {e} out of vertex range 0..{n - 1}")
        seen.add(e)
    return tuple(sorted(seen))


@dataclass(frozen=True)
class Hypergraph:
    """Vertex count plus a deduplicated set of nonempty hyperedges."""

    n: int
    hyperedges: tuple = ()

    def __post_init__(self) -> None:
        if self.n < 0:
            raise ValueError("vertex count must be nonnegative")
        object.__setattr__(
            self, "hyperedges", _canonical_hyperedges(self.n, self.hyperedges)
        )

    def __len__(self) -> int:
        return len(self.hyperedges)

    def csr(self) -> tuple[np.ndarray, np.ndarray]:
        """Hyperedges flattened to (indptr, vertices) arrays for the kernels."""
        cached = getattr(self, "_csr_cache", None)
        if cached is None:
            indptr = np.zeros(len(self.hyperedges) + 1, dtype=np.int64)
            for i, h in enumerate(self.hyperedges):
                indptr[i + 1] = indptr[i] + len(h)
            flat = np.fromiter(
                itertools.chain.from_iterable(self.hyperedges),
                dtype=np.int32,
                count=int(indptr[-1]),
            )
            cached = (indptr, flat)
            object.__setattr__(self, "_csr_cache", cached)
        return cached

    def max_edge_size(self) -> int:
        return max((len(h) for h in self.hyperedges), default=0)


@dataclass(frozen=True)
class Graph:
    """Simple undirected graph; edges are sorted vertex pairs."""

    n: int
    edges: tuple = ()

    def __post_init__(self) -> None:
        seen = set()
        for e in self.edges:
            u, v = e
            if u == v:
                raise ValueError(f"self-loop at vertex {u}")
            if not (0 <= u < self.n and 0 <= v < self.n):
                raise ValueError(f"edge {e} out of range")
            seen.add((min(u, v), max(u, v)))
        object.__setattr__(self, "edges", tuple(sorted(seen)))

    def adjacency(self) -> list[list[int]]:
        adj: list[list[int]] = [[] for _ in range(self.n)]
        for u, v in self.edges:
            adj[u].append(v)
            adj[v].append(u)
        return adj


@dataclass(frozen=True)
class VertexColouring:
    """Positive integer colour per vertex; order doubles as the UM order."""

    colours: tuple

    def __post_init__(self) -> None:
        cols = tuple(int(c) for c in self.colours)
        if any(c < 1 for c in cols):
            raise ValueError("colours must be positive integers")
        object.__setattr__(self, "colours", cols)

    @property
    def n(self) -> int:
        return len(self.colours)

    def __getitem__(self, v: int) -> int:
        return self.colours[v]

    def num_colours(self) -> int:
        """Number of distinct colour values actually used."""
        return len(set(self.colours))

    def max_colour(self) -> int:
        return max(self.colours) if self.colours else 0

    def as_array(self) -> np.ndarray:
        return np.asarray(self.colours, dtype=np.int32)


def subset_rank(subset: Sequence[int]) -> int:
    """Colexicographic rank of a sorted vertex subset."""
    r = 0
    for pos, v in enumerate(subset, start=1):
        r += comb(v, pos)
    return r


def subsets_in_rank_order(n: int, t: int) -> Iterator[tuple]:
    """All t-subsets of 0..n-1 in colexicographic (rank) order."""

    def rec(limit: int, k: int):
        if k == 0:
            yield ()
            return
        for top in range(k - 1, limit):
            for rest in rec(top, k - 1):
                yield rest + (top,)

    yield from rec(n, t)


class SubsetColouring:
    """Colour token per t-subset of 0..n-1, stored densely by subset rank.

    Tokens are opaque equality-comparable values (ints, tuples, or BOTTOM).
    The reported colour count is the number of distinct tokens in use.
    """

    __slots__ = ("t", "n", "_ids", "_tokens")

    def __init__(self, t: int, n: int, ids: np.ndarray, tokens: Sequence[Any]):
        if t < 1:
            raise ValueError("subset size t must be >= 1")
        if len(ids) != comb(n, t):
            raise ValueError("assignment must cover every t-subset")
        self.t = t
        self.n = n
        self._ids = np.asarray(ids, dtype=np.int32)
        self._tokens = tuple(tokens)
        if len(self._ids) and (
            self._ids.min() < 0 or self._ids.max() >= len(self._tokens)
        ):
            raise ValueError("token id out of range")

    @classmethod
    def from_mapping(cls, t: int, n: int, mapping: Mapping[tuple, Any]) -> "SubsetColouring":
        ids = np.empty(comb(n, t), dtype=np.int32)
        tokens: list[Any] = []
        index: dict[Any, int] = {}
        count = 0
        for subset in itertools.combinations(range(n), t):
            try:
                tok = mapping[subset]
            except KeyError:
                raise ValueError(f"missing token for subset {subset}") from None
            key = id(tok) if tok is BOTTOM else ("tok", tok)
            tid = index.get(key)
            if tid is None:
                tid = len(tokens)
                index[key] = tid
                tokens.append(tok)
            ids[subset_rank(subset)] = tid
            count += 1
        if count != comb(n, t):
            raise ValueError("assignment must cover every t-subset")
        return cls(t, n, ids, tokens)

    @classmethod
    def from_function(cls, t: int, n: int, fn: Callable[[tuple], Any]) -> "SubsetColouring":
        ids = np.empty(comb(n, t), dtype=np.int32)
        tokens: list[Any] = []
        index: dict[Any, int] = {}
        for subset in itertools.combinations(range(n), t):
            tok = fn(subset)
            key = id(tok) if tok is BOTTOM else ("tok", tok)
            tid = index.get(key)
            if tid is None:
                tid = len(tokens)
                index[key] = tid
                tokens.append(tok)
            ids[subset_rank(subset)] = tid
        return cls(t, n, ids, tokens)

    def token_of(self, subset: Iterable[int]) -> Any:
        s = tuple(sorted(subset))
        if len(s) != self.t or len(set(s)) != self.t:
            raise ValueError(f"not a {self.t}-subset: {subset}")
        return self._tokens[self._ids[subset_rank(s)]]

    def token_ids(self) -> np.ndarray:
        return self._ids

    def tokens(self) -> tuple:
        return self._tokens

    def num_tokens(self) -> int:
        """Distinct tokens actually used across the whole domain."""
        return int(np.unique(self._ids).size) if len(self._ids) else 0

    def items(self) -> Iterator[tuple[tuple, Any]]:
        for subset in itertools.combinations(range(self.n), self.t):
            yield subset, self._tokens[self._ids[subset_rank(subset)]]

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, SubsetColouring):
            return NotImplemented
        if (self.t, self.n) != (other.t, other.n):
            return False
        return all(a == b for (_, a), (_, b) in zip(self.items(), other.items()))


def induced_subhypergraph(h: Hypergraph, vertices: Iterable[int]) -> tuple[Hypergraph, tuple]:
    """Restrict to a vertex subset, re-indexing to 0..m-1 in vertex order.

    Returns the induced hypergraph together with the map new_index -> old
    vertex.  Empty intersections are dropped and duplicates merged.
    """
    keep = sorted(set(vertices))
    if keep and (keep[0] < 0 or keep[-1] >= h.n):
        raise ValueError("vertex subset out of range")
    newidx = {v: i for i, v in enumerate(keep)}
    keepset = set(keep)
    edges = []
    for e in h.hyperedges:
        cut = tuple(newidx[v] for v in e if v in keepset)
        if cut:
            edges.append(cut)
    return Hypergraph(len(keep), edges), tuple(keep)


def delaunay_graph(h: Hypergraph) -> Graph:
    """Graph on the same vertices whose edges are the size-2 hyperedges."""
    return Graph(h.n, tuple(e for e in h.hyperedges if len(e) == 2))


def _mask_of(edge: Sequence[int]) -> int:
    m = 0
    for v in edge:
        m |= 1 << v
    return m


def _edge_of_mask(mask: int) -> tuple:
    out = []
    v = 0
    while mask:
        if mask & 1:
            out.append(v)
        mask >>= 1
        v += 1
    return tuple(out)


def union_hypergraph(h: Hypergraph) -> Hypergraph:
    """Hypergraph whose hyperedges are all unions of two hyperedges of h.

    The inclusive reading (e = f allowed) is used, so the original edges are
    a subset of the result.
    """
    m = len(h.hyperedges)
    if m * m > UNION_PAIR_LIMIT:
        raise SizeLimitError(
            f"union of {m} hyperedges needs {m * m} pairs; limit {UNION_PAIR_LIMIT}"
        )
    if h.n <= 64:
        masks = np.fromiter(
            (_mask_of(e) for e in h.hyperedges), dtype=np.uint64, count=m
        )
        out = kernels.union_pair_masks(masks)
        return Hypergraph(h.n, tuple(_edge_of_mask(int(v)) for v in out))
    masks = [frozenset(e) for e in h.hyperedges]
    seen = set()
    for i, a in enumerate(masks):
        for b in masks[i:]:
            seen.add(a | b)
    return Hypergraph(h.n, tuple(tuple(sorted(s)) for s in seen))


def count_pairs_in_small_hyperedges(h: Hypergraph, k: int) -> int:
    """Number of vertex pairs contained together in some hyperedge of size <= k."""
    if k < 1:
        raise ValueError("k must be >= 1")
    pairs = set()
    for e in h.hyperedges:
        if len(e) <= k:
            pairs.update(itertools.combinations(e, 2))
    return len(pairs)
