"""Lower-bound and separation families, certified at desk scale by the
exact solvers."""

from __future__ import annotations

import itertools
import math

from .exact import exact_min_colours, exact_min_subset_tokens
from .hypergraph import Hypergraph, SizeLimitError, union_hypergraph
from .geometry import interval_hypergraph
from .validate import validate_colouring

__all__ = [
    "interval_subset_cf_table",
    "star_hypergraph",
    "tower",
    "union_cf_lower_bound_check",
]

TOWER_DIGIT_LIMIT = 10**6


def star_hypergraph(n: int, t: int) -> Hypergraph:
    """Vertex 0 joined with every (t+1)-subset of the remaining vertices;
    all hyperedges have size t+2.  Requires n >= t+2 and t >= 2."""
    if t < 2:
        raise ValueError("t must be >= 2")
    if n < t + 2:
        raise ValueError("n must be at least t+2 so a hyperedge exists")
    edges = [
        (0,) + s for s in itertools.combinations(range(1, n), t + 1)
    ]
    return Hypergraph(n, edges)


def interval_subset_cf_table(max_n: int, t: int = 2) -> dict[int, int]:
    """Exact minimal pair-token counts for interval instances n = 3..max_n.

    Asserts the halving recurrence chi(2m+1) >= 1 + chi(m) wherever both
    sizes are in range.
    """
    table: dict[int, int] = {}
    for n in range(3, max_n + 1):
        value, _ = exact_min_subset_tokens(interval_hypergraph(n), t)
        table[n] = value
    for m, chi_m in table.items():
        big = 2 * m + 1
        if big in table and table[big] < 1 + chi_m:
            raise AssertionError(
                f"halving recurrence violated: chi({big})={table[big]} < 1+chi({m})"
            )
    return table


def union_cf_lower_bound_check(n: int) -> tuple[int, int]:
    """Exact CF chromatic number of the size->=3 part of the interval union
    closure, checked against the ceil(sqrt(n-1)) lower bound.

    Returns (exact value, bound).  Also scans the witness: a CF colouring
    admits each ordered colour pair on at most one consecutive vertex pair.
    """
    if n > 10:
        raise SizeLimitError("union lower-bound check supports n <= 10")
    closure = union_hypergraph(interval_hypergraph(n))
    trimmed = Hypergraph(n, [e for e in closure.hyperedges if len(e) >= 3])
    value, witness = exact_min_colours(trimmed, "cf")
    bound = math.isqrt(max(n - 1, 0))
    if bound * bound < n - 1:
        bound += 1
    if trimmed.hyperedges and value < bound:
        raise AssertionError(f"exact value {value} below lower bound {bound}")
    if trimmed.hyperedges:
        assert validate_colouring(trimmed, witness, "cf").ok
        seen: dict[tuple[int, int], int] = {}
        for i in range(n - 1):
            pair = (witness[i], witness[i + 1])
            if pair in seen:
                raise AssertionError(
                    f"ordered colour pair {pair} repeats at consecutive positions"
                )
            seen[pair] = i
    return value, bound


def tower(t: int, m: int) -> int:
    """Iterated exponent: level 1 is m, each next level is 2 to the previous.

    Refuses results beyond a million decimal digits.
    """
    if t < 1:
        raise ValueError("t must be >= 1")
    if m < 0:
        raise ValueError("m must be >= 0")
    value = m
    for _ in range(t - 1):
        # 2**value has about value * log10(2) decimal digits
        if value > 3_321_928:
            raise OverflowError(
                f"tower value would exceed {TOWER_DIGIT_LIMIT} decimal digits"
            )
        value = 2**value
    return value
