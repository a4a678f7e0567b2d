import itertools
import random

import pytest

from oracles import brute_min_colours, random_hypergraph
from subsetcf import (
    Hypergraph,
    SizeLimitError,
    exact_min_colours,
    exact_min_subset_tokens,
    interval_hypergraph,
    star_hypergraph,
    validate_colouring,
    validate_subset_cf,
)


def complete_graph(n):
    return Hypergraph(n, list(itertools.combinations(range(n), 2)))


def test_interval3_cf_is_2():
    value, witness = exact_min_colours(interval_hypergraph(3), "cf")
    assert value == 2
    assert validate_colouring(interval_hypergraph(3), witness, "cf").ok


def test_complete_graph_cf_needs_n():
    for n in range(2, 6):
        assert exact_min_colours(complete_graph(n), "cf")[0] == n


def test_star_cf_is_2():
    assert exact_min_colours(star_hypergraph(6, 2), "cf")[0] == 2


def test_witness_always_validates(rng):
    for notion in ("proper", "cf", "um"):
        for _ in range(10):
            n = rng.randint(1, 6)
            h = random_hypergraph(rng, n, rng.randint(0, 8))
            value, witness = exact_min_colours(h, notion)
            assert validate_colouring(h, witness, notion).ok
            assert witness.num_colours() == value


@pytest.mark.parametrize("notion,t", [("cf", None), ("um", None), ("t-colourful", 2)])
def test_agrees_with_enumeration_oracle(notion, t, rng):
    for _ in range(12):
        n = rng.randint(1, 5)
        h = random_hypergraph(rng, n, rng.randint(0, 7))
        assert exact_min_colours(h, notion, t)[0] == brute_min_colours(
            h, notion, t
        )


def test_vertex_solver_size_limit():
    with pytest.raises(SizeLimitError):
        exact_min_colours(interval_hypergraph(13), "cf")


def test_subset_solver_triple():
    value, witness = exact_min_subset_tokens(Hypergraph(3, [(0, 1, 2)]), 2)
    assert value == 2
    assert validate_subset_cf(Hypergraph(3, [(0, 1, 2)]), witness).ok


def test_subset_solver_vacuous_when_edges_small():
    h = Hypergraph(5, [(0, 1), (2, 3)])
    value, witness = exact_min_subset_tokens(h, 2)
    assert value == 1
    assert validate_subset_cf(h, witness).ok


def test_subset_solver_size_limit():
    with pytest.raises(SizeLimitError):
        exact_min_subset_tokens(interval_hypergraph(8), 2)


def test_subset_solver_interval_values_and_recurrence():
    table = {}
    for n in range(3, 8):
        value, witness = exact_min_subset_tokens(interval_hypergraph(n), 2)
        assert validate_subset_cf(interval_hypergraph(n), witness).ok
        table[n] = value
    assert table[3] == 2
    assert all(table[n] <= table[n + 1] for n in range(3, 7))
    assert table[7] >= 1 + table[3]


def test_subset_solver_matches_exhaustive_small(rng):
    # exhaustive token-assignment oracle on tiny instances
    for _ in range(6):
        n = rng.randint(2, 4)
        h = random_hypergraph(rng, n, rng.randint(1, 6))
        t = rng.randint(1, 2)
        got = exact_min_subset_tokens(h, t)[0]
        subsets = list(itertools.combinations(range(n), t))
        best = None
        for assign in itertools.product(range(1, len(subsets) + 1), repeat=len(subsets)):
            from subsetcf import SubsetColouring

            sigma = SubsetColouring.from_mapping(t, n, dict(zip(subsets, assign)))
            if validate_subset_cf(h, sigma).ok:
                used = len(set(assign))
                best = used if best is None else min(best, used)
        assert got == best
