import itertools
import random

import pytest

from oracles import (
    brute_subset_valid,
    brute_validate,
    random_colouring,
    random_hypergraph,
)
from subsetcf import (
    Hypergraph,
    SubsetColouring,
    VertexColouring,
    interval_hypergraph,
    validate_colouring,
    validate_subset_cf,
)

TRIPLE = Hypergraph(3, [(0, 1, 2)])


def test_all_distinct_is_cf():
    h = random_hypergraph(random.Random(5), 6, 12)
    c = VertexColouring(tuple(range(1, 7)))
    assert validate_colouring(h, c, "cf").ok


def test_um_vs_2um_example():
    c = VertexColouring((1, 1, 2))
    assert validate_colouring(TRIPLE, c, "um").ok
    v = validate_colouring(TRIPLE, c, "t-um", 2)
    assert not v.ok and v.counterexample == (0, 1, 2)


def test_midpoint_colouring_is_um_on_28_intervals():
    h = interval_hypergraph(7)
    assert len(h) == 28
    assert validate_colouring(h, VertexColouring((1, 2, 1, 3, 1, 2, 1)), "um").ok


def test_parametric_notion_requires_t():
    with pytest.raises(ValueError):
        validate_colouring(TRIPLE, VertexColouring((1, 2, 3)), "t-um")


def test_counterexample_is_first_in_canonical_order():
    h = Hypergraph(4, [(0, 1), (2, 3), (0, 2)])
    c = VertexColouring((1, 1, 1, 1))
    v = validate_colouring(h, c, "proper")
    assert v.counterexample == (0, 1)


@pytest.mark.parametrize("notion", ["proper", "cf", "um", "t-colourful", "t-strong-cf", "t-um"])
def test_matches_brute_oracle(notion, rng):
    for _ in range(60):
        n = rng.randint(1, 7)
        h = random_hypergraph(rng, n, rng.randint(0, 10))
        c = random_colouring(rng, n, rng.randint(1, 4))
        t = rng.randint(1, 3)
        got = validate_colouring(h, c, notion, t)
        want = brute_validate(h, c.colours, notion, t)
        assert got.ok == (want is None)
        if want is not None:
            assert got.counterexample == want


def test_cf_equals_strong1_and_um_equals_tum1(rng):
    for _ in range(40):
        n = rng.randint(1, 7)
        h = random_hypergraph(rng, n, rng.randint(0, 9))
        c = random_colouring(rng, n, 4)
        assert validate_colouring(h, c, "cf").ok == validate_colouring(h, c, "t-strong-cf", 1).ok
        assert validate_colouring(h, c, "um").ok == validate_colouring(h, c, "t-um", 1).ok


def test_hierarchy_implications(rng):
    hits = 0
    for _ in range(300):
        n = rng.randint(1, 7)
        h = random_hypergraph(rng, n, rng.randint(0, 8))
        c = random_colouring(rng, n, rng.randint(1, n + 2))
        t = rng.randint(1, 3)
        if validate_colouring(h, c, "t-um", t).ok:
            hits += 1
            assert validate_colouring(h, c, "t-strong-cf", t).ok
        if validate_colouring(h, c, "t-strong-cf", t).ok:
            assert validate_colouring(h, c, "t-colourful", t).ok
    assert hits > 5  # the premise must actually fire


def test_subset_cf_examples():
    k4 = Hypergraph(4, list(itertools.combinations(range(4), 2)))
    const = SubsetColouring.from_function(2, 4, lambda s: 1)
    assert validate_subset_cf(k4, const).ok  # every hyperedge has size t

    const3 = SubsetColouring.from_function(2, 3, lambda s: 1)
    v = validate_subset_cf(TRIPLE, const3)
    assert not v.ok and v.counterexample == (0, 1, 2)

    two = SubsetColouring.from_mapping(
        2, 3, {(0, 1): "a", (0, 2): "a", (1, 2): "b"}
    )
    assert validate_subset_cf(TRIPLE, two).ok


@pytest.mark.parametrize("t", [1, 2, 3, 4])
def test_subset_validator_matches_brute(t, rng):
    for _ in range(40):
        n = rng.randint(t, 7)
        h = random_hypergraph(rng, n, rng.randint(0, 9))
        sigma = SubsetColouring.from_function(
            t, n, lambda s: rng.randint(1, 3)
        )
        got = validate_subset_cf(h, sigma)
        want = brute_subset_valid(h, sigma)
        assert got.ok == (want is None)
        if want is not None:
            assert got.counterexample == want


def test_subset_validator_skips_small_edges():
    h = Hypergraph(4, [(0, 1), (1, 2, 3)])
    sigma = SubsetColouring.from_function(3, 4, lambda s: "x")
    assert validate_subset_cf(h, sigma).ok
