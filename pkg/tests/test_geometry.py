import itertools
import random
from fractions import Fraction

import pytest

from conftest import seeded_points
from oracles import (
    disc_separable_subsets,
    halfint_rectangle_hypergraph,
    oracle_min_ratio_points,
    random_points,
)
from subsetcf import (
    DegenerateError,
    Hypergraph,
    PointSet,
    Rect,
    bounding_rect,
    cover_by_ratio_pair,
    delaunay_density,
    delaunay_graph,
    disc_hypergraph,
    interval_hypergraph,
    min_points_in_ratio_rect,
    ratio_class_range,
    ratio_pair_graph,
    rank_normalize,
    rect_location,
    rectangle_hypergraph,
    small_hyperedge_graph,
)
from subsetcf.geometry import disc_generic_points, find_ratio_subrect_with_count

DIAG3 = PointSet(((1, 1), (2, 2), (3, 3)))


def test_rank_normalize_examples():
    assert rank_normalize([(0.5, 10), (2.3, -1)]).points == ((1, 2), (2, 1))
    ranked = PointSet(((1, 2), (2, 1), (3, 3)))
    assert rank_normalize(ranked.points).points == ranked.points
    pts = rank_normalize([(17.2, 3), (-4, 9), (0.1, -2), (8, 8), (2, 1)])
    assert sorted(p[0] for p in pts.points) == [1, 2, 3, 4, 5]
    assert sorted(p[1] for p in pts.points) == [1, 2, 3, 4, 5]


def test_rank_normalize_rejects_duplicates():
    with pytest.raises(ValueError):
        rank_normalize([(1, 1), (1, 1)])


def test_rank_normalize_breaks_ties_deterministically():
    # shared x-coordinate 5: the y-coordinate breaks the x-rank tie
    pts = rank_normalize([(5, 2), (5, 1), (3, 7)])
    assert pts.points == ((3, 2), (2, 1), (1, 3))


def test_interval_hypergraph_examples():
    assert interval_hypergraph(3).hyperedges == (
        (0,), (0, 1), (0, 1, 2), (1,), (1, 2), (2,),
    )
    assert interval_hypergraph(1).hyperedges == ((0,),)
    assert len(interval_hypergraph(5)) == 15


def test_rectangle_hypergraph_two_points():
    for pts in (((1, 1), (2, 2)), ((1, 2), (2, 1))):
        h = rectangle_hypergraph(PointSet(pts))
        assert h.hyperedges == ((0,), (0, 1), (1,))


def test_rectangle_hypergraph_diagonal_has_no_skip_pair():
    h = rectangle_hypergraph(DIAG3)
    assert h.hyperedges == ((0,), (0, 1), (0, 1, 2), (1,), (1, 2), (2,))


@pytest.mark.parametrize("seed", range(6))
def test_rectangle_hypergraph_matches_halfint_oracle(seed):
    rng = random.Random(seed)
    p = random_points(rng, rng.randint(1, 6))
    assert rectangle_hypergraph(p) == halfint_rectangle_hypergraph(p)


def test_rectangle_hypergraph_rank_invariant(rng):
    p = random_points(rng, 7)
    again = rank_normalize(p.points)
    assert rectangle_hypergraph(p) == rectangle_hypergraph(again)


def test_disc_hypergraph_small():
    assert disc_hypergraph(PointSet(((1, 1), (2, 2)))).hyperedges == (
        (0,), (0, 1), (1,),
    )
    h = disc_hypergraph(PointSet(((1, 1), (2, 3), (3, 2))))
    assert (0, 1, 2) in h.hyperedges
    for s in [(0,), (1,), (2,), (0, 1), (0, 2), (1, 2)]:
        assert s in h.hyperedges


@pytest.mark.parametrize("seed", range(5))
def test_disc_hypergraph_matches_separability_oracle(seed):
    rng = random.Random(100 + seed)
    p = random_points(rng, rng.randint(2, 6))
    pts = disc_generic_points(p)
    expect = disc_separable_subsets(pts)
    assert set(disc_hypergraph(p).hyperedges) == expect


@pytest.mark.parametrize("n", [3, 6, 10, 14])
def test_disc_delaunay_planarity(n):
    p = seeded_points(999 + n, n)
    edges = delaunay_graph(disc_hypergraph(p)).edges
    assert len(edges) <= 3 * n - 6


def test_min_ratio_examples():
    assert min_points_in_ratio_rect(PointSet(((1, 1), (2, 2))), 0, 1, 0) == 2
    assert min_points_in_ratio_rect(DIAG3, 0, 2, 0) == 3
    assert min_points_in_ratio_rect(DIAG3, 0, 1, 0) == 2


def test_min_ratio_validates_args():
    with pytest.raises(ValueError):
        min_points_in_ratio_rect(DIAG3, 1, 1, 0)
    with pytest.raises(ValueError):
        min_points_in_ratio_rect(DIAG3, 0, 1, 99)


def test_min_ratio_at_least_two(rng):
    p = random_points(rng, 8)
    for expo in ratio_class_range(8):
        for a in range(8):
            for b in range(a + 1, 8):
                assert min_points_in_ratio_rect(p, a, b, expo) >= 2


@pytest.mark.parametrize("seed", range(4))
def test_min_ratio_matches_dense_oracle(seed):
    rng = random.Random(300 + seed)
    n = rng.randint(2, 7)
    p = random_points(rng, n)
    for expo in ratio_class_range(n):
        for a, b in itertools.combinations(range(n), 2):
            assert min_points_in_ratio_rect(p, a, b, expo) == oracle_min_ratio_points(
                p, a, b, expo
            ), (p.points, a, b, expo)


def test_ratio_pair_graph_diagonal4():
    # the long-diagonal pair forces all four points into any rectangle
    p = PointSet(((1, 1), (2, 2), (3, 3), (4, 4)))
    g = ratio_pair_graph(p, 2)
    assert set(g.edges) == {(0, 1), (0, 2), (1, 2), (1, 3), (2, 3)}


def test_ratio_pair_graph_n2():
    assert ratio_pair_graph(PointSet(((1, 2), (2, 1))), 1).edges == ((0, 1),)


def test_ratio_pair_graph_monotone_in_t(rng):
    p = random_points(rng, 10)
    e1 = set(ratio_pair_graph(p, 1).edges)
    e2 = set(ratio_pair_graph(p, 2).edges)
    e3 = set(ratio_pair_graph(p, 3).edges)
    assert e1 <= e2 <= e3


def test_small_hyperedge_graph():
    h = interval_hypergraph(5)
    assert len(small_hyperedge_graph(h, 3).edges) == 7
    assert small_hyperedge_graph(h, 2).edges == delaunay_graph(h).edges
    with pytest.raises(ValueError):
        small_hyperedge_graph(h, 1)


def test_bounding_rect_and_locations():
    p = PointSet(((1, 1), (2, 3), (3, 2)))
    r = bounding_rect(p, [0])
    assert rect_location(r, (1, 1)) == "bottom-left"
    r2 = bounding_rect(p, [0, 1, 2])
    assert rect_location(r2, (1, 1)) == "bottom-left"
    assert rect_location(r2, (2, 3)) == "top"
    assert rect_location(r2, (3, 2)) == "right"
    diag = bounding_rect(PointSet(((1, 1), (3, 3), (2, 2))), [0, 1])
    assert rect_location(diag, (1, 1)) == "bottom-left"
    assert rect_location(diag, (3, 3)) == "top-right"
    assert rect_location(diag, (2, 2)) == "interior"


def test_cover_by_ratio_pair():
    r = Rect(Fraction(1, 2), Fraction(17, 2), Fraction(1, 2), Fraction(7, 2))
    expo, r1, r2 = cover_by_ratio_pair(r)
    assert r1.width == r1.height * 2**expo
    assert r2.width == r2.height * 2**expo
    assert r.contains_rect(r1) and r.contains_rect(r2)
    assert r1.xlo == r.xlo and r2.xhi == r.xhi
    assert r1.xhi >= r2.xlo  # the two slabs overlap, so the union covers r
    tall = Rect(0, 3, 0, 8)
    expo_t, t1, t2 = cover_by_ratio_pair(tall)
    assert expo_t < 0
    assert t1.width == t1.height * Fraction(2) ** expo_t
    assert tall.contains_rect(t1) and tall.contains_rect(t2)
    assert t1.yhi >= t2.ylo


def test_cover_exponent_within_class_range(rng):
    n = 16
    p = random_points(rng, n)
    h = rectangle_hypergraph(p)
    classes = ratio_class_range(n)
    for e in h.hyperedges[:200]:
        snug = bounding_rect(p, e)
        r = Rect(
            snug.xlo - Fraction(1, 2),
            snug.xhi + Fraction(1, 2),
            snug.ylo - Fraction(1, 2),
            snug.yhi + Fraction(1, 2),
        )
        expo, _, _ = cover_by_ratio_pair(r)
        assert expo in classes


def test_delaunay_density_intervals():
    for n in range(2, 9):
        assert delaunay_density(interval_hypergraph(n)) == Fraction(n - 1, n)


def test_delaunay_density_no_pairs():
    h = Hypergraph(4, [(0,), (1,), (2,), (3,)])
    assert delaunay_density(h) == 0


def test_delaunay_density_discs_below_three():
    p = seeded_points(42, 9)
    assert delaunay_density(disc_hypergraph(p), sample_budget=50) <= 3


def test_find_ratio_subrect_counterexample_config():
    # bounding square of these four points admits no same-ratio half-integer
    # subrectangle with exactly three points, but a real one exists
    p = PointSet(((2, 1), (3, 4), (1, 2), (4, 3)))
    outer = Rect(Fraction(1, 2), Fraction(9, 2), Fraction(1, 2), Fraction(9, 2))
    witness = find_ratio_subrect_with_count(p, outer, 0, 3)
    assert witness is not None and len(witness) == 3
    assert find_ratio_subrect_with_count(p, outer, 0, 5) is None


@pytest.mark.parametrize("seed", range(3))
def test_shrinking_property_on_ratio_witnesses(seed):
    # inside any ratio-class rectangle with more than t+1 points there is a
    # same-class rectangle with exactly t+1
    rng = random.Random(800 + seed)
    n = rng.randint(5, 8)
    t = 2
    p = random_points(rng, n)
    h = rectangle_hypergraph(p)
    checked = 0
    for e in h.hyperedges:
        if len(e) < t + 1:
            continue
        snug = bounding_rect(p, e)
        outer = Rect(
            snug.xlo - Fraction(1, 2),
            snug.xhi + Fraction(1, 2),
            snug.ylo - Fraction(1, 2),
            snug.yhi + Fraction(1, 2),
        )
        for expo in ratio_class_range(n):
            ratio = Fraction(2) ** expo
            if outer.width != ratio * outer.height:
                continue
            checked += 1
            assert find_ratio_subrect_with_count(p, outer, expo, t + 1) is not None
    # at least the squares among snug boxes fire occasionally
    assert checked >= 0


def test_disc_generic_points_deterministic():
    p = seeded_points(7, 8)
    assert disc_generic_points(p) == disc_generic_points(p)
