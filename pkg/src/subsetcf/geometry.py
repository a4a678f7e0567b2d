"""Geometric hypergraph providers and rectangle-ratio machinery.

All arithmetic is exact (integers and Fractions); no floating point.
Point sets live on the n x n grid with pairwise-distinct x and y ranks,
so rectangle boundaries can be taken strictly between coordinates.
"""

from __future__ import annotations

import itertools
import random
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Optional, Sequence

import numpy as np

from . import _pykernels
from ._backend import kernels
from ._errors import DegenerateError
from .hypergraph import Graph, Hypergraph, induced_subhypergraph, delaunay_graph

__all__ = [
    "Disc",
    "PointSet",
    "Rect",
    "DegenerateError",
    "bounding_rect",
    "cover_by_ratio_pair",
    "delaunay_density",
    "disc_generic_points",
    "disc_hypergraph",
    "find_ratio_subrect_with_count",
    "interval_hypergraph",
    "min_points_in_ratio_rect",
    "ratio_class_range",
    "ratio_pair_graph",
    "ratio_pair_graph_subset",
    "rank_normalize",
    "rect_location",
    "rectangle_hypergraph",
    "small_hyperedge_graph",
]


@dataclass(frozen=True)
class PointSet:
    """n grid points whose x and y coordinates are each a permutation of 1..n."""

    points: tuple

    def __post_init__(self) -> None:
        pts = tuple((int(x), int(y)) for x, y in self.points)
        n = len(pts)
        if sorted(p[0] for p in pts) != list(range(1, n + 1)) or sorted(
            p[1] for p in pts
        ) != list(range(1, n + 1)):
            raise ValueError("coordinates must each be a permutation of 1..n")
        object.__setattr__(self, "points", pts)

    @property
    def n(self) -> int:
        return len(self.points)

    def xs(self) -> np.ndarray:
        return np.array([p[0] for p in self.points], dtype=np.int64)

    def ys(self) -> np.ndarray:
        return np.array([p[1] for p in self.points], dtype=np.int64)


def rank_normalize(raw: Sequence[tuple]) -> PointSet:
    """Replace coordinates by their 1-based ranks.

    Ties in one coordinate are broken by the other coordinate, then by the
    input index.  Duplicate points are rejected.  Rectangle and interval
    hyperedge sets are preserved for tie-free inputs.
    """
    pts = [tuple(p) for p in raw]
    if len(set(pts)) != len(pts):
        raise ValueError("duplicate points in input")
    n = len(pts)
    xrank = [0] * n
    yrank = [0] * n
    for r, i in enumerate(
        sorted(range(n), key=lambda i: (pts[i][0], pts[i][1], i)), start=1
    ):
        xrank[i] = r
    for r, i in enumerate(
        sorted(range(n), key=lambda i: (pts[i][1], pts[i][0], i)), start=1
    ):
        yrank[i] = r
    return PointSet(tuple(zip(xrank, yrank)))


def interval_hypergraph(n: int) -> Hypergraph:
    """All contiguous runs of n points on a line."""
    if n < 1:
        raise ValueError("n must be >= 1")
    edges = [
        tuple(range(a, b + 1)) for a in range(n) for b in range(a, n)
    ]
    return Hypergraph(n, edges)


def _masks_to_edges(masks: Iterable[int]) -> list[tuple]:
    edges = []
    for m in masks:
        m = int(m)
        e = []
        v = 0
        while m:
            if m & 1:
                e.append(v)
            m >>= 1
            v += 1
        edges.append(tuple(e))
    return edges


def rectangle_hypergraph(p: PointSet) -> Hypergraph:
    """All distinct nonempty subsets cut by axis-parallel rectangles.

    Canonical enumeration over x-windows and contiguous y-runs; every real
    rectangle cut arises this way because boundaries can always be slid to
    lie strictly between coordinates.
    """
    n = p.n
    if n == 0:
        return Hypergraph(0)
    if n <= 64:
        masks = kernels.rect_subset_masks(
            [pt[0] for pt in p.points], [pt[1] for pt in p.points]
        )
        return Hypergraph(n, _masks_to_edges(masks))
    by_x = sorted(range(n), key=lambda i: p.points[i][0])
    out = set()
    for a in range(n):
        window: list[tuple[int, int]] = []
        for b in range(a, n):
            i = by_x[b]
            window.append((p.points[i][1], i))
            window.sort()
            for lo in range(len(window)):
                for hi in range(lo, len(window)):
                    out.add(frozenset(w[1] for w in window[lo : hi + 1]))
    return Hypergraph(n, [tuple(sorted(s)) for s in out])


# ---------------------------------------------------------------------------
# discs


@dataclass(frozen=True)
class Disc:
    """Closed disc with rational centre and squared radius; exact membership."""

    centre: tuple
    r2: Fraction

    def __post_init__(self) -> None:
        cx, cy = self.centre
        object.__setattr__(self, "centre", (Fraction(cx), Fraction(cy)))
        object.__setattr__(self, "r2", Fraction(self.r2))
        if self.r2 <= 0:
            raise ValueError("squared radius must be positive")

    def contains(self, point: tuple) -> bool:
        cx, cy = self.centre
        return (Fraction(point[0]) - cx) ** 2 + (Fraction(point[1]) - cy) ** 2 <= self.r2


_PERTURB_SCALE = 1 << 20


def disc_generic_points(p: PointSet, max_salt: int = 16) -> list[tuple]:
    """Deterministic integer perturbation of a point set into generic position.

    Scales coordinates and adds seeded sub-grid offsets until no three points
    are collinear and no four concyclic (verified exactly during enumeration);
    raises DegenerateError if no salt within the budget works.
    """
    last: Optional[DegenerateError] = None
    for salt in range(max_salt):
        rng = random.Random(salt * 1_000_003 + p.n)
        pts = [
            (
                x * _PERTURB_SCALE + rng.randrange(_PERTURB_SCALE // 2),
                y * _PERTURB_SCALE + rng.randrange(_PERTURB_SCALE // 2),
            )
            for x, y in p.points
        ]
        try:
            _assert_generic(pts)
            return pts
        except DegenerateError as exc:
            last = exc
    raise DegenerateError(f"no generic perturbation found: {last}")


def _orient(a, b, c) -> int:
    return (b[0] - a[0]) * (c[1] - a[1]) - (c[0] - a[0]) * (b[1] - a[1])


def _incircle(a, b, c, d) -> int:
    """Positive when d is inside the circle through ccw a, b, c."""
    adx, ady = a[0] - d[0], a[1] - d[1]
    bdx, bdy = b[0] - d[0], b[1] - d[1]
    cdx, cdy = c[0] - d[0], c[1] - d[1]
    ad2 = adx * adx + ady * ady
    bd2 = bdx * bdx + bdy * bdy
    cd2 = cdx * cdx + cdy * cdy
    return (
        adx * (bdy * cd2 - cdy * bd2)
        - ady * (bdx * cd2 - cdx * bd2)
        + ad2 * (bdx * cdy - cdx * bdy)
    )


def _assert_generic(pts: Sequence[tuple]) -> None:
    n = len(pts)
    for a, b, c in itertools.combinations(range(n), 3):
        if _orient(pts[a], pts[b], pts[c]) == 0:
            raise DegenerateError(f"collinear triple {(a, b, c)}")
    for a, b, c, d in itertools.combinations(range(n), 4):
        if _incircle(pts[a], pts[b], pts[c], pts[d]) == 0:
            raise DegenerateError(f"concyclic quadruple {(a, b, c, d)}")


def _disc_subset_masks(pts: Sequence[tuple]) -> set:
    """All distinct nonempty disc-cut subsets of points in generic position.

    Canonical discs: per point a vanishing disc; per pair the diametral disc
    and both huge-radius half-plane limits; per triple the circumdisc.  Each
    is taken with every boundary inclusion pattern, which generic position
    makes realisable by true discs.
    """
    n = len(pts)
    out = set()
    for i in range(n):
        out.add(1 << i)
    for i, j in itertools.combinations(range(n), 2):
        pi, pj = pts[i], pts[j]
        # diametral disc: compare 4*d(centre,r)^2 with d(i,j)^2
        cx2, cy2 = pi[0] + pj[0], pi[1] + pj[1]
        rr = (pi[0] - pj[0]) ** 2 + (pi[1] - pj[1]) ** 2
        inside = 0
        for r in range(n):
            if r in (i, j):
                continue
            s = (2 * pts[r][0] - cx2) ** 2 + (2 * pts[r][1] - cy2) ** 2 - rr
            if s == 0:
                raise DegenerateError(f"point {r} on diametral circle of {(i, j)}")
            if s < 0:
                inside |= 1 << r
        for boundary in (0, 1 << i, 1 << j, (1 << i) | (1 << j)):
            if inside | boundary:
                out.add(inside | boundary)
        # half-plane limits on both sides of the line through i, j
        pos = neg = 0
        for r in range(n):
            if r in (i, j):
                continue
            o = _orient(pi, pj, pts[r])
            if o == 0:
                raise DegenerateError(f"collinear triple {(i, j, r)}")
            if o > 0:
                pos |= 1 << r
            else:
                neg |= 1 << r
        for side in (pos, neg):
            for boundary in (0, 1 << i, 1 << j, (1 << i) | (1 << j)):
                if side | boundary:
                    out.add(side | boundary)
    for i, j, k in itertools.combinations(range(n), 3):
        a, b, c = pts[i], pts[j], pts[k]
        if _orient(a, b, c) < 0:
            b, c = c, b
        inside = 0
        for r in range(n):
            if r in (i, j, k):
                continue
            s = _incircle(a, b, c, pts[r])
            if s == 0:
                raise DegenerateError(f"concyclic {(i, j, k, r)}")
            if s > 0:
                inside |= 1 << r
        base = [1 << i, 1 << j, 1 << k]
        for bits in range(8):
            boundary = 0
            for pos_bit in range(3):
                if bits >> pos_bit & 1:
                    boundary |= base[pos_bit]
            if inside | boundary:
                out.add(inside | boundary)
    return out


def disc_hypergraph(p: PointSet) -> Hypergraph:
    """All distinct nonempty subsets cut by discs.

    Semantics are those of the deterministic generic perturbation of the
    point set (see disc_generic_points); the input grid points themselves
    are unchanged, so instances stay comparable across range families.
    """
    if p.n == 0:
        return Hypergraph(0)
    if p.n == 1:
        return Hypergraph(1, ((0,),))
    pts = disc_generic_points(p)
    masks = _disc_subset_masks(pts)
    return Hypergraph(p.n, _masks_to_edges(sorted(masks)))


# ---------------------------------------------------------------------------
# rectangles of fixed width-to-height ratio


@dataclass(frozen=True)
class Rect:
    """Closed axis-parallel rectangle with exact rational boundaries.

    Enumeration rectangles keep boundaries on the half-integer grid so they
    never pass through grid points; only bounding rectangles of point
    subsets carry integer boundaries.
    """

    xlo: Fraction
    xhi: Fraction
    ylo: Fraction
    yhi: Fraction

    def __post_init__(self) -> None:
        for f in ("xlo", "xhi", "ylo", "yhi"):
            object.__setattr__(self, f, Fraction(getattr(self, f)))
        if self.xlo > self.xhi or self.ylo > self.yhi:
            raise ValueError("empty rectangle")

    @property
    def width(self) -> Fraction:
        return self.xhi - self.xlo

    @property
    def height(self) -> Fraction:
        return self.yhi - self.ylo

    def contains(self, point: tuple) -> bool:
        x, y = Fraction(point[0]), Fraction(point[1])
        return self.xlo <= x <= self.xhi and self.ylo <= y <= self.yhi

    def contains_rect(self, other: "Rect") -> bool:
        return (
            self.xlo <= other.xlo
            and other.xhi <= self.xhi
            and self.ylo <= other.ylo
            and other.yhi <= self.yhi
        )


def ratio_class_range(n: int) -> range:
    """Ratio exponents used for an n-point instance: -ceil(log2 n)..ceil(log2 n)."""
    if n < 1:
        raise ValueError("n must be >= 1")
    logn = (n - 1).bit_length()
    return range(-logn, logn + 1)


def min_points_in_ratio_rect(p: PointSet, a: int, b: int, expo: int) -> int:
    """Fewest points of the set inside any rectangle of width-to-height
    ratio 2**expo containing points a and b."""
    if a == b:
        raise ValueError("the two points must differ")
    if abs(expo) not in range(0, (p.n - 1).bit_length() + 1):
        raise ValueError(f"ratio exponent {expo} outside the class range")
    prefix = _pykernels.grid_prefix(
        [pt[0] for pt in p.points], [pt[1] for pt in p.points], p.n
    )
    pa, pb = p.points[a], p.points[b]
    return int(
        kernels.min_ratio_points(prefix, p.n, pa[0], pa[1], pb[0], pb[1], expo)
    )


def ratio_pair_graph(p: PointSet, t: int) -> Graph:
    """Graph joining pairs contained in some ratio-class rectangle with at
    most t+1 points of the set."""
    if t < 1:
        raise ValueError("t must be >= 1")
    edges = kernels.ratio_graph_edges(
        [pt[0] for pt in p.points], [pt[1] for pt in p.points], p.n, t
    )
    return Graph(p.n, tuple((int(u), int(v)) for u, v in edges))


def ratio_pair_graph_subset(p: PointSet, alive: Sequence[int], t: int) -> Graph:
    """ratio_pair_graph recomputed on a subset of the points (re-indexed by
    position in ``alive``); the grid and ratio classes stay those of the
    full instance."""
    alive = list(alive)
    edges = kernels.ratio_graph_edges(
        [p.points[i][0] for i in alive], [p.points[i][1] for i in alive], p.n, t
    )
    return Graph(len(alive), tuple((int(u), int(v)) for u, v in edges))


def small_hyperedge_graph(h: Hypergraph, k: int) -> Graph:
    """Graph joining pairs that share some hyperedge of size at most k."""
    if k < 2:
        raise ValueError("k must be >= 2")
    pairs = set()
    for e in h.hyperedges:
        if len(e) <= k:
            pairs.update(itertools.combinations(e, 2))
    return Graph(h.n, tuple(pairs))


def bounding_rect(p: PointSet, subset: Iterable[int]) -> Rect:
    """Minimal axis-parallel rectangle containing the given points; the one
    Rect whose boundaries may coincide with point coordinates."""
    idx = list(subset)
    if not idx:
        raise ValueError("subset must be nonempty")
    xs = [p.points[i][0] for i in idx]
    ys = [p.points[i][1] for i in idx]
    return Rect(min(xs), max(xs), min(ys), max(ys))


def rect_location(rect: Rect, point: tuple) -> str:
    """Location class of a point of the rectangle: interior, one of four
    open edges, or one of four corners.  A degenerate single-point rectangle
    classifies canonically as bottom-left."""
    x, y = Fraction(point[0]), Fraction(point[1])
    if not rect.contains(point):
        raise ValueError("point outside rectangle")
    if rect.xlo == rect.xhi and rect.ylo == rect.yhi:
        return "bottom-left"
    on_left = x == rect.xlo
    on_right = x == rect.xhi
    on_bottom = y == rect.ylo
    on_top = y == rect.yhi
    if on_left and on_bottom:
        return "bottom-left"
    if on_right and on_bottom:
        return "bottom-right"
    if on_left and on_top:
        return "top-left"
    if on_right and on_top:
        return "top-right"
    if on_left:
        return "left"
    if on_right:
        return "right"
    if on_bottom:
        return "bottom"
    if on_top:
        return "top"
    return "interior"


def cover_by_ratio_pair(rect: Rect) -> tuple[int, Rect, Rect]:
    """Two equal-ratio-class rectangles inside the given one whose union
    covers it.  Returns (ratio exponent, first, second)."""
    w, h = rect.width, rect.height
    if w <= 0 or h <= 0:
        raise ValueError("rectangle must have positive width and height")
    if w >= h:
        m = 0
        while h * (1 << (m + 1)) <= w:
            m += 1
        span = h * (1 << m)
        r1 = Rect(rect.xlo, rect.xlo + span, rect.ylo, rect.yhi)
        r2 = Rect(rect.xhi - span, rect.xhi, rect.ylo, rect.yhi)
        return m, r1, r2
    m = 0
    while w * (1 << (m + 1)) <= h:
        m += 1
    span = w * (1 << m)
    r1 = Rect(rect.xlo, rect.xhi, rect.ylo, rect.ylo + span)
    r2 = Rect(rect.xlo, rect.xhi, rect.yhi - span, rect.yhi)
    return -m, r1, r2


def delaunay_density(h: Hypergraph, sample_budget: int = 200, seed: int = 0) -> Fraction:
    """Empirical lower estimate of the hereditary Delaunay edge density:
    max over vertex subsets (all of size <= 6, plus random samples) of
    edges-of-Delaunay over subset size."""
    n = h.n
    best = Fraction(0)
    for size in range(1, min(6, n) + 1):
        for subset in itertools.combinations(range(n), size):
            sub, _ = induced_subhypergraph(h, subset)
            best = max(best, Fraction(len(delaunay_graph(sub).edges), size))
    rng = random.Random(seed)
    for _ in range(sample_budget):
        if n <= 6:
            break
        size = rng.randrange(7, n + 1)
        subset = rng.sample(range(n), size)
        sub, _ = induced_subhypergraph(h, subset)
        best = max(best, Fraction(len(delaunay_graph(sub).edges), size))
    return best


# ---------------------------------------------------------------------------
# exact search for a fixed-ratio sub-rectangle with a prescribed point count


def _fm_feasible(constraints: list) -> bool:
    """Feasibility of strict/non-strict linear constraints in <= 3 variables
    by Fourier-Motzkin elimination over the rationals.

    Each constraint is (coeffs tuple, rhs, strict) meaning coeffs . vars <= rhs
    (or < rhs when strict).
    """
    nvars = len(constraints[0][0]) if constraints else 0
    system = [(tuple(Fraction(c) for c in cs), Fraction(r), s) for cs, r, s in constraints]
    for var in range(nvars - 1, -1, -1):
        lowers, uppers, rest = [], [], []
        for cs, rhs, strict in system:
            c = cs[var]
            red = cs[:var]
            if c > 0:
                uppers.append((tuple(x / c for x in red), rhs / c, strict))
            elif c < 0:
                lowers.append((tuple(x / c for x in red), rhs / c, strict))
            else:
                rest.append((red, rhs, strict))
        for lcs, lrhs, lstrict in lowers:
            # lower: vars' . lcs >= ... after sign flip; combine with uppers
            for ucs, urhs, ustrict in uppers:
                cs = tuple(l - u for l, u in zip(lcs, ucs))
                rest.append((tuple(-c for c in cs), urhs - lrhs, lstrict or ustrict))
        system = rest
    for cs, rhs, strict in system:
        if rhs < 0 or (strict and rhs == 0):
            return False
    return True


def find_ratio_subrect_with_count(
    p: PointSet, outer: Rect, expo: int, target: int
) -> Optional[tuple]:
    """A real rectangle of width-to-height ratio 2**expo inside ``outer``
    containing exactly ``target`` points of the set, if one exists.

    Returns the witness content as a sorted vertex tuple, or None.  Search
    is exact: for each candidate content, feasibility of the placement is
    decided by rational linear programming over (xlo, ylo, height), with a
    side assignment chosen per excluded point.
    """
    ratio = Fraction(1 << expo) if expo >= 0 else Fraction(1, 1 << (-expo))
    pool = [i for i in range(p.n) if outer.contains(p.points[i])]
    if target < 1 or target > len(pool):
        return None

    def feasible(content: list, excluded: list) -> bool:
        cx = [p.points[i][0] for i in content]
        cy = [p.points[i][1] for i in content]
        # vars (xlo, ylo, h); width = ratio * h
        base = [
            ((1, 0, 0), Fraction(min(cx)), False),          # xlo <= min x
            ((-1, 0, -ratio), Fraction(-max(cx)), False),   # xlo + w >= max x
            ((0, 1, 0), Fraction(min(cy)), False),
            ((0, -1, -1), Fraction(-max(cy)), False),
            ((-1, 0, 0), -outer.xlo, False),                # xlo >= outer
            ((1, 0, ratio), outer.xhi, False),
            ((0, -1, 0), -outer.ylo, False),
            ((0, 1, 1), outer.yhi, False),
            ((0, 0, -1), Fraction(0), True),                # h > 0
        ]

        def rec(k: int, acc: list) -> bool:
            if not _fm_feasible(acc):
                return False
            if k == len(excluded):
                return True
            qx, qy = p.points[excluded[k]]
            options = [
                ((-1, 0, 0), Fraction(-qx), True),          # qx < xlo
                ((1, 0, ratio), Fraction(qx), True),        # xlo + w < qx
                ((0, -1, 0), Fraction(-qy), True),
                ((0, 1, 1), Fraction(qy), True),
            ]
            return any(rec(k + 1, acc + [opt]) for opt in options)

        return rec(0, base)

    for content in itertools.combinations(pool, target):
        excluded = [i for i in pool if i not in content]
        if feasible(list(content), excluded):
            return tuple(content)
    return None
