"""Pure-Python reference kernels.

The compiled extension (``_kernels``) mirrors every function here with the
same signature and semantics; backend equivalence is asserted in the test
suite.  Keep this module dependency-light: numpy only.

Notion codes for validate_vertex:
    0 proper, 1 t-colourful, 2 t-strong-CF, 3 t-unique-maximum.
CF and UM are strong-CF / unique-maximum at t=1.
"""

from __future__ import annotations

import itertools
from math import comb

import numpy as np

NOTION_PROPER = 0
NOTION_COLOURFUL = 1
NOTION_STRONG = 2
NOTION_TUM = 3


def _edge_ok(cols: list, notion: int, t: int) -> bool:
    m = len(cols)
    if notion == NOTION_PROPER:
        return m < 2 or len(set(cols)) >= 2
    need = min(m, t)
    if notion == NOTION_COLOURFUL:
        return len(set(cols)) >= need
    if notion == NOTION_STRONG:
        uniq = 0
        for c in set(cols):
            if cols.count(c) == 1:
                uniq += 1
        return uniq >= need
    if notion == NOTION_TUM:
        desc = sorted(cols, reverse=True)
        for j in range(need):
            if j + 1 < m and desc[j] == desc[j + 1]:
                return False
        return True
    raise ValueError(f"unknown notion code {notion}")


def validate_vertex(colours, indptr, flat, notion, t):
    """Index of the first hyperedge violating the notion, or -1."""
    colours = np.asarray(colours)
    for e in range(len(indptr) - 1):
        cols = [int(colours[flat[j]]) for j in range(indptr[e], indptr[e + 1])]
        if not _edge_ok(cols, notion, t):
            return e
    return -1


def validate_subset(t, n, ids, indptr, flat):
    """First hyperedge with |h| > t lacking a uniquely-token'd t-subset, or -1.

    ``ids`` assigns a token id to every t-subset, indexed by colex rank.
    """
    ids = np.asarray(ids)
    for e in range(len(indptr) - 1):
        verts = [int(flat[j]) for j in range(indptr[e], indptr[e + 1])]
        if len(verts) <= t:
            continue
        counts: dict[int, int] = {}
        for sub in itertools.combinations(verts, t):
            r = 0
            for pos, v in enumerate(sub, start=1):
                r += comb(v, pos)
            tid = int(ids[r])
            counts[tid] = counts.get(tid, 0) + 1
        if not any(c == 1 for c in counts.values()):
            return e
    return -1


def union_pair_masks(masks):
    """Distinct bitwise ORs over all pairs (including self-pairs)."""
    masks = np.asarray(masks, dtype=np.uint64)
    m = len(masks)
    if m == 0:
        return masks
    parts = [np.bitwise_or(masks[i:], masks[i]) for i in range(m)]
    return np.unique(np.concatenate(parts))


def rect_subset_masks(xs, ys):
    """Distinct nonempty subsets cut by axis-parallel rectangles, as bitmasks.

    Coordinates must be permutations of 1..n with n <= 64.  A rectangle cut
    is an x-window intersected with a y-window, i.e. a contiguous y-run of
    the points inside an x-window.
    """
    n = len(xs)
    if n > 64:
        raise ValueError("mask enumeration supports n <= 64")
    by_x = sorted(range(n), key=lambda p: xs[p])
    out = set()
    for a in range(n):
        window: list[tuple[int, int]] = []  # (y, point) sorted by y
        for b in range(a, n):
            p = by_x[b]
            yp = ys[p]
            lo, hi = 0, len(window)
            while lo < hi:
                mid = (lo + hi) // 2
                if window[mid][0] < yp:
                    lo = mid + 1
                else:
                    hi = mid
            window.insert(lo, (yp, p))
            for i in range(len(window)):
                acc = 0
                for j in range(i, len(window)):
                    acc |= 1 << window[j][1]
                    out.add(acc)
    return np.array(sorted(out), dtype=np.uint64)


def grid_prefix(xs, ys, ngrid):
    """2-D cumulative point counts; entry [a, b] counts x <= a and y <= b."""
    g = np.zeros((ngrid + 1, ngrid + 1), dtype=np.int32)
    for x, y in zip(xs, ys):
        g[x, y] += 1
    return np.cumsum(np.cumsum(g, axis=0), axis=1)


def _rect_count(prefix, x1, x2, y1, y2, ngrid):
    x1 = max(x1, 1)
    y1 = max(y1, 1)
    x2 = min(x2, ngrid)
    y2 = min(y2, ngrid)
    if x1 > x2 or y1 > y2:
        return 0
    return int(
        prefix[x2, y2] - prefix[x1 - 1, y2] - prefix[x2, y1 - 1] + prefix[x1 - 1, y1 - 1]
    )


def _slide_windows(s, vmin, vmax, ngrid):
    """Distinct clamped cover-windows of integer size s containing [vmin, vmax]."""
    out = set()
    lo = max(1, vmax - s + 1)
    hi = min(vmin, ngrid - s + 1)
    for a in range(lo, hi + 1):
        out.add((a, a + s - 1))
    for b in range(vmax, min(ngrid, s) + 1):
        out.add((1, b))
    for a in range(max(1, ngrid - s + 1), vmin + 1):
        out.add((a, ngrid))
    if s >= ngrid:
        out.add((1, ngrid))
    return out


def min_ratio_points(prefix, ngrid, xp, yp, xq, yq, expo):
    """Fewest points inside any rectangle of width/height ratio 2**expo
    containing both given points.

    The minimum is attained at the minimal scale that fits both points;
    windows slide along the slack axis over O(n) clamped placements.
    """
    if expo < 0:
        return min_ratio_points(prefix.T, ngrid, yp, xp, yq, xq, -expo)
    scale = 1 << expo
    xmin, xmax = (xp, xq) if xp <= xq else (xq, xp)
    ymin, ymax = (yp, yq) if yp <= yq else (yq, yp)
    dx = xmax - xmin
    dy = ymax - ymin
    best = None
    if dx >= scale * dy:
        # x-tight: columns pinned to [xmin, xmax], rows slide (height dx/scale)
        hfloor = dx // scale
        for s in {hfloor, hfloor + 1}:
            if s < dy + 1:
                continue
            for (a, b) in _slide_windows(s, ymin, ymax, ngrid):
                c = _rect_count(prefix, xmin, xmax, a, b, ngrid)
                if best is None or c < best:
                    best = c
    else:
        # y-tight: rows pinned, columns slide (width scale*dy, an integer)
        w = scale * dy
        for s in {w, w + 1}:
            if s < dx + 1:
                continue
            for (a, b) in _slide_windows(s, xmin, xmax, ngrid):
                c = _rect_count(prefix, a, b, ymin, ymax, ngrid)
                if best is None or c < best:
                    best = c
    return best


def ratio_graph_edges(xs, ys, ngrid, t):
    """Pairs contained in some fixed-ratio rectangle with at most t+1 points.

    Ratio exponents range over -ceil(log2 ngrid)..ceil(log2 ngrid); classes
    are scanned by increasing |exponent| with early exit per pair.
    """
    n = len(xs)
    prefix = grid_prefix(xs, ys, ngrid)
    logn = (ngrid - 1).bit_length()
    expos = [0]
    for a in range(1, logn + 1):
        expos.extend((a, -a))
    edges = []
    for p in range(n):
        for q in range(p + 1, n):
            for expo in expos:
                if min_ratio_points(prefix, ngrid, xs[p], ys[p], xs[q], ys[q], expo) <= t + 1:
                    edges.append((p, q))
                    break
    return np.array(edges, dtype=np.int32).reshape(-1, 2)


def colourful_greedy(n, indptr, flat, k):
    """Colour so hyperedges get min(|h|, k) pairwise-distinct colours.

    Repeatedly removes a minimum-degree vertex of the graph joining pairs
    that share a hyperedge currently of size <= k (recomputed as vertices
    leave), then colours in reverse removal order avoiding the recorded
    neighbours.  Uses at most max-degree-at-removal + 1 colours.
    """
    m = len(indptr) - 1
    members = [
        [int(flat[j]) for j in range(indptr[e], indptr[e + 1])] for e in range(m)
    ]
    incident: list[list[int]] = [[] for _ in range(n)]
    for e in range(m):
        for v in members[e]:
            incident[v].append(e)
    size = [len(mem) for mem in members]
    alive = [True] * n
    cnt = np.zeros((n, n), dtype=np.int32)
    deg = [0] * n

    def bump(u, v, d):
        old = cnt[u, v]
        cnt[u, v] = cnt[v, u] = old + d
        if old == 0 and d > 0:
            deg[u] += 1
            deg[v] += 1
        elif old + d == 0 and d < 0:
            deg[u] -= 1
            deg[v] -= 1

    for e in range(m):
        if size[e] <= k:
            mem = members[e]
            for i in range(len(mem)):
                for j in range(i + 1, len(mem)):
                    bump(mem[i], mem[j], 1)

    order = []
    removal_nbrs: list[list[int]] = [[] for _ in range(n)]
    for _ in range(n):
        u = -1
        for v in range(n):
            if alive[v] and (u < 0 or deg[v] < deg[u]):
                u = v
        order.append(u)
        removal_nbrs[u] = [
            v for v in range(n) if alive[v] and v != u and cnt[u, v] > 0
        ]
        for e in incident[u]:
            if size[e] > k + 1:
                size[e] -= 1
                continue
            live = [v for v in members[e] if alive[v] and v != u]
            if size[e] <= k:
                for v in live:
                    bump(u, v, -1)
            size[e] -= 1
            if size[e] == k:
                for i in range(len(live)):
                    for j in range(i + 1, len(live)):
                        bump(live[i], live[j], 1)
        alive[u] = False

    colours = np.zeros(n, dtype=np.int32)
    for u in reversed(order):
        used = {int(colours[v]) for v in removal_nbrs[u] if colours[v] > 0}
        c = 1
        while c in used:
            c += 1
        colours[u] = c
    return colours
