# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled kernels; semantics mirror _pykernels exactly (asserted in tests)."""

import numpy as np

cimport numpy as cnp
from libc.stdlib cimport free, malloc, qsort
from libc.string cimport memset

cnp.import_array()

NOTION_PROPER = 0
NOTION_COLOURFUL = 1
NOTION_STRONG = 2
NOTION_TUM = 3


cdef int _cmp_i64(const void* a, const void* b) noexcept nogil:
    cdef long long x = (<const long long*> a)[0]
    cdef long long y = (<const long long*> b)[0]
    if x < y:
        return -1
    if x > y:
        return 1
    return 0


def validate_vertex(colours, indptr, flat, int notion, int t):
    cdef cnp.ndarray[cnp.int64_t, ndim=1] cols = np.ascontiguousarray(colours, dtype=np.int64)
    cdef cnp.ndarray[cnp.int64_t, ndim=1] ip = np.ascontiguousarray(indptr, dtype=np.int64)
    cdef cnp.ndarray[cnp.int32_t, ndim=1] fl = np.ascontiguousarray(flat, dtype=np.int32)
    cdef Py_ssize_t nedges = ip.shape[0] - 1
    cdef Py_ssize_t maxlen = 0, e, j, m
    for e in range(nedges):
        if ip[e + 1] - ip[e] > maxlen:
            maxlen = ip[e + 1] - ip[e]
    cdef long long* buf = <long long*> malloc(max(maxlen, 1) * sizeof(long long))
    if buf == NULL:
        raise MemoryError()
    cdef Py_ssize_t need, idx, r
    cdef Py_ssize_t distinct, uniq
    cdef bint ok
    try:
        for e in range(nedges):
            m = ip[e + 1] - ip[e]
            for j in range(m):
                buf[j] = cols[fl[ip[e] + j]]
            qsort(buf, m, sizeof(long long), _cmp_i64)
            ok = True
            if notion == 0:
                if m >= 2 and buf[0] == buf[m - 1]:
                    ok = False
            else:
                need = m if m < t else t
                if notion == 1:
                    distinct = 0
                    for j in range(m):
                        if j == 0 or buf[j] != buf[j - 1]:
                            distinct += 1
                    ok = distinct >= need
                elif notion == 2:
                    uniq = 0
                    for j in range(m):
                        if (j == 0 or buf[j] != buf[j - 1]) and (
                            j == m - 1 or buf[j] != buf[j + 1]
                        ):
                            uniq += 1
                    ok = uniq >= need
                else:
                    idx = m - 1
                    for r in range(need):
                        if idx > 0 and buf[idx] == buf[idx - 1]:
                            ok = False
                            break
                        idx -= 1
            if not ok:
                return e
        return -1
    finally:
        free(buf)


def validate_subset(int t, int n, ids, indptr, flat):
    cdef cnp.ndarray[cnp.int32_t, ndim=1] tid = np.ascontiguousarray(ids, dtype=np.int32)
    cdef cnp.ndarray[cnp.int64_t, ndim=1] ip = np.ascontiguousarray(indptr, dtype=np.int64)
    cdef cnp.ndarray[cnp.int32_t, ndim=1] fl = np.ascontiguousarray(flat, dtype=np.int32)
    cdef Py_ssize_t nedges = ip.shape[0] - 1
    cdef long long ntok = 0
    cdef Py_ssize_t z
    for z in range(tid.shape[0]):
        if tid[z] + 1 > ntok:
            ntok = tid[z] + 1
    cdef cnp.ndarray[cnp.int64_t, ndim=1] counts = np.zeros(max(ntok, 1), dtype=np.int64)
    cdef cnp.ndarray[cnp.int64_t, ndim=1] touched = np.zeros(max(tid.shape[0], 1), dtype=np.int64)
    cdef Py_ssize_t e, m, i, j, k, ntouch, s
    cdef long long va, vb, vc, rank, tok
    cdef bint found
    if t < 1 or t > 3:
        raise ValueError("compiled subset validator supports t in 1..3")
    for e in range(nedges):
        m = ip[e + 1] - ip[e]
        if m <= t:
            continue
        ntouch = 0
        if t == 1:
            for i in range(m):
                rank = fl[ip[e] + i]
                tok = tid[rank]
                if counts[tok] == 0:
                    touched[ntouch] = tok
                    ntouch += 1
                counts[tok] += 1
        elif t == 2:
            for j in range(1, m):
                vb = fl[ip[e] + j]
                for i in range(j):
                    va = fl[ip[e] + i]
                    rank = vb * (vb - 1) / 2 + va
                    tok = tid[rank]
                    if counts[tok] == 0:
                        touched[ntouch] = tok
                        ntouch += 1
                    counts[tok] += 1
        else:
            for k in range(2, m):
                vc = fl[ip[e] + k]
                for j in range(1, k):
                    vb = fl[ip[e] + j]
                    for i in range(j):
                        va = fl[ip[e] + i]
                        rank = (
                            vc * (vc - 1) * (vc - 2) / 6
                            + vb * (vb - 1) / 2
                            + va
                        )
                        tok = tid[rank]
                        if counts[tok] == 0:
                            touched[ntouch] = tok
                            ntouch += 1
                        counts[tok] += 1
        found = False
        for s in range(ntouch):
            if counts[touched[s]] == 1:
                found = True
            counts[touched[s]] = 0
        if not found:
            return e
    return -1


def union_pair_masks(masks):
    cdef cnp.ndarray[cnp.uint64_t, ndim=1] ms = np.ascontiguousarray(masks, dtype=np.uint64)
    cdef Py_ssize_t m = ms.shape[0]
    if m == 0:
        return ms
    chunks = []
    cdef Py_ssize_t i, start = 0
    pending = []
    cdef Py_ssize_t pending_size = 0
    for i in range(m):
        pending.append(np.bitwise_or(ms[i:], ms[i]))
        pending_size += m - i
        if pending_size > 4_000_000:
            chunks.append(np.unique(np.concatenate(pending)))
            pending = []
            pending_size = 0
    if pending:
        chunks.append(np.unique(np.concatenate(pending)))
    return np.unique(np.concatenate(chunks)) if len(chunks) > 1 else chunks[0]


def rect_subset_masks(xs, ys):
    cdef cnp.ndarray[cnp.int64_t, ndim=1] xa = np.ascontiguousarray(xs, dtype=np.int64)
    cdef cnp.ndarray[cnp.int64_t, ndim=1] ya = np.ascontiguousarray(ys, dtype=np.int64)
    cdef Py_ssize_t n = xa.shape[0]
    if n > 64:
        raise ValueError("mask enumeration supports n <= 64")
    cdef cnp.ndarray[cnp.int64_t, ndim=1] by_x = np.argsort(xa, kind="stable").astype(np.int64)
    cdef Py_ssize_t total = 0
    cdef Py_ssize_t a, b, mlen
    for a in range(n):
        for b in range(a, n):
            mlen = b - a + 1
            total += mlen * (mlen + 1) / 2
    cdef cnp.ndarray[cnp.uint64_t, ndim=1] out = np.empty(max(total, 1), dtype=np.uint64)
    cdef long long* wy = <long long*> malloc(max(n, 1) * sizeof(long long))
    cdef unsigned long long* wbit = <unsigned long long*> malloc(max(n, 1) * sizeof(unsigned long long))
    if wy == NULL or wbit == NULL:
        free(wy)
        free(wbit)
        raise MemoryError()
    cdef Py_ssize_t pos = 0, wlen, i, j, ins
    cdef Py_ssize_t p
    cdef long long py
    cdef unsigned long long pbit, acc
    try:
        for a in range(n):
            wlen = 0
            for b in range(a, n):
                p = by_x[b]
                py = ya[p]
                pbit = (<unsigned long long> 1) << (<unsigned long long> p)
                ins = wlen
                while ins > 0 and wy[ins - 1] > py:
                    wy[ins] = wy[ins - 1]
                    wbit[ins] = wbit[ins - 1]
                    ins -= 1
                wy[ins] = py
                wbit[ins] = pbit
                wlen += 1
                for i in range(wlen):
                    acc = 0
                    for j in range(i, wlen):
                        acc |= wbit[j]
                        out[pos] = acc
                        pos += 1
        return np.unique(out[:pos])
    finally:
        free(wy)
        free(wbit)


cdef inline long long _rc(cnp.int32_t[:, ::1] prefix, long long ngrid,
                          long long x1, long long x2, long long y1, long long y2) noexcept nogil:
    if x1 < 1:
        x1 = 1
    if y1 < 1:
        y1 = 1
    if x2 > ngrid:
        x2 = ngrid
    if y2 > ngrid:
        y2 = ngrid
    if x1 > x2 or y1 > y2:
        return 0
    return (
        prefix[x2, y2]
        - prefix[x1 - 1, y2]
        - prefix[x2, y1 - 1]
        + prefix[x1 - 1, y1 - 1]
    )


cdef long long _slide_min(cnp.int32_t[:, ::1] prefix, long long ngrid,
                          long long fix1, long long fix2, bint fix_is_x,
                          long long s, long long vmin, long long vmax) noexcept nogil:
    """Min count over clamped cover-windows of size s containing [vmin, vmax];
    the other axis is pinned to [fix1, fix2].  Returns -1 when no window fits."""
    cdef long long best = -1, c, a, b, lo, hi
    lo = vmax - s + 1
    if lo < 1:
        lo = 1
    hi = ngrid - s + 1
    if hi > vmin:
        hi = vmin
    for a in range(lo, hi + 1):
        b = a + s - 1
        if fix_is_x:
            c = _rc(prefix, ngrid, fix1, fix2, a, b)
        else:
            c = _rc(prefix, ngrid, a, b, fix1, fix2)
        if best < 0 or c < best:
            best = c
    hi = ngrid if ngrid < s else s
    for b in range(vmax, hi + 1):
        if fix_is_x:
            c = _rc(prefix, ngrid, fix1, fix2, 1, b)
        else:
            c = _rc(prefix, ngrid, 1, b, fix1, fix2)
        if best < 0 or c < best:
            best = c
    lo = ngrid - s + 1
    if lo < 1:
        lo = 1
    for a in range(lo, vmin + 1):
        if fix_is_x:
            c = _rc(prefix, ngrid, fix1, fix2, a, ngrid)
        else:
            c = _rc(prefix, ngrid, a, ngrid, fix1, fix2)
        if best < 0 or c < best:
            best = c
    if s >= ngrid:
        if fix_is_x:
            c = _rc(prefix, ngrid, fix1, fix2, 1, ngrid)
        else:
            c = _rc(prefix, ngrid, 1, ngrid, fix1, fix2)
        if best < 0 or c < best:
            best = c
    return best


cdef long long _min_ratio(cnp.int32_t[:, ::1] prefix, cnp.int32_t[:, ::1] prefix_t,
                          long long ngrid, long long xp, long long yp,
                          long long xq, long long yq, int expo) noexcept nogil:
    cdef long long scale, dx, dy, xmin, xmax, ymin, ymax, hfloor, w, s, c
    cdef long long best = -1
    if expo < 0:
        return _min_ratio(prefix_t, prefix, ngrid, yp, xp, yq, xq, -expo)
    scale = (<long long> 1) << expo
    xmin = xp if xp <= xq else xq
    xmax = xp + xq - xmin
    ymin = yp if yp <= yq else yq
    ymax = yp + yq - ymin
    dx = xmax - xmin
    dy = ymax - ymin
    if dx >= scale * dy:
        hfloor = dx / scale
        for s in range(hfloor, hfloor + 2):
            if s < dy + 1:
                continue
            c = _slide_min(prefix, ngrid, xmin, xmax, True, s, ymin, ymax)
            if c >= 0 and (best < 0 or c < best):
                best = c
            if s == hfloor + 1:
                break
    else:
        w = scale * dy
        for s in range(w, w + 2):
            if s < dx + 1:
                continue
            c = _slide_min(prefix, ngrid, ymin, ymax, False, s, xmin, xmax)
            if c >= 0 and (best < 0 or c < best):
                best = c
            if s == w + 1:
                break
    return best


def min_ratio_points(prefix, long long ngrid, long long xp, long long yp,
                     long long xq, long long yq, int expo):
    cdef cnp.int32_t[:, ::1] pf = np.ascontiguousarray(prefix, dtype=np.int32)
    cdef cnp.int32_t[:, ::1] pft = np.ascontiguousarray(np.asarray(prefix).T, dtype=np.int32)
    return _min_ratio(pf, pft, ngrid, xp, yp, xq, yq, expo)


def ratio_graph_edges(xs, ys, long long ngrid, int t):
    cdef cnp.ndarray[cnp.int64_t, ndim=1] xa = np.ascontiguousarray(xs, dtype=np.int64)
    cdef cnp.ndarray[cnp.int64_t, ndim=1] ya = np.ascontiguousarray(ys, dtype=np.int64)
    cdef Py_ssize_t n = xa.shape[0]
    grid = np.zeros((ngrid + 1, ngrid + 1), dtype=np.int32)
    cdef Py_ssize_t i
    for i in range(n):
        grid[xa[i], ya[i]] += 1
    pf_arr = np.ascontiguousarray(np.cumsum(np.cumsum(grid, axis=0), axis=1), dtype=np.int32)
    pft_arr = np.ascontiguousarray(pf_arr.T, dtype=np.int32)
    cdef cnp.int32_t[:, ::1] pf = pf_arr
    cdef cnp.int32_t[:, ::1] pft = pft_arr
    cdef int logn = 0
    while ((<long long> 1) << logn) < ngrid:
        logn += 1
    cdef list expos = [0]
    cdef int a
    for a in range(1, logn + 1):
        expos.append(a)
        expos.append(-a)
    cdef Py_ssize_t p, q
    cdef int expo
    cdef long long c
    edges = []
    for p in range(n):
        for q in range(p + 1, n):
            for expo in expos:
                c = _min_ratio(pf, pft, ngrid, xa[p], ya[p], xa[q], ya[q], expo)
                if 0 <= c <= t + 1:
                    edges.append((p, q))
                    break
    return np.array(edges, dtype=np.int32).reshape(-1, 2)


def colourful_greedy(Py_ssize_t n, indptr, flat, int k):
    cdef cnp.ndarray[cnp.int64_t, ndim=1] ip = np.ascontiguousarray(indptr, dtype=np.int64)
    cdef cnp.ndarray[cnp.int32_t, ndim=1] fl = np.ascontiguousarray(flat, dtype=np.int32)
    cdef Py_ssize_t nedges = ip.shape[0] - 1
    if n > 2048:
        raise ValueError("compiled colourful greedy supports n <= 2048")
    colours = np.zeros(n, dtype=np.int32)
    if n == 0:
        return colours
    cdef cnp.ndarray[cnp.int32_t, ndim=2] cnt = np.zeros((n, n), dtype=np.int32)
    cdef cnp.ndarray[cnp.int64_t, ndim=1] deg = np.zeros(n, dtype=np.int64)
    cdef cnp.ndarray[cnp.int64_t, ndim=1] size = np.empty(max(nedges, 1), dtype=np.int64)
    cdef cnp.ndarray[cnp.uint8_t, ndim=1] alive = np.ones(n, dtype=np.uint8)
    # vertex -> incident edges, CSR
    cdef cnp.ndarray[cnp.int64_t, ndim=1] inc_ptr = np.zeros(n + 1, dtype=np.int64)
    cdef Py_ssize_t e, j, i2
    for e in range(nedges):
        size[e] = ip[e + 1] - ip[e]
        for j in range(ip[e], ip[e + 1]):
            inc_ptr[fl[j] + 1] += 1
    for i2 in range(n):
        inc_ptr[i2 + 1] += inc_ptr[i2]
    cdef cnp.ndarray[cnp.int64_t, ndim=1] inc_flat = np.empty(max(ip[nedges], 1), dtype=np.int64)
    cdef cnp.ndarray[cnp.int64_t, ndim=1] fill = inc_ptr.copy()
    for e in range(nedges):
        for j in range(ip[e], ip[e + 1]):
            inc_flat[fill[fl[j]]] = e
            fill[fl[j]] += 1

    cdef cnp.int32_t[:, ::1] cv = cnt
    cdef long long[:] degv = deg

    cdef Py_ssize_t u, v, w, ii, jj
    cdef long long old

    # pairs inside initially small hyperedges
    for e in range(nedges):
        if size[e] <= k:
            for ii in range(ip[e], ip[e + 1]):
                for jj in range(ii + 1, ip[e + 1]):
                    u = fl[ii]
                    v = fl[jj]
                    old = cv[u, v]
                    cv[u, v] = cv[v, u] = <cnp.int32_t> (old + 1)
                    if old == 0:
                        degv[u] += 1
                        degv[v] += 1

    order = np.empty(n, dtype=np.int64)
    nbr_lists = []
    cdef cnp.ndarray[cnp.int64_t, ndim=1] live = np.empty(n, dtype=np.int64)
    cdef Py_ssize_t nlive, step, best
    cdef Py_ssize_t epos
    for step in range(n):
        best = -1
        for v in range(n):
            if alive[v] and (best < 0 or degv[v] < degv[best]):
                best = v
        u = best
        order[step] = u
        nbrs = []
        for v in range(n):
            if alive[v] and v != u and cv[u, v] > 0:
                nbrs.append(v)
        nbr_lists.append(nbrs)
        for epos in range(inc_ptr[u], inc_ptr[u + 1]):
            e = inc_flat[epos]
            if size[e] > k + 1:
                size[e] -= 1
                continue
            nlive = 0
            for j in range(ip[e], ip[e + 1]):
                v = fl[j]
                if alive[v] and v != u:
                    live[nlive] = v
                    nlive += 1
            if size[e] <= k:
                for ii in range(nlive):
                    v = live[ii]
                    old = cv[u, v]
                    cv[u, v] = cv[v, u] = <cnp.int32_t> (old - 1)
                    if old == 1:
                        degv[u] -= 1
                        degv[v] -= 1
            size[e] -= 1
            if size[e] == k:
                for ii in range(nlive):
                    for jj in range(ii + 1, nlive):
                        v = live[ii]
                        w = live[jj]
                        old = cv[v, w]
                        cv[v, w] = cv[w, v] = <cnp.int32_t> (old + 1)
                        if old == 0:
                            degv[v] += 1
                            degv[w] += 1
        alive[u] = 0

    cdef cnp.ndarray[cnp.int32_t, ndim=1] col = colours
    cdef Py_ssize_t c
    used = np.zeros(n + 2, dtype=np.int64)
    cdef cnp.ndarray[cnp.int64_t, ndim=1] usedv = used
    for step in range(n - 1, -1, -1):
        u = order[step]
        for v in nbr_lists[step]:
            if col[v] > 0:
                usedv[col[v]] = step + 1
        c = 1
        while usedv[c] == step + 1:
            c += 1
        col[u] = <cnp.int32_t> c
    return colours
