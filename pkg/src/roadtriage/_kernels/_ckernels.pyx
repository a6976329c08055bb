# cython: boundscheck=False, wraparound=False, cdivision=True
"""Compiled twins of the kernels in ``_pykernels.py``.

Semantics and float arithmetic order must match the Python backend exactly
(the extension is compiled with -ffp-contract=off to rule out FMA drift);
``tests/test_kernels.py`` asserts bit-identical results.
"""

import numpy as np

cimport numpy as cnp

BACKEND = "compiled"


def best_split_gini(double[:, ::1] x, unsigned char[:] y, long long[:] feature_ids):
    cdef Py_ssize_t n = x.shape[0]
    if n < 2:
        return None

    cdef Py_ssize_t k = feature_ids.shape[0]
    cdef Py_ssize_t fi, f, i, j
    cdef long long total_pos = 0
    for i in range(n):
        total_pos += y[i]

    cdef cnp.ndarray order_arr
    cdef long long[:] order
    cdef double[:] xs = np.empty(n, dtype=np.float64)
    cdef unsigned char[:] ys = np.empty(n, dtype=np.uint8)

    cdef bint have_best = False
    cdef long long best_f = -1
    cdef double best_thr = 0.0, best_w = 0.0
    cdef long long n_left, p_left, n_right, p_right
    cdef double nl, nr, pl, ql, pr, qr, gl, gr, weighted, thr, nf

    nf = <double> n
    col = np.empty(n, dtype=np.float64)
    for fi in range(k):
        f = <Py_ssize_t> feature_ids[fi]
        for i in range(n):
            col[i] = x[i, f]
        order_arr = np.argsort(col, kind="stable")
        order = order_arr.astype(np.int64)
        for i in range(n):
            xs[i] = x[order[i], f]
            ys[i] = y[order[i]]
        if xs[0] == xs[n - 1]:
            continue
        n_left = 0
        p_left = 0
        for j in range(n - 1):
            n_left += 1
            p_left += ys[j]
            if xs[j] == xs[j + 1]:
                continue
            n_right = n - n_left
            p_right = total_pos - p_left
            thr = (xs[j] + xs[j + 1]) / 2.0
            if thr == xs[j + 1]:
                thr = xs[j]
            nl = <double> n_left
            nr = <double> n_right
            pl = (<double> p_left) / nl
            ql = (<double> (n_left - p_left)) / nl
            pr = (<double> p_right) / nr
            qr = (<double> (n_right - p_right)) / nr
            gl = 1.0 - pl * pl - ql * ql
            gr = 1.0 - pr * pr - qr * qr
            weighted = (nl * gl + nr * gr) / nf
            if (not have_best) or weighted < best_w:
                have_best = True
                best_f = f
                best_thr = thr
                best_w = weighted
    if not have_best:
        return None
    return (int(best_f), float(best_thr), float(best_w))


def best_split_sse(double[:, ::1] x, double[:] y, long long[:] feature_ids):
    cdef Py_ssize_t n = x.shape[0]
    if n < 2:
        return None

    cdef Py_ssize_t k = feature_ids.shape[0]
    cdef Py_ssize_t fi, f, i, j
    cdef double total_sum = 0.0, total_sq = 0.0
    for i in range(n):
        total_sum += y[i]
        total_sq += y[i] * y[i]

    cdef long long[:] order
    cdef double[:] xs = np.empty(n, dtype=np.float64)
    cdef double[:] ys = np.empty(n, dtype=np.float64)

    cdef bint have_best = False
    cdef long long best_f = -1
    cdef double best_thr = 0.0, best_w = 0.0
    cdef double s_left, q_left, s_right, q_right
    cdef double nl, nr, sse_l, sse_r, weighted, thr, nf
    cdef long long n_left

    nf = <double> n
    col = np.empty(n, dtype=np.float64)
    for fi in range(k):
        f = <Py_ssize_t> feature_ids[fi]
        for i in range(n):
            col[i] = x[i, f]
        order = np.argsort(col, kind="stable").astype(np.int64)
        for i in range(n):
            xs[i] = x[order[i], f]
            ys[i] = y[order[i]]
        if xs[0] == xs[n - 1]:
            continue
        n_left = 0
        s_left = 0.0
        q_left = 0.0
        for j in range(n - 1):
            n_left += 1
            s_left = s_left + ys[j]
            q_left = q_left + ys[j] * ys[j]
            if xs[j] == xs[j + 1]:
                continue
            thr = (xs[j] + xs[j + 1]) / 2.0
            if thr == xs[j + 1]:
                thr = xs[j]
            nl = <double> n_left
            nr = nf - nl
            s_right = total_sum - s_left
            q_right = total_sq - q_left
            sse_l = q_left - (s_left * s_left) / nl
            sse_r = q_right - (s_right * s_right) / nr
            weighted = (sse_l + sse_r) / nf
            if (not have_best) or weighted < best_w:
                have_best = True
                best_f = f
                best_thr = thr
                best_w = weighted
    if not have_best:
        return None
    return (int(best_f), float(best_thr), float(best_w))


def march_travel_time(double[:] speeds, double[:] cum_ends, double dt):
    cdef Py_ssize_t m = speeds.shape[0]
    if m == 0:
        return 0.0
    cdef double total = cum_ends[m - 1]
    cdef Py_ssize_t i = 0
    cdef double s = 0.0, t = 0.0, v
    while i < m:
        v = speeds[i]
        if v <= 0.0:
            raise ValueError("non-positive speed in march_travel_time")
        s = s + v * dt
        t = t + dt
        while i < m and s >= cum_ends[i]:
            i += 1
        if i == m:
            t = t - (s - total) / v
    return t
