"""Pure-Python/numpy implementations of the hot kernels.

These are the reference semantics for the compiled backend in
``_ckernels.pyx``: both must return bit-identical floats.  Expressions are
written operation-for-operation the way the C loops evaluate them, so keep
the arithmetic order intact when editing either side.
"""

from __future__ import annotations

import numpy as np

BACKEND = "python"


def best_split_gini(x, y, feature_ids):
    """Best binary split of a node by weighted child Gini impurity.

    x            : (n, d) float64 feature matrix of the node's rows
    y            : (n,) uint8 class labels in {0, 1}
    feature_ids  : int64 array of candidate feature indices, ascending

    Candidate thresholds are midpoints between consecutive distinct sorted
    values.  Ties in impurity are broken by lowest feature index, then
    lowest threshold.  Returns ``(feature, threshold, weighted_child_gini)``
    or ``None`` when no feature admits a split.
    """
    n = x.shape[0]
    if n < 2:
        return None
    total_pos = int(y.sum())
    best = None
    for f in feature_ids:
        f = int(f)
        order = np.argsort(x[:, f], kind="stable")
        xs = x[order, f]
        if xs[0] == xs[-1]:
            continue
        ys = y[order].astype(np.int64)
        pos_prefix = np.cumsum(ys)
        cut = np.flatnonzero(xs[:-1] != xs[1:])  # left-group end positions
        n_left = cut + 1
        p_left = pos_prefix[cut]
        n_right = n - n_left
        p_right = total_pos - p_left

        thr = (xs[cut] + xs[cut + 1]) / 2.0
        # A midpoint that rounds up to the right value cannot separate the
        # groups; fall back to the left value itself.
        bad = thr == xs[cut + 1]
        if bad.any():
            thr = np.where(bad, xs[cut], thr)

        nl = n_left.astype(np.float64)
        nr = n_right.astype(np.float64)
        pl = p_left / nl
        ql = (n_left - p_left) / nl
        pr = p_right / nr
        qr = (n_right - p_right) / nr
        gl = 1.0 - pl * pl - ql * ql
        gr = 1.0 - pr * pr - qr * qr
        weighted = (nl * gl + nr * gr) / float(n)

        j = int(np.argmin(weighted))  # first minimum = lowest threshold
        if best is None or weighted[j] < best[2]:
            best = (f, float(thr[j]), float(weighted[j]))
    return best


def best_split_sse(x, y, feature_ids):
    """Best binary split of a node by summed child SSE (variance criterion).

    Same candidate enumeration and tie rules as :func:`best_split_gini`;
    ``y`` is a float64 regression target.  Returns
    ``(feature, threshold, child_sse_over_n)`` or ``None``.
    """
    n = x.shape[0]
    if n < 2:
        return None
    total_sum = float(y.sum())
    total_sq = float((y * y).sum())
    best = None
    for f in feature_ids:
        f = int(f)
        order = np.argsort(x[:, f], kind="stable")
        xs = x[order, f]
        if xs[0] == xs[-1]:
            continue
        ys = y[order]
        sum_prefix = np.cumsum(ys)
        sq_prefix = np.cumsum(ys * ys)
        cut = np.flatnonzero(xs[:-1] != xs[1:])
        n_left = (cut + 1).astype(np.float64)
        n_right = float(n) - n_left
        s_left = sum_prefix[cut]
        q_left = sq_prefix[cut]
        s_right = total_sum - s_left
        q_right = total_sq - q_left

        thr = (xs[cut] + xs[cut + 1]) / 2.0
        bad = thr == xs[cut + 1]
        if bad.any():
            thr = np.where(bad, xs[cut], thr)

        sse_l = q_left - (s_left * s_left) / n_left
        sse_r = q_right - (s_right * s_right) / n_right
        weighted = (sse_l + sse_r) / float(n)

        j = int(np.argmin(weighted))
        if best is None or weighted[j] < best[2]:
            best = (f, float(thr[j]), float(weighted[j]))
    return best


def march_travel_time(speeds, cum_ends, dt):
    """Clock-tick time marching along a path of piecewise-constant speed.

    speeds   : (m,) float64 commanded speed per path bin (all > 0)
    cum_ends : (m,) float64 cumulative arc length at the end of each bin
    dt       : tick duration in seconds

    Each tick advances the vehicle by ``v * dt`` using the speed of the bin
    it starts the tick in; the final tick is prorated so the run ends
    exactly at the path end.  Returns the integrated travel time.
    """
    m = len(speeds)
    if m == 0:
        return 0.0
    total = float(cum_ends[m - 1])
    i = 0
    s = 0.0
    t = 0.0
    while i < m:
        v = float(speeds[i])
        if v <= 0.0:
            raise ValueError("non-positive speed in march_travel_time")
        s = s + v * dt
        t = t + dt
        while i < m and s >= cum_ends[i]:
            i += 1
        if i == m:
            t = t - (s - total) / v
    return t
