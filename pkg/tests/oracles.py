"""Independent reference computations used to cross-check library results.

The threshold-scan scorer here shares no code with the library: candidates
are evaluated analytically from sorted-order prefix sums instead of by
materializing approximation arrays.
"""

import numpy as np


def snr_of_thresholds(values, thresholds):
    """Score three-level reductions of `values` at the given thresholds.

    Returns one value per threshold: the SNR in dB between the
    unit-deviation-scaled input and its scaled {0,1,2} reduction, +inf for an
    exact reconstruction, NaN where the reduction is constant (unscorable).
    """
    x = np.asarray(values, dtype=np.float64)
    thr = np.atleast_1d(np.asarray(thresholds, dtype=np.float64))
    n = x.size
    xn = x / x.std()
    xs = np.sort(xn)
    s1 = np.concatenate(([0.0], np.cumsum(xs)))

    i1 = np.searchsorted(xs, thr, side="left")      # elements < t -> level 0
    i2 = np.searchsorted(xs, 2.0 * thr, side="left")  # elements >= 2t -> level 2
    n1 = i2 - i1
    n2 = n - i2

    mean_f = (n1 + 2.0 * n2) / n
    ex_f2 = (n1 + 4.0 * n2) / n
    var_f = ex_f2 - mean_f ** 2

    mean_x = xn.mean()
    ex_x2 = np.mean(xn * xn)
    var_x = ex_x2 - mean_x ** 2
    sd_x = np.sqrt(var_x)

    out = np.full(thr.size, np.nan)
    ok = var_f > 0
    sd_f = np.sqrt(var_f[ok])
    ex_xf = ((s1[i2[ok]] - s1[i1[ok]]) + 2.0 * (s1[-1] - s1[i2[ok]])) / n

    ex_rn2 = (ex_x2 / var_x - 2.0 * ex_xf / (sd_x * sd_f)
              + ex_f2[ok] / var_f[ok])
    mean_rn = mean_x / sd_x - mean_f[ok] / sd_f
    var_rn = ex_rn2 - mean_rn ** 2
    var_xn = ex_x2 / var_x - (mean_x / sd_x) ** 2

    perfect = var_rn <= 1e-12 * var_xn
    scores = np.empty(var_rn.size)
    scores[perfect] = np.inf
    scores[~perfect] = 10.0 * np.log10(var_xn / var_rn[~perfect])
    out[ok] = scores
    return out


def grid_thresholds(values, start, step):
    """Candidate grid start, start+step, ... below the scaled maximum."""
    x = np.asarray(values, dtype=np.float64)
    mx = (x / x.std()).max()
    ks = np.arange(max(int(np.ceil((mx - start) / step)) + 1, 0))
    thr = start + ks * step
    return thr[thr < mx]


def best_on_grid(values, start, step):
    """Exhaustive scan: (best threshold, best SNR), first-best tie-breaking."""
    thr = grid_thresholds(values, start, step)
    scores = snr_of_thresholds(values, thr)
    finite_or_inf = ~np.isnan(scores)
    assert finite_or_inf.any(), "no scorable candidate"
    best = np.flatnonzero(finite_or_inf & (scores >= np.nanmax(scores)))[0]
    return thr[best], scores[best]
