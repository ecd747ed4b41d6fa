"""Vectorized estimator kernels (pure numpy).

Every function takes a 2-D array whose rows are independent samples and
returns one estimate per row.  Rows for which an estimator is degenerate
get NaN; callers decide whether that is an error or a counted failure.
"""

import numpy as np

METHODS = ("MLM", "MMLM", "PE", "MPE")


def sorted_quantile(xs, q):
    """Linear interpolation at 0-based position ``(n-1) q`` of sorted rows."""
    n = xs.shape[1]
    h = (n - 1) * q
    lo = int(np.floor(h))
    frac = h - lo
    if lo + 1 >= n:
        return xs[:, n - 1].copy()
    return xs[:, lo] + frac * (xs[:, lo + 1] - xs[:, lo])


def mle(xs):
    n = xs.shape[1]
    beta = xs.max(axis=1)
    s = np.sum(np.log(beta[:, None] / xs), axis=1)
    with np.errstate(divide="ignore", invalid="ignore"):
        gamma = n / (2.0 * s)
    gamma[~(s > 0)] = np.nan
    return beta, gamma


def mmlm(xs):
    beta = xs.max(axis=1)
    m = xs.mean(axis=1)
    v = np.var(xs, axis=1, ddof=1)
    with np.errstate(divide="ignore", invalid="ignore"):
        gamma = (-1.0 + np.sqrt(1.0 + m * m / v)) / 2.0
    gamma[~(v > 0)] = np.nan
    return beta, gamma


def _from_two_points(p_hi, p_lo, log_prob_ratio, hi):
    log_ratio = np.log(p_hi / p_lo)
    with np.errstate(divide="ignore", invalid="ignore"):
        gamma = log_prob_ratio / (2.0 * log_ratio)
        beta = p_hi / hi ** (1.0 / (2.0 * gamma))
    bad = ~(log_ratio > 0)
    gamma[bad] = np.nan
    beta[bad] = np.nan
    return beta, gamma


def percentile(xs_sorted, hi, lo):
    p_hi = sorted_quantile(xs_sorted, hi)
    p_lo = sorted_quantile(xs_sorted, lo)
    return _from_two_points(p_hi, p_lo, np.log(hi / lo), hi)


def modified_percentile(xs_sorted, hi):
    p_hi = sorted_quantile(xs_sorted, hi)
    med = sorted_quantile(xs_sorted, 0.5)
    return _from_two_points(p_hi, med, np.log(2.0 * hi), hi)


def fit_all(x, hi=0.75, lo=0.25, mpe_hi=0.75):
    """All four estimators on every row; returns ``(beta, gamma)`` of shape (R, 4)."""
    xs = np.sort(np.asarray(x, dtype=np.float64), axis=1)
    r = xs.shape[0]
    beta = np.empty((r, 4))
    gamma = np.empty((r, 4))
    beta[:, 0], gamma[:, 0] = mle(xs)
    beta[:, 1], gamma[:, 1] = mmlm(xs)
    beta[:, 2], gamma[:, 2] = percentile(xs, hi, lo)
    beta[:, 3], gamma[:, 3] = modified_percentile(xs, mpe_hi)
    return beta, gamma
