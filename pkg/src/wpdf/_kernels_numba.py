"""Row-loop estimator kernels compiled with numba.

Same contracts as :mod:`wpdf._kernels_numpy`; results agree with it to
rounding (summation order differs).
"""

import math

import numpy as np
from numba import njit

METHODS = ("MLM", "MMLM", "PE", "MPE")


@njit(cache=True)
def _row_quantile(row, q):
    n = row.shape[0]
    h = (n - 1) * q
    lo = int(math.floor(h))
    if lo + 1 >= n:
        return row[n - 1]
    frac = h - lo
    return row[lo] + frac * (row[lo + 1] - row[lo])


@njit(cache=True)
def sorted_quantile(xs, q):
    out = np.empty(xs.shape[0])
    for i in range(xs.shape[0]):
        out[i] = _row_quantile(xs[i], q)
    return out


@njit(cache=True)
def _row_mle(row):
    n = row.shape[0]
    b = row[0]
    for j in range(1, n):
        if row[j] > b:
            b = row[j]
    s = 0.0
    for j in range(n):
        s += math.log(b / row[j])
    if s > 0.0:
        return b, n / (2.0 * s)
    return b, np.nan


@njit(cache=True)
def _row_mmlm(row):
    n = row.shape[0]
    b = row[0]
    m = 0.0
    for j in range(n):
        m += row[j]
        if row[j] > b:
            b = row[j]
    m /= n
    v = 0.0
    for j in range(n):
        d = row[j] - m
        v += d * d
    v /= n - 1
    if v > 0.0:
        return b, (-1.0 + math.sqrt(1.0 + m * m / v)) / 2.0
    return b, np.nan


@njit(cache=True)
def _two_points(p_hi, p_lo, log_prob_ratio, hi):
    log_ratio = math.log(p_hi / p_lo)
    if not log_ratio > 0.0:
        return np.nan, np.nan
    g = log_prob_ratio / (2.0 * log_ratio)
    return p_hi / hi ** (1.0 / (2.0 * g)), g


@njit(cache=True)
def mle(xs):
    r = xs.shape[0]
    beta = np.empty(r)
    gamma = np.empty(r)
    for i in range(r):
        beta[i], gamma[i] = _row_mle(xs[i])
    return beta, gamma


@njit(cache=True)
def mmlm(xs):
    r = xs.shape[0]
    beta = np.empty(r)
    gamma = np.empty(r)
    for i in range(r):
        beta[i], gamma[i] = _row_mmlm(xs[i])
    return beta, gamma


@njit(cache=True)
def percentile(xs_sorted, hi, lo):
    r = xs_sorted.shape[0]
    beta = np.empty(r)
    gamma = np.empty(r)
    lp = math.log(hi / lo)
    for i in range(r):
        row = xs_sorted[i]
        beta[i], gamma[i] = _two_points(_row_quantile(row, hi), _row_quantile(row, lo), lp, hi)
    return beta, gamma


@njit(cache=True)
def modified_percentile(xs_sorted, hi):
    r = xs_sorted.shape[0]
    beta = np.empty(r)
    gamma = np.empty(r)
    lp = math.log(2.0 * hi)
    for i in range(r):
        row = xs_sorted[i]
        beta[i], gamma[i] = _two_points(_row_quantile(row, hi), _row_quantile(row, 0.5), lp, hi)
    return beta, gamma


@njit(cache=True, nogil=True)
def _fit_all_sorted(xs, hi, lo, mpe_hi):
    r = xs.shape[0]
    beta = np.empty((r, 4))
    gamma = np.empty((r, 4))
    lp = math.log(hi / lo)
    lpm = math.log(2.0 * mpe_hi)
    for i in range(r):
        row = xs[i]
        beta[i, 0], gamma[i, 0] = _row_mle(row)
        beta[i, 1], gamma[i, 1] = _row_mmlm(row)
        p_hi = _row_quantile(row, hi)
        beta[i, 2], gamma[i, 2] = _two_points(p_hi, _row_quantile(row, lo), lp, hi)
        p_hi = _row_quantile(row, mpe_hi)
        beta[i, 3], gamma[i, 3] = _two_points(p_hi, _row_quantile(row, 0.5), lpm, mpe_hi)
    return beta, gamma


def fit_all(x, hi=0.75, lo=0.25, mpe_hi=0.75):
    # numpy's vectorized row sort beats a per-row sort inside the loop
    xs = np.sort(np.asarray(x, dtype=np.float64), axis=1)
    return _fit_all_sorted(xs, float(hi), float(lo), float(mpe_hi))
