"""Quadrature evaluations of the defining integrals.

These deliberately use nothing but ``pdf``/``cdf``/``sf`` and adaptive
Gauss-Kronrod quadrature, so they stay independent of the closed forms in
:mod:`wpdf.properties`.  The interval is split at its midpoint so that an
integrable singularity at 0 (``k < 1``) sits at an endpoint of its own
subinterval.
"""

from __future__ import annotations

import math

from scipy.integrate import quad

from .family import PowerFamily, cdf, pdf, quantile, sf

EPSABS = 1e-14
EPSREL = 1e-13


def integrate(fn, a: float, b: float) -> float:
    if a == b:
        return 0.0
    mid = 0.5 * (a + b)
    left, _ = quad(fn, a, mid, epsabs=EPSABS, epsrel=EPSREL, limit=500)
    right, _ = quad(fn, mid, b, epsabs=EPSABS, epsrel=EPSREL, limit=500)
    return left + right


def total_mass(f: PowerFamily) -> float:
    return integrate(lambda x: pdf(f, x), 0.0, f.beta)


def raw_moment(f, r):
    return integrate(lambda x: x**r * pdf(f, x), 0.0, f.beta)


def inverse_moment(f, r):
    return integrate(lambda x: x ** (-r) * pdf(f, x), 0.0, f.beta)


def variance(f):
    mu = raw_moment(f, 1)
    return integrate(lambda x: (x - mu) ** 2 * pdf(f, x), 0.0, f.beta)


def incomplete_moment(f, r, p):
    return integrate(lambda x: x**r * pdf(f, x), 0.0, p)


def conditional_moment(f, r, t):
    return integrate(lambda x: x**r * pdf(f, x), t, f.beta) / sf(f, t)


def mgf(f, t):
    return integrate(lambda x: math.exp(t * x) * pdf(f, x), 0.0, f.beta)


def mrf(f, x):
    return integrate(lambda u: sf(f, u), x, f.beta) / sf(f, x)


def vitality(f, x):
    return integrate(lambda u: u * pdf(f, u), x, f.beta) / sf(f, x)


def information_fn(f, s):
    return integrate(lambda x: pdf(f, x) ** s, 0.0, f.beta)


def renyi_entropy(f, s):
    return math.log(information_fn(f, s)) / (1.0 - s)


def shannon_entropy(f):
    def integrand(x):
        d = pdf(f, x)
        return -d * math.log(d) if d > 0 else 0.0

    return integrate(integrand, 0.0, f.beta)


def order_stat_mass(f, j, n):
    from .properties import order_stat_pdf

    return integrate(lambda x: order_stat_pdf(f, j, n, x), 0.0, f.beta)


def order_stat_pdf(f, j, n, x):
    """Direct textbook product, without log-space prefactors (small ``n`` only)."""
    coef = math.factorial(n) / (math.factorial(j - 1) * math.factorial(n - j))
    return coef * pdf(f, x) * cdf(f, x) ** (j - 1) * sf(f, x) ** (n - j)


def lorenz(f, p):
    q = quantile(f, p)
    return integrate(lambda x: x * pdf(f, x), 0.0, q) / raw_moment(f, 1)


def dtm(f, x, y):
    return integrate(lambda u: u * pdf(f, u), x, y) / (cdf(f, y) - cdf(f, x))


def dtm_from_cdf(f, x, y):
    """Integration-by-parts form ``[y G(y) - x G(x) - int_x^y G] / (G(y) - G(x))``."""
    gx, gy = cdf(f, x), cdf(f, y)
    return (y * gy - x * gx - integrate(lambda u: cdf(f, u), x, y)) / (gy - gx)
