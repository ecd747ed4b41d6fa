"""Closed-form properties of the power family.

All formulas are written in the unified exponent ``k``.  Four widely
quoted expressions are wrong (cv, vitality, conditional moment, doubly
truncated mean); the correct form is the default and the quoted form is
kept behind ``uncorrected=True`` for auditing.  See
:mod:`wpdf.oracle` for the quadrature cross-checks.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from .errors import DivergenceError, DomainError
from .family import PowerFamily, cdf, sf


@dataclass(frozen=True)
class SeriesControl:
    max_terms: int = 200
    rel_tol: float = 1e-12

    def __post_init__(self):
        if self.max_terms < 1:
            raise DomainError(f"max_terms must be >= 1, got {self.max_terms}")
        if not self.rel_tol > 0:
            raise DomainError(f"rel_tol must be > 0, got {self.rel_tol}")


@dataclass(frozen=True)
class SeriesValue:
    value: float
    converged: bool
    terms: int

    def __float__(self):
        return self.value


def _order(r) -> int:
    if int(r) != r or r < 1:
        raise DomainError(f"moment order must be an integer >= 1, got {r}")
    return int(r)


# -- moments ---------------------------------------------------------------

def raw_moment(f: PowerFamily, r: int) -> float:
    r = _order(r)
    return f.k * f.beta**r / (r + f.k)


def inverse_moment(f: PowerFamily, r: int) -> float:
    """``E[X**-r] = k beta**-r / (k - r)``; diverges unless ``k > r``."""
    r = _order(r)
    if not f.k > r:
        raise DivergenceError(f"inverse moment of order {r} diverges for k={f.k} <= {r}")
    return f.k * f.beta ** (-r) / (f.k - r)


def mean(f: PowerFamily) -> float:
    return f.k * f.beta / (f.k + 1.0)


def variance(f: PowerFamily) -> float:
    k = f.k
    return k * f.beta**2 / ((k + 1.0) ** 2 * (k + 2.0))


def cv(f: PowerFamily, uncorrected: bool = False) -> float:
    """Coefficient of variation ``1 / sqrt(k (k + 2))``.

    The quoted WPDF value ``1 / sqrt(4 gamma (gamma + 2))`` (with
    ``gamma = k / 2``) is returned when ``uncorrected`` is set; it does
    not agree with the moments.
    """
    if uncorrected:
        g = f.k / 2.0
        return 1.0 / math.sqrt(4.0 * g * (g + 2.0))
    return 1.0 / math.sqrt(f.k * (f.k + 2.0))


def incomplete_moment(f: PowerFamily, r: int, p: float) -> float:
    """Lower incomplete moment ``int_0^p x**r pdf(x) dx``."""
    r = _order(r)
    if not 0.0 < p <= f.beta:
        raise DomainError(f"incomplete moment requires 0 < p <= beta={f.beta}, got {p}")
    return f.k * f.beta**r * (p / f.beta) ** (r + f.k) / (r + f.k)


def upper_incomplete_moment(f: PowerFamily, r: int, t: float) -> float:
    r = _order(r)
    if not 0.0 <= t < f.beta:
        raise DomainError(f"requires 0 <= t < beta={f.beta}, got {t}")
    return f.k * f.beta**r * (1.0 - (t / f.beta) ** (r + f.k)) / (r + f.k)


def conditional_moment(f: PowerFamily, r: int, t: float, uncorrected: bool = False) -> float:
    """``E[X**r | X > t]``.

    With ``uncorrected`` the quoted expression is returned, which is the
    upper incomplete moment without the division by ``sf(t)``.
    """
    upper = upper_incomplete_moment(f, r, t)
    if uncorrected:
        return upper
    return upper / sf(f, t)


def mgf(f: PowerFamily, t: float, ctl: SeriesControl = SeriesControl()) -> SeriesValue:
    """Moment generating function by its power series.

    ``1 + sum_r (t beta)**r / (r! (r/k + 1))``, stopped once a term drops
    below ``ctl.rel_tol`` times the running sum.  Accurate for
    ``|t beta| <= 30``; larger negative arguments lose digits to
    cancellation.
    """
    x = t * f.beta
    total = 1.0
    a = 1.0
    for r in range(1, ctl.max_terms + 1):
        a *= x / r
        term = a / (r / f.k + 1.0)
        total += term
        if abs(term) < ctl.rel_tol * abs(total):
            return SeriesValue(total, True, r)
    return SeriesValue(total, False, ctl.max_terms)


# -- residual life ---------------------------------------------------------

def _residual_point(f: PowerFamily, x: float) -> float:
    if not 0.0 <= x < f.beta:
        raise DomainError(f"requires 0 <= x < beta={f.beta}, got {x}")
    return x / f.beta


def mrf(f: PowerFamily, x: float) -> float:
    """Mean residual life ``e(x) = int_x^beta sf(t) dt / sf(x)``."""
    z = _residual_point(f, x)
    k = f.k
    num = (f.beta - x) - f.beta * (1.0 - z ** (k + 1.0)) / (k + 1.0)
    return num / (1.0 - z**k)


def vitality(f: PowerFamily, x: float, uncorrected: bool = False) -> float:
    """``V(x) = E[X | X > x]``, equal to ``x + mrf(x)``.

    The quoted form drops the ``beta**k`` divisor; it is available via
    ``uncorrected`` and fails ``V(0) == mean`` whenever ``beta != 1``.
    """
    z = _residual_point(f, x)
    k = f.k
    if uncorrected:
        return k * (f.beta ** (k + 1.0) - x ** (k + 1.0)) / ((k + 1.0) * (1.0 - z**k))
    return k * f.beta * (1.0 - z ** (k + 1.0)) / ((k + 1.0) * (1.0 - z**k))


# -- entropies -------------------------------------------------------------

def _integrability(f: PowerFamily, s: float) -> float:
    if not s > 0:
        raise DomainError(f"entropy order must be > 0, got {s}")
    c = s * (f.k - 1.0) + 1.0
    if not c > 0:
        raise DivergenceError(f"integral of pdf**{s} diverges for k={f.k}")
    return c


def information_fn(f: PowerFamily, s: float) -> float:
    """``int pdf(x)**s dx = k**s beta**(1-s) / (s(k-1) + 1)``."""
    c = _integrability(f, s)
    return f.k**s * f.beta ** (1.0 - s) / c


def renyi_entropy(f: PowerFamily, s: float) -> float:
    if s == 1:
        raise DomainError("Renyi entropy of order 1 is the Shannon entropy; use shannon_entropy")
    c = _integrability(f, s)
    log_integral = s * (math.log(f.k) - f.k * math.log(f.beta)) + (s * (f.k - 1.0) + 1.0) * math.log(f.beta) - math.log(c)
    return log_integral / (1.0 - s)


def shannon_entropy(f: PowerFamily) -> float:
    k = f.k
    log_beta = math.log(f.beta)
    return -((math.log(k) - k * log_beta) + (k - 1.0) * (log_beta - 1.0 / k))


# -- order statistics ------------------------------------------------------

def order_stat_pdf(f: PowerFamily, j: int, n: int, x: float) -> float:
    """Density of the ``j``-th of ``n`` order statistics at ``x``."""
    if int(n) != n or n < 1:
        raise DomainError(f"n must be a positive integer, got {n}")
    if int(j) != j or not 1 <= j <= n:
        raise DomainError(f"order index must satisfy 1 <= j <= n={n}, got {j}")
    if not 0.0 < x <= f.beta or (x == f.beta and n > j):
        return 0.0
    log_coef = math.lgamma(n + 1) - math.lgamma(j) - math.lgamma(n - j + 1)
    z = x / f.beta
    log_val = log_coef + math.log(f.k / f.beta) + (f.k - 1.0) * math.log(z)
    if j > 1:
        log_val += (j - 1) * f.k * math.log(z)
    if n > j:
        log_val += (n - j) * math.log1p(-(z**f.k))
    return math.exp(log_val)


# -- inequality curves -----------------------------------------------------

def lorenz(f: PowerFamily, p: float) -> float:
    """``L(p) = k q**(k+1) / (mu beta**k (k+1))`` with ``q`` the ``p``-quantile."""
    if not 0.0 <= p <= 1.0:
        raise DomainError(f"lorenz requires 0 <= p <= 1, got {p}")
    z = p ** (1.0 / f.k)
    return f.k * f.beta * z ** (f.k + 1.0) / ((f.k + 1.0) * mean(f))


def bonferroni(f: PowerFamily, p: float) -> float:
    if not 0.0 < p <= 1.0:
        raise DomainError(f"bonferroni requires 0 < p <= 1, got {p}")
    return lorenz(f, p) / p


# -- characterization ------------------------------------------------------

def dtm(f: PowerFamily, x: float, y: float, uncorrected: bool = False) -> float:
    """Doubly truncated mean ``E[X | x < X < y]``.

    ``uncorrected`` uses the quoted ``beta**(k-1)`` normalizer, which is
    off by a factor of ``beta``.
    """
    if not 0.0 <= x < y <= f.beta:
        raise DomainError(f"dtm requires 0 <= x < y <= beta={f.beta}, got ({x}, {y})")
    k = f.k
    zx, zy = x / f.beta, y / f.beta
    val = k * f.beta * (zy ** (k + 1.0) - zx ** (k + 1.0)) / ((k + 1.0) * (cdf(f, y) - cdf(f, x)))
    return val * f.beta if uncorrected else val
