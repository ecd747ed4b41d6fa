"""Point estimators for the WPDF parameters ``(beta, gamma)``.

Four methods are provided:

* ``MLM``  maximum likelihood: ``beta = max(x)``, ``gamma = n / (2 sum ln(beta/x))``.
* ``MMLM`` keeps ``beta = max(x)`` and matches the coefficient of variation.
* ``PE``   matches two sample percentiles ``P_H`` and ``P_L``.
* ``MPE``  matches ``P_H`` and the sample median.

The arithmetic lives in :mod:`wpdf._kernels_numpy`, which the Monte Carlo
study also runs in batch; this module adds input validation, error
reporting and the likelihood bookkeeping.
"""

from __future__ import annotations

import enum
import math
from dataclasses import dataclass, field
from typing import List

import numpy as np

from . import _kernels_numpy as _k
from .errors import DegenerateSampleError, DomainError
from .family import PowerFamily


class Method(str, enum.Enum):
    MLM = "MLM"
    MMLM = "MMLM"
    PE = "PE"
    MPE = "MPE"

    @classmethod
    def parse(cls, name) -> "Method":
        if isinstance(name, cls):
            return name
        key = str(name).upper().replace(".", "").replace("-", "")
        aliases = {"MLE": "MLM", "MLM1": "MMLM", "PE1": "MPE"}
        try:
            return cls(aliases.get(key, key))
        except ValueError:
            raise DomainError(f"unknown estimation method {name!r}") from None


@dataclass(frozen=True)
class FitResult:
    method: Method
    beta_hat: float
    gamma_hat: float
    n: int
    log_likelihood: float
    out_of_support: int = 0
    notes: List[str] = field(default_factory=list)

    @property
    def k_hat(self) -> float:
        return 2.0 * self.gamma_hat

    @property
    def family(self) -> PowerFamily:
        return PowerFamily.wpdf(self.gamma_hat, self.beta_hat)

    def to_dict(self) -> dict:
        return {
            "method": self.method.value,
            "beta_hat": self.beta_hat,
            "gamma_hat": self.gamma_hat,
            "k_hat": self.k_hat,
            "n": self.n,
            "log_likelihood": self.log_likelihood,
            "out_of_support": self.out_of_support,
            "notes": list(self.notes),
        }


def _as_sample(data, minimum: int = 2) -> np.ndarray:
    x = np.asarray(data, dtype=float).ravel()
    if x.size == 0:
        raise DomainError("data must be non-empty")
    if not np.all(np.isfinite(x)):
        raise DomainError("data must be finite")
    if np.any(x <= 0):
        bad = x[x <= 0]
        raise DomainError(f"data must be strictly positive; got {bad[:5].tolist()}")
    if x.size < minimum:
        raise DomainError(f"at least {minimum} observations are required, got {x.size}")
    return x


def sample_quantile(data, q: float) -> float:
    """Order statistic interpolated linearly at 1-based position ``1 + (n-1) q``."""
    x = np.asarray(data, dtype=float).ravel()
    if x.size == 0:
        raise DomainError("sample_quantile of empty data")
    if not 0.0 <= q <= 1.0:
        raise DomainError(f"q must lie in [0, 1], got {q}")
    return float(_k.sorted_quantile(np.sort(x)[None, :], q)[0])


def wpdf_loglik(x: np.ndarray, beta: float, gamma: float) -> float:
    """``n ln(2 gamma) + (2 gamma - 1) sum ln x - 2 n gamma ln beta``."""
    n = x.size
    return n * math.log(2.0 * gamma) + (2.0 * gamma - 1.0) * float(np.sum(np.log(x))) - 2.0 * n * gamma * math.log(beta)


def _partial_loglik(x, beta, gamma):
    inside = x[x <= beta]
    outside = x.size - inside.size
    notes = []
    if outside:
        notes.append(f"{outside} observation(s) exceed beta_hat={beta:.6g}; log-likelihood uses the remaining {inside.size}")
    ll = wpdf_loglik(inside, beta, gamma) if inside.size else -math.inf
    return ll, outside, notes


def fit_mle(data) -> FitResult:
    x = _as_sample(data)
    beta, gamma = _k.mle(x[None, :])
    if not np.isfinite(gamma[0]):
        raise DegenerateSampleError("all observations are equal; the shape MLE is undefined", np.unique(x))
    b, g = float(beta[0]), float(gamma[0])
    return FitResult(Method.MLM, b, g, x.size, wpdf_loglik(x, b, g))


def fit_mmlm(data) -> FitResult:
    x = _as_sample(data)
    beta, gamma = _k.mmlm(x[None, :])
    if not np.isfinite(gamma[0]):
        raise DegenerateSampleError("sample variance is zero", np.unique(x))
    b, g = float(beta[0]), float(gamma[0])
    m = float(np.mean(x))
    s2 = float(np.var(x, ddof=1))
    return FitResult(Method.MMLM, b, g, x.size, wpdf_loglik(x, b, g), notes=[f"mean={m!r}", f"s2={s2!r}"])


def fit_percentile(data, H: float = 0.75, L: float = 0.25) -> FitResult:
    if not 0.0 < L < H < 1.0:
        raise DomainError(f"percentile levels need 0 < L < H < 1, got L={L}, H={H}")
    x = _as_sample(data)
    xs = np.sort(x)[None, :]
    p_hi = float(_k.sorted_quantile(xs, H)[0])
    p_lo = float(_k.sorted_quantile(xs, L)[0])
    beta, gamma = _k.percentile(xs, H, L)
    if not np.isfinite(gamma[0]):
        raise DegenerateSampleError(f"P_H and P_L coincide ({p_hi!r})", (p_hi, p_lo))
    b, g = float(beta[0]), float(gamma[0])
    ll, outside, notes = _partial_loglik(x, b, g)
    notes = [f"P_H={p_hi!r}", f"P_L={p_lo!r}"] + notes
    return FitResult(Method.PE, b, g, x.size, ll, outside, notes)


def fit_modified_percentile(data, H: float = 0.75) -> FitResult:
    if not 0.5 < H < 1.0:
        raise DomainError(f"modified percentile needs 0.5 < H < 1, got H={H}")
    x = _as_sample(data)
    xs = np.sort(x)[None, :]
    p_hi = float(_k.sorted_quantile(xs, H)[0])
    med = float(_k.sorted_quantile(xs, 0.5)[0])
    beta, gamma = _k.modified_percentile(xs, H)
    if not np.isfinite(gamma[0]):
        raise DegenerateSampleError(f"P_H and the median coincide ({p_hi!r})", (p_hi, med))
    b, g = float(beta[0]), float(gamma[0])
    ll, outside, notes = _partial_loglik(x, b, g)
    notes = [f"P_H={p_hi!r}", f"median={med!r}"] + notes
    return FitResult(Method.MPE, b, g, x.size, ll, outside, notes)


def fit(data, method="MLM", H: float = 0.75, L: float = 0.25) -> FitResult:
    method = Method.parse(method)
    if method is Method.MLM:
        return fit_mle(data)
    if method is Method.MMLM:
        return fit_mmlm(data)
    if method is Method.PE:
        return fit_percentile(data, H, L)
    return fit_modified_percentile(data, H)
