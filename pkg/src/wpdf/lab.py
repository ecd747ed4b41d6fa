"""Model comparison on lifetime data: datasets, likelihood, criteria, TTT."""

from __future__ import annotations

import math
from dataclasses import dataclass
from importlib import resources
from typing import Iterable, List, NamedTuple, Tuple

import numpy as np

from .errors import DomainError
from .estimators import FitResult, _as_sample, fit_mle
from .family import Origin, PowerFamily, make_family

NUM_PARAMS = {Origin.WPDF: 2, Origin.PFD: 2, Origin.MWPDF1: 3, Origin.MWPDF2: 3}
DEFAULT_MODELS = (Origin.WPDF, Origin.PFD, Origin.MWPDF1, Origin.MWPDF2)


@dataclass(frozen=True)
class Dataset:
    name: str
    values: Tuple[float, ...]
    source_note: str = ""

    def __post_init__(self):
        if not self.values:
            raise DomainError(f"dataset {self.name!r} is empty")
        if any(not v > 0 for v in self.values):
            raise DomainError(f"dataset {self.name!r} has non-positive values")

    def __len__(self):
        return len(self.values)

    def as_array(self) -> np.ndarray:
        return np.asarray(self.values, dtype=float)


BUILTIN_NOTES = {
    "chemotherapy": (
        "Survival times in years of patients given chemotherapy alone (Bekker, Roux and Mostert, 2000). "
        "The source text states 46 patients but lists 45 values; the 45 listed values are used."
    ),
    "devices": (
        "Failure times of 30 devices (Meeker and Escobar, 1998, Table 15.1). "
        "Values of 300 are treated as exact failures, not censored."
    ),
}


def parse_values(text: str) -> List[float]:
    """One number per line (commas or whitespace also separate); ``#`` starts a comment."""
    out = []
    for lineno, line in enumerate(text.splitlines(), 1):
        line = line.split("#", 1)[0].replace(",", " ")
        for tok in line.split():
            try:
                out.append(float(tok))
            except ValueError:
                raise DomainError(f"line {lineno}: not a number: {tok!r}") from None
    return out


def builtin_dataset(name: str) -> Dataset:
    if name not in BUILTIN_NOTES:
        raise DomainError(f"unknown dataset {name!r}; choose from {sorted(BUILTIN_NOTES)}")
    text = resources.files("wpdf").joinpath("data").joinpath(f"{name}.txt").read_text()
    return Dataset(name, tuple(parse_values(text)), BUILTIN_NOTES[name])


def load_dataset(spec: str) -> Dataset:
    """A builtin name, or a path to a one-column numeric file."""
    if spec in BUILTIN_NOTES:
        return builtin_dataset(spec)
    try:
        with open(spec) as fh:
            text = fh.read()
    except OSError as exc:
        raise DomainError(f"cannot read data file {spec!r}: {exc}") from None
    return Dataset(spec, tuple(parse_values(text)), f"loaded from {spec}")


def out_of_support(f: PowerFamily, data) -> int:
    x = np.asarray(data, dtype=float)
    return int(np.count_nonzero(~((x > 0) & (x <= f.beta))))


def log_likelihood(f: PowerFamily, data) -> float:
    """``n ln k + (k-1) sum ln x - n k ln beta``; ``-inf`` if any point is outside ``(0, beta]``.

    :func:`out_of_support` reports how many points caused a ``-inf``.
    """
    x = np.asarray(data, dtype=float).ravel()
    if x.size == 0:
        raise DomainError("log_likelihood of empty data")
    if out_of_support(f, x):
        return -math.inf
    n = x.size
    return n * math.log(f.k) + (f.k - 1.0) * float(np.sum(np.log(x))) - n * f.k * math.log(f.beta)


class InfoCriteria(NamedTuple):
    aic: float
    caic: float
    bic: float
    hqic: float


def caic(loglik: float, k: int, n: int) -> float:
    """Small-sample corrected AIC, ``aic + 2k(k+1)/(n-k-1)``."""
    if n <= k + 1:
        raise DomainError(f"CAIC needs n > k + 1 (n={n}, k={k})")
    return 2 * k - 2 * loglik + 2.0 * k * (k + 1) / (n - k - 1)


def info_criteria(loglik: float, k: int, n: int) -> InfoCriteria:
    """AIC, CAIC, BIC and HQIC.  CAIC is NaN when ``n <= k + 1``; :func:`caic` raises instead."""
    aic = 2 * k - 2 * loglik
    c = caic(loglik, k, n) if n > k + 1 else math.nan
    bic = k * math.log(n) - 2 * loglik
    hqic = 2 * k * math.log(math.log(n)) - 2 * loglik
    return InfoCriteria(aic, c, bic, hqic)


@dataclass(frozen=True)
class ModelReport:
    model: Origin
    family: PowerFamily
    fit: FitResult
    num_params: int
    log_likelihood: float
    aic: float
    caic: float
    bic: float
    hqic: float

    def criteria(self) -> InfoCriteria:
        return InfoCriteria(self.aic, self.caic, self.bic, self.hqic)


def profile_family(origin: Origin, k: float, beta: float) -> PowerFamily:
    """Canonical ``(gamma, theta)`` for a fitted exponent.

    ``(gamma, theta)`` of the modified models enter only through ``k``, so
    the representative ``theta = 1``, ``gamma = k / 2`` is reported.
    """
    if origin is Origin.PFD:
        return make_family(origin, beta=beta, gamma=k)
    if origin is Origin.WPDF:
        return make_family(origin, beta=beta, gamma=k / 2.0)
    return make_family(origin, beta=beta, gamma=k / 2.0, theta=1.0)


def compare_models(data, models: Iterable = DEFAULT_MODELS) -> Tuple[List[ModelReport], List[str]]:
    """Fit each model by maximum likelihood and rank by AIC.

    Returns the reports sorted by AIC (ties: fewer parameters, then the
    order given) and a list of error messages for models that could not
    be fitted.
    """
    x = _as_sample(data)
    order = [Origin(m) if not isinstance(m, Origin) else m for m in models]
    reports, errors = [], []
    for origin in order:
        try:
            fit = fit_mle(x)
            fam = profile_family(origin, fit.k_hat, fit.beta_hat)
            ll = log_likelihood(fam, x)
            p = NUM_PARAMS[origin]
            crit = info_criteria(ll, p, x.size)
            reports.append(ModelReport(origin, fam, fit, p, ll, *crit))
        except DomainError as exc:
            errors.append(f"{origin.label}: {exc}")
    rank = {o: i for i, o in enumerate(order)}
    reports.sort(key=lambda r: (r.aic, r.num_params, rank[r.model]))
    return reports, errors


def ttt_transform(data) -> List[Tuple[float, float]]:
    """Scaled total-time-on-test points ``(i/n, T_i)``."""
    x = np.sort(np.asarray(data, dtype=float).ravel())
    if x.size == 0:
        raise DomainError("ttt_transform of empty data")
    if np.any(x <= 0):
        raise DomainError("ttt_transform needs positive data")
    n = x.size
    total = math.fsum(x)
    # numerator as one exact sum, so constant data gives exactly 1
    t = [math.fsum(np.concatenate((x[:i], np.full(n - i, x[i - 1])))) / total for i in range(1, n + 1)]
    return [(i / n, ti) for i, ti in enumerate(t, 1)]
