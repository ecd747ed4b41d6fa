"""The bounded power-law family and its elementary functions.

PFD, WPDF and the two modified WPDF variants all have the cdf
``G(x) = (x / beta) ** k`` on ``(0, beta)``; they differ only in how the
shape exponent ``k`` is assembled from ``gamma`` and ``theta``:

==========  ====================
origin      k
==========  ====================
PFD         gamma
WPDF        2 * gamma
MWPDF1      gamma * theta + gamma
MWPDF2      gamma / theta + gamma
==========  ====================

The weight parameter ``alpha`` of the weighting construction does not
survive into the resulting density and is not represented here.
"""

from __future__ import annotations

import enum
import math
from dataclasses import dataclass, field
from typing import Optional

import numpy as np

from . import rng
from .errors import DomainError


class Origin(str, enum.Enum):
    PFD = "pfd"
    WPDF = "wpdf"
    MWPDF1 = "mwpdf1"
    MWPDF2 = "mwpdf2"

    @property
    def label(self) -> str:
        return {"pfd": "PFD", "wpdf": "WPDF", "mwpdf1": "MWPDF-1", "mwpdf2": "MWPDF-2"}[self.value]


class PdfShape(str, enum.Enum):
    DECREASING = "decreasing"
    FLAT = "flat"
    INCREASING = "increasing"


class HazardShape(str, enum.Enum):
    INCREASING = "increasing"
    BATHTUB = "bathtub"


class EtaTrend(str, enum.Enum):
    DECREASING = "decreasing"
    CONSTANT_LIKE = "constant-like"
    INCREASING = "increasing"


def _exponent(origin: Origin, gamma: float, theta: Optional[float]) -> float:
    if origin is Origin.PFD:
        return gamma
    if origin is Origin.WPDF:
        return 2.0 * gamma
    if origin is Origin.MWPDF1:
        return gamma * theta + gamma
    return gamma / theta + gamma


@dataclass(frozen=True)
class PowerFamily:
    """Immutable law with cdf ``(x / beta) ** k`` on ``(0, beta)``.

    ``gamma`` and ``theta`` record the parameterization that produced ``k``;
    use :func:`make_family` or the classmethods rather than passing ``k``
    by hand.
    """

    beta: float
    k: float
    origin: Origin = Origin.PFD
    gamma: Optional[float] = None
    theta: Optional[float] = field(default=None)

    def __post_init__(self):
        if not (self.beta > 0 and math.isfinite(self.beta)):
            raise DomainError(f"beta must be a positive finite number, got {self.beta}")
        if not (self.k > 0 and math.isfinite(self.k)):
            raise DomainError(f"k must be a positive finite number, got {self.k}")

    @classmethod
    def pfd(cls, gamma: float, beta: float = 1.0) -> "PowerFamily":
        return make_family(Origin.PFD, beta=beta, gamma=gamma)

    @classmethod
    def wpdf(cls, gamma: float, beta: float = 1.0) -> "PowerFamily":
        return make_family(Origin.WPDF, beta=beta, gamma=gamma)

    @classmethod
    def mwpdf1(cls, gamma: float, theta: float, beta: float = 1.0) -> "PowerFamily":
        return make_family(Origin.MWPDF1, beta=beta, gamma=gamma, theta=theta)

    @classmethod
    def mwpdf2(cls, gamma: float, theta: float, beta: float = 1.0) -> "PowerFamily":
        return make_family(Origin.MWPDF2, beta=beta, gamma=gamma, theta=theta)

    def to_dict(self) -> dict:
        return {
            "origin": self.origin.value,
            "beta": self.beta,
            "gamma": self.gamma,
            "theta": self.theta,
            "k": self.k,
        }

    @classmethod
    def from_dict(cls, data: dict) -> "PowerFamily":
        origin = Origin(data["origin"])
        if data.get("gamma") is None:
            return cls(beta=float(data["beta"]), k=float(data["k"]), origin=origin)
        fam = make_family(origin, beta=data["beta"], gamma=data["gamma"], theta=data.get("theta"))
        if "k" in data and data["k"] is not None and not math.isclose(fam.k, data["k"], rel_tol=1e-12):
            raise DomainError(f"k={data['k']} is inconsistent with {origin.value} parameters (k={fam.k})")
        return fam


def make_family(origin, *, beta: float, gamma: float, theta: Optional[float] = None) -> PowerFamily:
    """Build a family from its originating parameterization.

    Raises :class:`DomainError` naming the offending parameter when
    ``beta`` or ``gamma`` is not positive, or when ``theta`` is missing,
    negative (MWPDF1) or not strictly positive (MWPDF2).
    """
    origin = Origin(origin)
    beta = float(beta)
    gamma = float(gamma)
    if not beta > 0:
        raise DomainError(f"beta must be > 0, got {beta}")
    if not gamma > 0:
        raise DomainError(f"gamma must be > 0, got {gamma}")
    if origin in (Origin.MWPDF1, Origin.MWPDF2):
        if theta is None:
            raise DomainError(f"theta is required for {origin.value}")
        theta = float(theta)
        if origin is Origin.MWPDF1 and not theta >= 0:
            raise DomainError(f"theta must be >= 0 for mwpdf1, got {theta}")
        if origin is Origin.MWPDF2 and not theta > 0:
            raise DomainError(f"theta must be > 0 for mwpdf2, got {theta}")
    elif theta is not None:
        raise DomainError(f"theta is not a parameter of {origin.value}")
    return PowerFamily(beta=beta, k=_exponent(origin, gamma, theta), origin=origin, gamma=gamma, theta=theta)


def _result(values):
    values = np.asarray(values)
    return float(values) if values.ndim == 0 else values


def pdf(f: PowerFamily, x):
    """Density ``k x^(k-1) / beta^k`` on ``[0, beta]``, zero elsewhere.

    At ``x = 0`` the density is ``+inf`` when ``k < 1``.
    """
    x = np.asarray(x, dtype=float)
    inside = (x >= 0.0) & (x <= f.beta)
    z = np.where(inside, x / f.beta, 1.0)
    with np.errstate(divide="ignore"):
        val = f.k / f.beta * np.power(z, f.k - 1.0)
    return _result(np.where(inside, val, 0.0))


def logpdf(f: PowerFamily, x):
    x = np.asarray(x, dtype=float)
    inside = (x >= 0.0) & (x <= f.beta)
    z = np.where(inside, x / f.beta, 1.0)
    with np.errstate(divide="ignore"):
        val = math.log(f.k / f.beta) + (f.k - 1.0) * np.log(z)
    val = np.where(inside & (z == 0.0) & (f.k == 1.0), math.log(f.k / f.beta), val)
    return _result(np.where(inside, val, -np.inf))


def cdf(f: PowerFamily, x):
    x = np.asarray(x, dtype=float)
    return _result(np.power(np.clip(x / f.beta, 0.0, 1.0), f.k))


def sf(f: PowerFamily, x):
    return _result(1.0 - np.asarray(cdf(f, x)))


def _check_interior(f: PowerFamily, x: np.ndarray, what: str) -> None:
    if np.any(~((x > 0.0) & (x < f.beta))):
        raise DomainError(f"{what} requires 0 < x < beta={f.beta}; survival vanishes at beta")


def hrf(f: PowerFamily, x):
    """Hazard rate ``pdf / sf`` for ``0 < x < beta``."""
    x = np.asarray(x, dtype=float)
    _check_interior(f, x, "hrf")
    return _result(np.asarray(pdf(f, x)) / np.asarray(sf(f, x)))


def mills(f: PowerFamily, x):
    """Mills ratio ``sf / pdf``, the reciprocal hazard."""
    x = np.asarray(x, dtype=float)
    _check_interior(f, x, "mills")
    return _result(np.asarray(sf(f, x)) / np.asarray(pdf(f, x)))


def quantile(f: PowerFamily, u):
    u = np.asarray(u, dtype=float)
    if np.any(~((u >= 0.0) & (u <= 1.0))):
        raise DomainError("quantile requires 0 <= u <= 1")
    return _result(f.beta * np.power(u, 1.0 / f.k))


@dataclass(frozen=True)
class SampleBatch:
    values: np.ndarray
    seed: Optional[int] = None

    def __post_init__(self):
        if len(self.values) == 0:
            raise DomainError("a sample batch cannot be empty")

    def __len__(self):
        return len(self.values)


def sample(f: PowerFamily, n: int, seed: int) -> SampleBatch:
    """Inverse-transform draws ``beta * U ** (1/k)`` with ``U`` on (0, 1]."""
    if n < 1:
        raise DomainError(f"sample size must be >= 1, got {n}")
    u = rng.uniforms(seed, n)
    return SampleBatch(values=f.beta * np.power(u, 1.0 / f.k), seed=seed)


def pdf_shape(f: PowerFamily) -> PdfShape:
    if f.k < 1.0:
        return PdfShape.DECREASING
    if f.k == 1.0:
        return PdfShape.FLAT
    return PdfShape.INCREASING


def eta_trend(f: PowerFamily) -> EtaTrend:
    """Trend of Glaser's ``eta(x) = -g'(x)/g(x) = -(k-1)/x``.

    ``eta'(x) = (k-1)/x**2`` so the sign of ``k - 1`` decides it.
    """
    if f.k > 1.0:
        return EtaTrend.INCREASING
    if f.k < 1.0:
        return EtaTrend.DECREASING
    return EtaTrend.CONSTANT_LIKE


def hazard_turning_point(f: PowerFamily) -> Optional[float]:
    """Location of the hazard minimum, ``beta * (1-k)**(1/k)``, if ``k < 1``."""
    if f.k >= 1.0:
        return None
    return f.beta * (1.0 - f.k) ** (1.0 / f.k)


def hazard_shape(f: PowerFamily) -> HazardShape:
    """Exact hazard shape on the bounded support.

    The hazard always diverges at ``beta``.  For ``k >= 1`` it is
    increasing throughout; for ``k < 1`` it also diverges at 0 and is
    bathtub-shaped with its minimum at :func:`hazard_turning_point`.
    """
    return HazardShape.INCREASING if f.k >= 1.0 else HazardShape.BATHTUB
