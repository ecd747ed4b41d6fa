"""Monte Carlo comparison of the four estimators.

For each ``(n, beta, gamma)`` setting, ``replications`` WPDF samples are
drawn and every requested estimator is applied to the same samples.
Replication ``r`` of a setting always uses the substream keyed by
``(n, beta, gamma, r)`` under the master seed, and per-replication
estimates are reassembled in replication order before any averaging, so
the result does not depend on how the work was split across workers.
"""

from __future__ import annotations

import json
import math
from concurrent.futures import ThreadPoolExecutor
from dataclasses import asdict, dataclass, field
from typing import List, NamedTuple, Sequence, Tuple

import numpy as np

from . import kernels, rng
from .errors import DomainError
from .estimators import Method

DEFAULT_SAMPLE_SIZES = (40, 100)
DEFAULT_PARAM_PAIRS = ((1.0, 2.0), (3.0, 2.0), (4.0, 3.0))
DEFAULT_REPLICATIONS = 5000


@dataclass(frozen=True)
class StudyConfig:
    replications: int = DEFAULT_REPLICATIONS
    sample_sizes: Tuple[int, ...] = DEFAULT_SAMPLE_SIZES
    param_pairs: Tuple[Tuple[float, float], ...] = DEFAULT_PARAM_PAIRS
    methods: Tuple[Method, ...] = tuple(Method)
    master_seed: int = rng.DEFAULT_SEED
    H: float = 0.75
    L: float = 0.25

    def __post_init__(self):
        object.__setattr__(self, "sample_sizes", tuple(int(n) for n in self.sample_sizes))
        object.__setattr__(self, "param_pairs", tuple((float(b), float(g)) for b, g in self.param_pairs))
        object.__setattr__(self, "methods", tuple(Method.parse(m) for m in self.methods))
        if self.replications < 1:
            raise DomainError(f"replications must be >= 1, got {self.replications}")
        if not self.sample_sizes or any(n < 2 for n in self.sample_sizes):
            raise DomainError("every sample size must be >= 2")
        if not self.param_pairs or any(not (b > 0 and g > 0) for b, g in self.param_pairs):
            raise DomainError("every (beta, gamma) pair must be strictly positive")
        if not self.methods:
            raise DomainError("at least one method is required")
        if not 0.0 < self.L < self.H < 1.0 or not self.H > 0.5:
            raise DomainError(f"need 0 < L < H < 1 and H > 0.5, got L={self.L}, H={self.H}")
        if self.master_seed < 0:
            raise DomainError("master_seed must be non-negative")

    @classmethod
    def from_dict(cls, data: dict) -> "StudyConfig":
        known = {"replications", "sample_sizes", "param_pairs", "methods", "master_seed", "H", "L"}
        unknown = set(data) - known
        if unknown:
            raise DomainError(f"unknown study config keys: {sorted(unknown)}")
        return cls(**data)

    @classmethod
    def from_json(cls, path) -> "StudyConfig":
        with open(path) as fh:
            return cls.from_dict(json.load(fh))

    def to_dict(self) -> dict:
        d = asdict(self)
        d["methods"] = [m.value for m in self.methods]
        d["param_pairs"] = [list(p) for p in self.param_pairs]
        d["sample_sizes"] = list(self.sample_sizes)
        return d


@dataclass(frozen=True)
class StudyCell:
    method: Method
    n: int
    beta_true: float
    gamma_true: float
    mean_beta_hat: float
    mean_gamma_hat: float
    mse_beta: float
    mse_gamma: float
    se_mean_beta: float
    se_mean_gamma: float
    se_mse_beta: float
    se_mse_gamma: float
    failures: int = 0
    replications: int = field(default=0)


class AnalyticMoments(NamedTuple):
    e_beta_hat: float
    mse_beta_hat: float
    e_gamma_hat: float
    mse_gamma_hat: float


def mle_analytic_oracle(n: int, beta: float, gamma: float) -> AnalyticMoments:
    """Exact sampling moments of the maximum-likelihood estimators.

    With ``k = 2 gamma``, the sample maximum has cdf ``(x/beta)**(n k)``,
    and ``sum ln(max/x_i)`` is Gamma(n-1, rate k), which gives the first
    two moments of ``gamma_hat = n / (2 sum ln(max/x_i))``.
    """
    if n < 4:
        raise DomainError(f"second moment of gamma_hat needs n >= 4, got {n}")
    k = 2.0 * gamma
    nk = n * k
    e_b = beta * nk / (nk + 1.0)
    e_b2 = beta**2 * nk / (nk + 2.0)
    e_g = nk / (2.0 * (n - 2))
    e_g2 = n * n * k * k / (4.0 * (n - 2) * (n - 3))
    return AnalyticMoments(e_b, e_b2 - 2.0 * beta * e_b + beta**2, e_g, e_g2 - 2.0 * gamma * e_g + gamma**2)


def setting_key(n: int, beta: float, gamma: float) -> Tuple[int, int, int]:
    return (int(n), rng.float_key(beta), rng.float_key(gamma))


def draw_block(master_seed: int, n: int, beta: float, gamma: float, start: int, stop: int) -> np.ndarray:
    """Samples for replications ``start..stop-1`` of one setting, one per row."""
    key = setting_key(n, beta, gamma)
    u = np.empty((stop - start, n))
    for i, r in enumerate(range(start, stop)):
        u[i] = rng.uniforms(master_seed, n, *key, r)
    return beta * u ** (1.0 / (2.0 * gamma))


def _run_block(cfg: StudyConfig, n, beta, gamma, start, stop, backend):
    x = draw_block(cfg.master_seed, n, beta, gamma, start, stop)
    return backend.fit_all(x, cfg.H, cfg.L, cfg.H)


def _summarize(method, n, beta, gamma, b, g) -> StudyCell:
    ok = np.isfinite(b) & np.isfinite(g)
    m = int(ok.sum())
    b, g = b[ok], g[ok]
    eb2 = (b - beta) ** 2
    eg2 = (g - gamma) ** 2

    def se(v):
        return float(np.std(v, ddof=1) / math.sqrt(m)) if m > 1 else math.nan

    nan = math.nan
    return StudyCell(
        method=method,
        n=n,
        beta_true=beta,
        gamma_true=gamma,
        mean_beta_hat=float(np.mean(b)) if m else nan,
        mean_gamma_hat=float(np.mean(g)) if m else nan,
        mse_beta=float(np.mean(eb2)) if m else nan,
        mse_gamma=float(np.mean(eg2)) if m else nan,
        se_mean_beta=se(b),
        se_mean_gamma=se(g),
        se_mse_beta=se(eb2),
        se_mse_gamma=se(eg2),
        failures=int(ok.size - m),
        replications=m,
    )


def run_study(cfg: StudyConfig, workers: int = 1, block_size: int = 1000, backend=None) -> List[StudyCell]:
    """Run every ``(n, beta, gamma)`` setting and summarize each method.

    Cells come back ordered by sample size, then method, then parameter
    pair, the usual layout for estimator-comparison tables.
    """
    backend = backend or kernels
    if isinstance(backend, str):
        backend = kernels.get_backend(backend)
    if block_size < 1:
        raise DomainError("block_size must be >= 1")
    tasks = []
    for n in cfg.sample_sizes:
        for beta, gamma in cfg.param_pairs:
            for start in range(0, cfg.replications, block_size):
                tasks.append((n, beta, gamma, start, min(start + block_size, cfg.replications)))

    def run(task):
        return _run_block(cfg, *task, backend)

    if workers > 1:
        with ThreadPoolExecutor(max_workers=workers) as pool:
            results = list(pool.map(run, tasks))
    else:
        results = [run(t) for t in tasks]

    by_setting = {}
    for task, (b, g) in zip(tasks, results):
        by_setting.setdefault(task[:3], []).append((task[3], b, g))

    column = {m: i for i, m in enumerate(kernels.METHODS)}
    cells = []
    for n in cfg.sample_sizes:
        for method in cfg.methods:
            for beta, gamma in cfg.param_pairs:
                parts = sorted(by_setting[(n, beta, gamma)], key=lambda p: p[0])
                b = np.concatenate([p[1][:, column[method.value]] for p in parts])
                g = np.concatenate([p[2][:, column[method.value]] for p in parts])
                cells.append(_summarize(method, n, beta, gamma, b, g))
    return cells


def find_cell(cells: Sequence[StudyCell], method, n, beta, gamma) -> StudyCell:
    method = Method.parse(method)
    for c in cells:
        if c.method is method and c.n == n and c.beta_true == beta and c.gamma_true == gamma:
            return c
    raise KeyError((method, n, beta, gamma))
