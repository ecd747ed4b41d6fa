"""Shared check list: each closed form next to quadrature of its defining integral."""

from wpdf import oracle
from wpdf import properties as pr
from wpdf.family import PowerFamily

K_GRID = [0.5, 1.0, 2.0, 4.0, 7.0]
BETA_GRID = [0.5, 1.0, 3.0]
GRID = [(k, b) for k in K_GRID for b in BETA_GRID]


def closed_form_checks(k, beta):
    """List of ``(name, closed_form, quadrature)`` for one family."""
    f = PowerFamily.pfd(k, beta)
    checks = []
    for r in (1, 2, 3):
        checks.append((f"raw{r}", pr.raw_moment(f, r), oracle.raw_moment(f, r)))
        if k > r + 0.5:
            checks.append((f"inv{r}", pr.inverse_moment(f, r), oracle.inverse_moment(f, r)))
        checks.append((f"inc{r}", pr.incomplete_moment(f, r, 0.6 * beta), oracle.incomplete_moment(f, r, 0.6 * beta)))
        checks.append((f"cond{r}", pr.conditional_moment(f, r, 0.3 * beta), oracle.conditional_moment(f, r, 0.3 * beta)))
    checks.append(("variance", pr.variance(f), oracle.variance(f)))
    for t in (-2.0, 1.0, 3.0):
        checks.append((f"mgf{t}", pr.mgf(f, t).value, oracle.mgf(f, t)))
    for x in (0.0, 0.25 * beta, 0.8 * beta):
        checks.append((f"mrf{x}", pr.mrf(f, x), oracle.mrf(f, x)))
        checks.append((f"vit{x}", pr.vitality(f, x), oracle.vitality(f, x)))
    for s in (0.5, 1.5, 3.0):
        if s * (k - 1) + 1 > 0.2:
            checks.append((f"info{s}", pr.information_fn(f, s), oracle.information_fn(f, s)))
            checks.append((f"renyi{s}", pr.renyi_entropy(f, s), oracle.renyi_entropy(f, s)))
    checks.append(("shannon", pr.shannon_entropy(f), oracle.shannon_entropy(f)))
    for p in (0.1, 0.5, 0.9):
        checks.append((f"lorenz{p}", pr.lorenz(f, p), oracle.lorenz(f, p)))
        checks.append((f"bonferroni{p}", pr.bonferroni(f, p), oracle.lorenz(f, p) / p))
    checks.append(("dtm", pr.dtm(f, 0.2 * beta, 0.7 * beta), oracle.dtm(f, 0.2 * beta, 0.7 * beta)))
    return checks


def mismatches(k, beta, rtol=1e-8, atol=1e-13):
    return [(n, a, b) for n, a, b in closed_form_checks(k, beta) if abs(a - b) > max(rtol * abs(b), atol)]
