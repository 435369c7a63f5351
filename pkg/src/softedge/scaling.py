"""Soft-edge scaling and expansion parameters, and the index shift n'."""

from __future__ import annotations

import math
from dataclasses import dataclass

from .errors import DomainError


@dataclass(frozen=True)
class ScalingParams:
    """Edge location mu, edge scale sigma, expansion parameter h and the
    Laguerre shape parameter tau (0 for the Gaussian ensembles)."""

    mu: float
    sigma: float
    h: float
    tau: float

    def x_of_s(self, s):
        return self.mu + self.sigma * s

    def s_of_x(self, x):
        return (x - self.mu) / self.sigma


def scaling_params(n_eff, p_eff=None):
    """Scaling parameters at (possibly half-integer) indices.

    ``p_eff=None`` selects the Gaussian parameters.
    """
    if not n_eff > 0:
        raise DomainError(f"n_eff must be positive, got {n_eff!r}")
    if p_eff is None:
        mu = math.sqrt(2 * n_eff)
        sigma = 2 ** -0.5 * n_eff ** (-1 / 6)
        return ScalingParams(mu, sigma, 0.25 * n_eff ** (-2 / 3), 0.0)
    if not p_eff > 0:
        raise DomainError(f"p_eff must be positive, got {p_eff!r}")
    rn, rp = math.sqrt(n_eff), math.sqrt(p_eff)
    a = rn + rp
    b = 1 / rn + 1 / rp
    mu = a * a
    sigma = a * b ** (1 / 3)
    tau = 4 / (a * b)
    h = 0.25 * b ** (4 / 3)
    return ScalingParams(mu, sigma, h, tau)


def shifted_index(beta, n, p=None):
    """The centering shift: beta=1 -> (n - 1/2, p - 1/2), beta=2 -> (n, p),
    beta=4 -> (2n + 1/2, 2p + 1/2).  Half-integers are exact in binary64."""
    if beta == 1:
        return n - 0.5, None if p is None else p - 0.5
    if beta == 2:
        return float(n), None if p is None else float(p)
    if beta == 4:
        return 2 * n + 0.5, None if p is None else 2 * p + 0.5
    raise DomainError(f"beta must be 1, 2 or 4, got {beta!r}")
