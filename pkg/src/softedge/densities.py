"""Exact finite-n level densities of the Gaussian and Laguerre ensembles.

Index resolution
----------------
Every Laguerre formula carries one hidden parameter ``q``; each wave-function
index ``j`` stands for the pair ``(j, j + q)``.

=====  ==============  ===================================================
beta   hidden q        density
=====  ==============  ===================================================
2      p - n           ``sum_{j<n} phi_{j, j+q}^2``
1      p - n           ``rho_2(n) + psi_{n-1} (1 + Psi_n)``
4      2 (p - n)       ``(rho_2(2n+1) + psi_{2n} Psi_{2n+1}) / 2``
=====  ==============  ===================================================

so for beta = 4 the shadow unitary ensemble is ``(2n+1, 2p+1)`` and the
wave functions are ``psi_{2n, 2p}`` and ``Psi_{2n+1, 2p+1}``.  The Gaussian
ensembles use the same rows with Hermite functions.

``rho_exact`` returns rho_4 itself (mass n); the factor 2 of the soft-edge
convention is applied only by :func:`rho_rescaled`.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .errors import DomainError
from .scaling import scaling_params, shifted_index
from .wavefns import Family, WaveTable


@dataclass(frozen=True)
class EnsembleSpec:
    beta: int
    n: int
    p: float | None = None  # None -> Gaussian

    def __post_init__(self):
        if self.beta not in (1, 2, 4):
            raise DomainError(f"beta must be 1, 2 or 4, got {self.beta!r}")
        if int(self.n) != self.n or self.n < 1:
            raise DomainError(f"n must be a positive integer, got {self.n!r}")
        if self.p is not None:
            lower = self.n - 0.5 if self.beta == 4 else self.n - 1
            if not self.p > lower:
                raise DomainError(f"beta={self.beta} needs p > {lower}, got {self.p!r}")

    @property
    def gaussian(self):
        return self.p is None

    @property
    def hidden_q(self):
        if self.p is None:
            return None
        return 2 * (self.p - self.n) if self.beta == 4 else self.p - self.n

    @property
    def family(self):
        if self.p is None:
            return Family.hermite()
        return Family.laguerre(self.hidden_q)

    @property
    def max_index(self):
        """Largest wave-function index touched by the density formula."""
        return {1: self.n, 2: self.n - 1, 4: 2 * self.n + 1}[self.beta]

    def scaling(self):
        """Scaling parameters at the shifted indices (n', p')."""
        n_eff, p_eff = shifted_index(self.beta, self.n, self.p)
        return scaling_params(n_eff, p_eff)


def _points(spec, x):
    x = np.atleast_1d(np.asarray(x, dtype=float)).ravel()
    if not spec.gaussian and np.any(x <= 0):
        raise DomainError("Laguerre densities live on x > 0")
    return x


def _reshape(x, values):
    if np.ndim(x) == 0:
        return float(values[0])
    return values.reshape(np.shape(x))


def _rho_from_table(spec, t, alt=False):
    n = spec.n
    if spec.beta == 2:
        return t.rho2(n)
    if spec.beta == 1:
        if alt:
            return t.rho2(n - 1) + t.psi(n - 1) * (1 + t.Psi(n - 2))
        return t.rho2(n) + t.psi(n - 1) * (1 + t.Psi(n))
    if alt:
        return 0.5 * (t.rho2(2 * n) + t.psi(2 * n) * t.Psi(2 * n - 1))
    return 0.5 * (t.rho2(2 * n + 1) + t.psi(2 * n) * t.Psi(2 * n + 1))


def rho_exact(spec, x):
    """Level density rho_{beta,n}(x) (rho_4 itself for beta = 4)."""
    pts = _points(spec, x)
    t = WaveTable(spec.family, spec.max_index, pts)
    return _reshape(x, _rho_from_table(spec, t))


def rho_exact_altform(spec, x):
    """The second, index-lowered form of the same density; for cross-checks."""
    pts = _points(spec, x)
    t = WaveTable(spec.family, spec.max_index, pts)
    return _reshape(x, _rho_from_table(spec, t, alt=True))


def rho_rescaled(spec, s):
    """sigma' rho(mu' + sigma' s), with 2 rho_4 for beta = 4, at (n', p')."""
    sp = spec.scaling()
    x = sp.x_of_s(np.asarray(s, dtype=float))
    if not spec.gaussian and np.any(x <= 0):
        raise DomainError("rescaled point leaves the Laguerre domain x > 0")
    vals = sp.sigma * np.asarray(rho_exact(spec, x))
    if spec.beta == 4:
        vals = 2 * vals
    return vals[()] if np.ndim(vals) == 0 else vals


def psi_sharp_rescaled(family, n, s):
    """sigma psi_sharp_n(mu + sigma s) with parameters centered at n + 1/2
    (and p + 1/2 = n + q + 1/2 for Laguerre)."""
    sp = wave_scaling(family, n)
    x = sp.x_of_s(np.asarray(s, dtype=float))
    t = WaveTable(family, n, np.ravel(x))
    return _reshape(s, sp.sigma * 2 * t.psi(n))


def Psi_sharp_rescaled(family, n, s):
    """Psi_sharp_n(mu + sigma s), same centering as :func:`psi_sharp_rescaled`."""
    sp = wave_scaling(family, n)
    x = sp.x_of_s(np.asarray(s, dtype=float))
    t = WaveTable(family, n, np.ravel(x))
    return _reshape(s, t.Psi(n))


def wave_scaling(family, n):
    if family.is_hermite:
        return scaling_params(n + 0.5)
    return scaling_params(n + 0.5, n + family.q + 0.5)
