"""Hermite and Laguerre wave functions and the bi-orthonormal systems built
from them.

Notation
--------
``phi_n``
    Orthonormal wave function: Hermite ``phi_{n,inf}`` or Laguerre
    ``phi_{n, n+q}`` along the diagonal at fixed hidden parameter ``q > -1``.
``chi_n, psi_n``
    The rescaled pair with ``<chi_n, psi_m> = [n == m]``; ``psi_sharp = 2 psi``.
``eps_n``
    ``eps psi_sharp_n``, the antiderivative of ``psi_sharp_n`` with the
    symmetric integration constant of the epsilon operator.
``Psi_n``
    ``Psi_sharp_n = eps_n - [n even]``, the antiderivative vanishing at +inf.

Both antiderivatives are computed without quadrature from the integral
recursion ``eps_{n+1} = eps_{n-1} - chi_n`` started at ``eps_{-1} = 0`` and a
closed-form ``eps_0`` (normal or gamma distribution function).
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np
from scipy import special as sc

from .errors import CapabilityError, DomainError
from .specfun import gauss_cdf_sym, gauss_tail2, reg_lower_gamma, reg_upper_gamma

MAX_INDEX = 10_000
MAX_Q = 1.0e6

_RESCALE = 1e150


@dataclass(frozen=True)
class Family:
    """Wave-function family: Hermite, or Laguerre with hidden parameter q."""

    kind: str
    q: float | None = None

    def __post_init__(self):
        if self.kind == "hermite":
            if self.q is not None:
                raise DomainError("Hermite family carries no q")
        elif self.kind == "laguerre":
            if self.q is None or not self.q > -1:
                raise DomainError(f"Laguerre family needs q > -1, got {self.q!r}")
            if self.q > MAX_Q:
                raise CapabilityError(f"q = {self.q} exceeds supported range {MAX_Q:g}")
        else:
            raise DomainError(f"unknown family kind {self.kind!r}")

    @classmethod
    def hermite(cls):
        return cls("hermite")

    @classmethod
    def laguerre(cls, q):
        return cls("laguerre", float(q))

    @property
    def is_hermite(self):
        return self.kind == "hermite"


def gamma_nu(nu):
    """Normalization coefficient gamma_nu = sqrt(2 Gamma((nu+1)/2) / Gamma(nu/2 + 1))."""
    nu = np.asarray(nu, dtype=float)
    if np.any(nu <= -1):
        raise DomainError("gamma_nu requires nu > -1")
    return np.exp(0.5 * (math.log(2.0) + sc.gammaln((nu + 1) / 2) - sc.gammaln(nu / 2 + 1)))[()]


def _check_index(n):
    if n > MAX_INDEX:
        raise CapabilityError(f"index {n} exceeds supported range {MAX_INDEX}")


def _check_points(family, x):
    x = np.atleast_1d(np.asarray(x, dtype=float))
    if not np.all(np.isfinite(x)):
        raise DomainError("wave functions require finite arguments")
    if not family.is_hermite and np.any(x < 0):
        raise DomainError("Laguerre wave functions are defined on x >= 0")
    return x


def phi_table(family, nmax, x):
    """Return an array of shape (nmax + 1, len(x)) with phi_0..phi_nmax.

    Forward three-term recurrence of the orthonormal functions, carried with a
    running log scale so that neither the Gaussian factor nor the growth in
    the classically forbidden zone under- or overflows.
    """
    _check_index(nmax)
    x = _check_points(family, x)
    out = np.zeros((nmax + 1, x.size))
    if family.is_hermite:
        logscale = -0.5 * x * x - 0.25 * math.log(math.pi)
    else:
        q = family.q
        if q < 0 and np.any(x == 0):
            raise DomainError("phi_n is unbounded at x = 0 when q < 0")
        with np.errstate(divide="ignore"):
            logscale = 0.5 * sc.xlogy(q, x) - 0.5 * x - 0.5 * sc.gammaln(q + 1)
    prev = np.zeros_like(x)
    cur = np.ones_like(x)
    out[0] = np.exp(logscale)
    for n in range(nmax):
        if family.is_hermite:
            nxt = (x * cur - math.sqrt(n / 2) * prev) / math.sqrt((n + 1) / 2)
        else:
            p = n + family.q
            nxt = ((x - (n + p + 1)) * cur - math.sqrt(n * p) * prev) / math.sqrt((n + 1) * (p + 1))
        prev, cur = cur, nxt
        big = np.abs(cur) > _RESCALE
        if big.any():
            f = np.abs(cur[big])
            cur[big] /= f
            prev[big] /= f
            logscale[big] += np.log(f)
        with np.errstate(under="ignore"):
            out[n + 1] = cur * np.exp(logscale)
    return out


def _gammas(family, nmax):
    """Array of the chi/psi rescaling factors for indices 0..nmax."""
    idx = np.arange(nmax + 1, dtype=float)
    g = gamma_nu(idx)
    if not family.is_hermite:
        g = g * gamma_nu(idx + family.q)
    return np.atleast_1d(g)


class WaveTable:
    """All wave-function quantities for indices 0..nmax at fixed points x.

    Rows are indexed by n; ``psi(-1)``, ``eps(-1)`` and ``Psi(-1)`` return
    zeros, matching the convention psi_{-1} = 0.
    """

    def __init__(self, family, nmax, x):
        self.family = family
        self.nmax = nmax
        self.x = _check_points(family, x)
        self.phi = phi_table(family, nmax, self.x)
        g = _gammas(family, nmax)[:, None]
        if family.is_hermite:
            self.chi = g * self.phi
            self._psi = None
        else:
            half = np.sqrt(self.x / 2)
            self.chi = g * half * self.phi
            self._psi = None
            self._half = half
        self._g = g
        self._eps = None
        self._Psi = None

    # psi is singular at the Laguerre origin, so it is built lazily
    @property
    def psi_all(self):
        if self._psi is None:
            if self.family.is_hermite:
                self._psi = self.phi / self._g
            else:
                if np.any(self.x <= 0):
                    raise DomainError("Laguerre psi_n is undefined at x <= 0")
                self._psi = self.phi / (self._g * self._half)
        return self._psi

    def psi(self, n):
        if n < 0:
            return np.zeros_like(self.x)
        return self.psi_all[n]

    def _build_antiderivatives(self):
        x = self.x
        if self.family.is_hermite:
            eps0 = gauss_cdf_sym(x)
            Psi0 = -gauss_tail2(x)
        else:
            a = (self.family.q + 1) / 2
            eps0 = 2 * reg_lower_gamma(a, x / 2) - 1
            Psi0 = -2 * reg_upper_gamma(a, x / 2)
        eps = np.zeros((self.nmax + 1, x.size))
        Psi = np.zeros((self.nmax + 1, x.size))
        eps[0], Psi[0] = eps0, Psi0
        if self.nmax >= 1:
            eps[1] = -self.chi[0]
            Psi[1] = -self.chi[0]
        for n in range(1, self.nmax):
            eps[n + 1] = eps[n - 1] - self.chi[n]
            Psi[n + 1] = Psi[n - 1] - self.chi[n]
        self._eps, self._Psi = eps, Psi

    def eps(self, n):
        if n < 0:
            return np.zeros_like(self.x)
        if self._eps is None:
            self._build_antiderivatives()
        return self._eps[n]

    def Psi(self, n):
        if n < 0:
            return np.zeros_like(self.x)
        if self._Psi is None:
            self._build_antiderivatives()
        return self._Psi[n]

    def rho2(self, n):
        """sum_{j<n} phi_j^2, the unitary density of dimension n."""
        if n == 0:
            return np.zeros_like(self.x)
        return np.sum(self.phi[:n] ** 2, axis=0)


def _shape_out(x, values):
    arr = np.asarray(x, dtype=float)
    if arr.ndim == 0:
        return float(values[0])
    return values.reshape(arr.shape)


def eval_phi(family, n, x):
    """Orthonormal wave function phi_n(x)."""
    if n < 0:
        raise DomainError("phi_n needs n >= 0")
    return _shape_out(x, phi_table(family, n, np.ravel(x))[n])


def eval_psi_chi(family, n, x):
    """Return (psi_n(x), chi_n(x)); n = -1 gives zeros."""
    if n < 0:
        z = np.zeros(np.size(x))
        return _shape_out(x, z), _shape_out(x, z)
    t = WaveTable(family, n, np.ravel(x))
    return _shape_out(x, t.psi(n)), _shape_out(x, t.chi[n])


def eval_chi(family, n, x):
    if n < 0:
        return _shape_out(x, np.zeros(np.size(x)))
    t = WaveTable(family, n, np.ravel(x))
    return _shape_out(x, t.chi[n])


def eval_eps_psi_sharp(family, n, x):
    """eps psi_sharp_n(x) via the integral recursion."""
    if n < 0:
        return _shape_out(x, np.zeros(np.size(x)))
    t = WaveTable(family, max(n, 0), np.ravel(x))
    return _shape_out(x, t.eps(n))


def eval_Psi_sharp(family, n, x):
    """Psi_sharp_n(x) = -int_x^inf psi_sharp_n, vanishing at +inf."""
    if n < 0:
        return _shape_out(x, np.zeros(np.size(x)))
    t = WaveTable(family, max(n, 0), np.ravel(x))
    return _shape_out(x, t.Psi(n))
