"""Scalar special functions: Airy Ai, Ai', the antiderivatives AI_nu, and
the two cumulative distribution helpers used as base cases of the epsilon
operator.

All functions accept floats or numpy arrays and return the same shape
(a Python float for scalar input).

Airy evaluation strategy
------------------------
On ``[-15, 8]`` we store Ai, Ai' and AI_0 at nodes spaced by 1/4 and sum the
local Taylor series of the Airy equation ``y'' = x y`` about the nearest node
(``|t| <= 1/8``).  The node values come from exact Taylor stepping:

* leftwards from the closed-form values at 0 (stable: both Airy solutions
  oscillate with bounded amplitude there);
* leftwards from the exponentially scaled asymptotic series at x = 8 (stable:
  Ai is the growing solution in that direction).

Outside the node range the classical asymptotic series are used.
"""

from __future__ import annotations

import math
from functools import lru_cache

import numpy as np
from scipy import special as sc

from .errors import DomainError

AI0 = 0.35502805388781723926  # 3^(-2/3) / Gamma(2/3)
AIP0 = -0.25881940379280679840  # -3^(-1/3) / Gamma(1/3)

_NODE_LO = -15.0
_NODE_HI = 8.0
_NODE_STEP = 0.25
_EVAL_TERMS = 30
_STEP_TERMS = 45
_ASYM_TERMS = 40


def _scalar_or_array(fn):
    def wrapper(x, *args, **kwargs):
        arr = np.asarray(x, dtype=float)
        out = fn(np.atleast_1d(arr), *args, **kwargs)
        if arr.ndim == 0:
            return float(out[0])
        return out.reshape(arr.shape)

    wrapper.__name__ = fn.__name__
    wrapper.__doc__ = fn.__doc__
    return wrapper


# --------------------------------------------------------------------------
# Taylor series of y'' = x y about a point a
# --------------------------------------------------------------------------

def _taylor(a, y0, y1, i0, t, nterms):
    """Return (y, y', integral) at a + t, given y(a), y'(a) and the value i0
    of the antiderivative at a.  Works elementwise on arrays."""
    c_km1 = np.zeros_like(t)  # c_{k-1}
    c_k = y0                  # c_k, k = 0
    c_kp1 = y1                # c_{k+1}
    tk = np.ones_like(t)      # t^k
    val = np.zeros_like(t)
    der = np.zeros_like(t)
    integ = np.zeros_like(t)
    for k in range(nterms):
        # c_{k+2} = (a c_k + c_{k-1}) / ((k+2)(k+1))
        c_kp2 = (a * c_k + c_km1) / ((k + 2) * (k + 1))
        val = val + c_k * tk
        integ = integ + c_k * tk * t / (k + 1)
        der = der + (k + 1) * c_kp1 * tk
        tk = tk * t
        c_km1, c_k, c_kp1 = c_k, c_kp1, c_kp2
    return val, der, i0 + integ


# --------------------------------------------------------------------------
# Asymptotic series
# --------------------------------------------------------------------------

@lru_cache(maxsize=None)
def _uv_coefficients(nterms):
    u = [1.0]
    for k in range(1, nterms):
        u.append(u[-1] * (6 * k - 5) * (6 * k - 3) * (6 * k - 1) / ((2 * k - 1) * 216 * k))
    v = [-(6 * k + 1) / (6 * k - 1) * u[k] for k in range(nterms)]
    return np.array(u), np.array(v)


def _truncated_sum(coeffs, z):
    """Sum coeffs[k] * z**k, stopping each entry at its smallest term."""
    total = np.zeros_like(z)
    term_prev = np.full_like(z, np.inf)
    active = np.ones(z.shape, dtype=bool)
    zk = np.ones_like(z)
    for c in coeffs:
        term = c * zk
        active &= np.abs(term) < np.abs(term_prev)
        total = total + np.where(active, term, 0.0)
        term_prev = np.where(active, term, term_prev)
        zk = zk * z
    return total


def _airy_asym_pos(x):
    """Ai, Ai' for large positive x."""
    u, v = _uv_coefficients(_ASYM_TERMS)
    xi = 2.0 / 3.0 * x ** 1.5
    z = -1.0 / xi
    pref = np.exp(-xi) / (2.0 * math.sqrt(math.pi))
    ai = pref * x ** -0.25 * _truncated_sum(u, z)
    aip = -pref * x ** 0.25 * _truncated_sum(v, z)
    return ai, aip


def _airy_asym_neg(x):
    """Ai, Ai' for large negative x."""
    u, v = _uv_coefficients(2 * _ASYM_TERMS)
    y = -x
    xi = 2.0 / 3.0 * y ** 1.5
    z = -1.0 / xi ** 2
    u_even = _truncated_sum(u[0::2], z)
    u_odd = _truncated_sum(u[1::2], z) / xi
    v_even = _truncated_sum(v[0::2], z)
    v_odd = _truncated_sum(v[1::2], z) / xi
    c = np.cos(xi - math.pi / 4)
    s = np.sin(xi - math.pi / 4)
    ai = (c * u_even + s * u_odd) / (math.sqrt(math.pi) * y ** 0.25)
    aip = y ** 0.25 * (s * v_even - c * v_odd) / math.sqrt(math.pi)
    return ai, aip


def _airy_tail_series(x, ai, aip):
    """Asymptotic series T(x) from repeated integration by parts:

    int_{-inf}^x Ai = T(x) for x < 0 and int_x^inf Ai = -T(x) for x > 0,
    T = sum_k c_k (Ai'/x^(3k+1) + (3k+1) Ai/x^(3k+2)),  c_k = prod (3i-2)(3i-1).
    """
    total = np.zeros_like(x)
    prev = np.full_like(x, np.inf)
    active = np.ones(x.shape, dtype=bool)
    x3 = x ** 3
    r = 1.0 / x  # c_k / x^(3k+1), updated recursively to avoid overflow
    for k in range(40):
        if k > 0:
            r = r * ((3 * k - 2) * (3 * k - 1)) / x3
        term = r * (aip + (3 * k + 1) * ai / x)
        active &= np.abs(term) < np.abs(prev)
        total = total + np.where(active, term, 0.0)
        prev = np.where(active, term, prev)
    return total


# --------------------------------------------------------------------------
# Node table
# --------------------------------------------------------------------------

@lru_cache(maxsize=1)
def _nodes():
    n_lo = int(round(-_NODE_LO / _NODE_STEP))
    n_hi = int(round(_NODE_HI / _NODE_STEP))
    xs = np.arange(-n_lo, n_hi + 1) * _NODE_STEP
    ai = np.empty_like(xs)
    aip = np.empty_like(xs)
    aint = np.empty_like(xs)
    zero = n_lo
    h = np.array([-_NODE_STEP])

    # x in [0, 8]: step leftwards from the asymptotic values at 8.
    a8, ap8 = _airy_asym_pos(np.array([_NODE_HI]))
    ai[-1], aip[-1] = a8[0], ap8[0]
    for i in range(len(xs) - 1, zero, -1):
        y, yp, _ = _taylor(xs[i], ai[i:i + 1], aip[i:i + 1], 0.0, h, _STEP_TERMS)
        ai[i - 1], aip[i - 1] = y[0], yp[0]
    # closed form at 0 wins over the stepped value
    ai[zero], aip[zero] = AI0, AIP0
    # x in [-15, 0): step leftwards from 0.
    for i in range(zero, 0, -1):
        y, yp, _ = _taylor(xs[i], ai[i:i + 1], aip[i:i + 1], 0.0, h, _STEP_TERMS)
        ai[i - 1], aip[i - 1] = y[0], yp[0]

    # AI_0 anchored at AI_0(0) = -1/3, integrating node to node.
    aint[zero] = -1.0 / 3.0
    for i in range(zero, len(xs) - 1):
        _, _, v = _taylor(xs[i], ai[i:i + 1], aip[i:i + 1], aint[i], -h, _STEP_TERMS)
        aint[i + 1] = v[0]
    for i in range(zero, 0, -1):
        _, _, v = _taylor(xs[i], ai[i:i + 1], aip[i:i + 1], aint[i], h, _STEP_TERMS)
        aint[i - 1] = v[0]
    return xs, ai, aip, aint


def _airy_all(x):
    """Return Ai, Ai', AI_0 on a 1-d array."""
    xs, ai_n, aip_n, aint_n = _nodes()
    ai = np.empty_like(x)
    aip = np.empty_like(x)
    aint = np.empty_like(x)

    mid = (x >= _NODE_LO) & (x < _NODE_HI)
    if mid.any():
        xm = x[mid]
        idx = np.clip(np.rint((xm - _NODE_LO) / _NODE_STEP).astype(int), 0, len(xs) - 1)
        t = xm - xs[idx]
        y, yp, v = _taylor(xs[idx], ai_n[idx], aip_n[idx], aint_n[idx], t, _EVAL_TERMS)
        ai[mid], aip[mid], aint[mid] = y, yp, v

    hi = x >= _NODE_HI
    if hi.any():
        y, yp = _airy_asym_pos(x[hi])
        ai[hi], aip[hi] = y, yp
        aint[hi] = _airy_tail_series(x[hi], y, yp)

    lo = x < _NODE_LO
    if lo.any():
        y, yp = _airy_asym_neg(x[lo])
        ai[lo], aip[lo] = y, yp
        aint[lo] = -1.0 + _airy_tail_series(x[lo], y, yp)

    bad = ~np.isfinite(x)
    if bad.any():
        raise DomainError("Airy functions require finite arguments")
    return ai, aip, aint


@_scalar_or_array
def airy_ai(x):
    """Airy function Ai(x)."""
    return _airy_all(x)[0]


@_scalar_or_array
def airy_ai_prime(x):
    """Derivative Ai'(x)."""
    return _airy_all(x)[1]


def airy_int(x, nu=0):
    """Antiderivative AI_nu(x) = nu - int_x^inf Ai(t) dt, for nu in {0, 1}."""
    if nu not in (0, 1):
        raise DomainError(f"nu must be 0 or 1, got {nu!r}")
    return _airy_int0(x) + nu


@_scalar_or_array
def _airy_int0(x):
    return _airy_all(x)[2]


def airy_basis(s):
    """Return (Ai, Ai', AI_0) evaluated at s in one pass."""
    arr = np.asarray(s, dtype=float)
    ai, aip, aint = _airy_all(np.atleast_1d(arr).ravel())
    if arr.ndim == 0:
        return float(ai[0]), float(aip[0]), float(aint[0])
    return ai.reshape(arr.shape), aip.reshape(arr.shape), aint.reshape(arr.shape)


# --------------------------------------------------------------------------
# Cumulative functions for the epsilon base cases
# --------------------------------------------------------------------------

def gauss_cdf_sym(x):
    """erf(x / sqrt 2) = 2 Phi(x) - 1."""
    return sc.erf(np.asarray(x, dtype=float) / math.sqrt(2.0))[()]


def gauss_tail2(x):
    """2 (1 - Phi(x)) = erfc(x / sqrt 2), accurate in the right tail."""
    return sc.erfc(np.asarray(x, dtype=float) / math.sqrt(2.0))[()]


def _check_gamma_args(a, x):
    a = np.asarray(a, dtype=float)
    x = np.asarray(x, dtype=float)
    if np.any(a <= 0):
        raise DomainError("incomplete gamma requires a > 0")
    if np.any(x < 0):
        raise DomainError("incomplete gamma requires x >= 0")
    return a, x


def reg_lower_gamma(a, x):
    """Regularized lower incomplete gamma function P(a, x)."""
    a, x = _check_gamma_args(a, x)
    return sc.gammainc(a, x)[()]


def reg_upper_gamma(a, x):
    """Regularized upper incomplete gamma function Q(a, x) = 1 - P(a, x)."""
    a, x = _check_gamma_args(a, x)
    return sc.gammaincc(a, x)[()]


def log_gamma(x):
    return sc.gammaln(np.asarray(x, dtype=float))[()]
