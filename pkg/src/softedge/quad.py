"""Adaptive Gauss-Kronrod quadrature and the inner products of the wave
function systems.

Integrands are vectorized callables.  Panels are refined breadth-first; each
level is evaluated in a single call of the integrand, and accepted panel
contributions are summed with ``math.fsum`` in left-to-right order so the
result does not depend on the refinement history.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .densities import EnsembleSpec, rho_exact
from .errors import CapabilityError, DomainError, QuadratureError
from .scaling import scaling_params
from .wavefns import Family, WaveTable

# 15-point Kronrod nodes on [-1, 1] (non-negative half) and weights; the
# embedded 7-point Gauss rule uses the odd-indexed nodes.
_XK = np.array([
    0.991455371120812639206854697526329,
    0.949107912342758524526189684047851,
    0.864864423359769072789712788640926,
    0.741531185599394439863864773280788,
    0.586087235467691130294144845693013,
    0.405845151377397166906606412076961,
    0.207784955007898467600689403773245,
    0.000000000000000000000000000000000,
])
_WK = np.array([
    0.022935322010529224963732008058970,
    0.063092092629978553290700663189204,
    0.104790010322250183839876322541518,
    0.140653259715525918745189590510238,
    0.169004726639267902826583426598550,
    0.190350578064785409913256402421014,
    0.204432940075298892414161999234649,
    0.209482141084727828012999174891714,
])
_WG = np.array([
    0.129484966168869693270611432679082,
    0.279705391489276667901467771423780,
    0.381830050505118944950369775488975,
    0.417959183673469387755102040816327,
])

_NODES = np.concatenate([-_XK[:-1], _XK[::-1]])
_WK15 = np.concatenate([_WK[:-1], _WK[::-1]])
_WG7 = np.zeros(15)
_WG7[[1, 3, 5, 7, 9, 11, 13]] = np.concatenate([_WG[:-1], _WG[::-1]])


@dataclass(frozen=True)
class QuadSpec:
    abs_tol: float = 1e-11
    rel_tol: float = 1e-12
    max_depth: int = 40
    truncation_threshold: float = 1e-16

    def __post_init__(self):
        if not (self.abs_tol > 0 and self.rel_tol > 0):
            raise DomainError("quadrature tolerances must be positive")
        if not 1 <= self.max_depth <= 60:
            raise DomainError("max_depth must lie in [1, 60]")
        if not self.truncation_threshold >= 0:
            raise DomainError("truncation_threshold must be non-negative")


DEFAULT = QuadSpec()


def _rule(f, a, b):
    """Kronrod and Gauss estimates plus the max |f| for each panel."""
    mid = 0.5 * (a + b)
    half = 0.5 * (b - a)
    x = mid[:, None] + half[:, None] * _NODES[None, :]
    fx = np.asarray(f(x.ravel()), dtype=float).reshape(x.shape)
    if not np.all(np.isfinite(fx)):
        raise DomainError("integrand is not finite on the integration interval")
    k = half * (fx @ _WK15)
    g = half * (fx @ _WG7)
    return k, g, np.max(np.abs(fx), axis=1)


def integrate(f, lo, hi, spec: QuadSpec = DEFAULT, panels=1):
    """Adaptive G7/K15 estimate of the integral of f over [lo, hi].

    ``panels`` sets the number of equal initial panels.  Raises
    :class:`QuadratureError` (with the best estimate attached) if some panel
    is still unresolved after ``spec.max_depth`` bisections.
    """
    if not (math.isfinite(lo) and math.isfinite(hi)):
        raise DomainError("integrate needs finite limits; truncate the domain first")
    if hi == lo:
        return 0.0
    sign = 1.0
    if hi < lo:
        lo, hi, sign = hi, lo, -1.0
    edges = np.linspace(lo, hi, panels + 1)
    a, b = edges[:-1], edges[1:]
    width = hi - lo
    done = []  # (left endpoint, value)
    scale = 0.0
    for depth in range(spec.max_depth + 1):
        k, g, fmax = _rule(f, a, b)
        err = np.abs(k - g)
        pending_total = math.fsum(v for _, v in done) + float(np.sum(k))
        scale = max(scale, float(np.max(fmax)))
        tol = max(spec.abs_tol, spec.rel_tol * abs(pending_total))
        ok = err <= tol * (b - a) / width
        ok |= fmax <= spec.truncation_threshold * scale
        done.extend(zip(a[ok], k[ok]))
        a, b = a[~ok], b[~ok]
        if a.size == 0:
            done.sort(key=lambda item: item[0])
            return sign * math.fsum(v for _, v in done)
        if depth == spec.max_depth:
            break
        m = 0.5 * (a + b)
        a, b = np.concatenate([a, m]), np.concatenate([m, b])
        order = np.argsort(a)
        a, b = a[order], b[order]
    done.sort(key=lambda item: item[0])
    estimate = sign * (math.fsum(v for _, v in done) + float(np.sum(k[~ok])))
    raise QuadratureError(
        f"no convergence after {spec.max_depth} bisections",
        estimate=estimate,
        error=float(np.sum(err[~ok])),
    )


# --------------------------------------------------------------------------
# Domain handling for the wave-function families
# --------------------------------------------------------------------------

def family_domain(family, nmax):
    """Truncated integration domain outside which every wave function up to
    index nmax is negligible."""
    if family.is_hermite:
        cut = math.sqrt(2 * nmax + 1) + 12.0
        return -cut, cut
    sp = scaling_params(nmax + 1, nmax + 1 + family.q)
    return 0.0, sp.mu + 20.0 * sp.sigma


def _origin_power(q):
    # integrands behave at worst like x^((q-1)/2); after x = u^r the mapped
    # integrand vanishes like u^(r(q+1)/2 - 1), which we want to be >= u^2
    return max(2, math.ceil(6.0 / (q + 1.0)))


def integrate_family(f, family, nmax, spec: QuadSpec = DEFAULT):
    """Integral over the (truncated) domain of the family.

    For Laguerre the panel [0, 1] is mapped by x = u^r to remove the
    algebraic singularity at the origin.
    """
    lo, hi = family_domain(family, nmax)
    panels = max(16, 4 * (nmax + 2))
    if family.is_hermite:
        return integrate(f, lo, hi, spec, panels=panels)
    x1 = min(1.0, hi / 8)
    r = _origin_power(family.q)

    def mapped(u):
        x = np.maximum(x1 * u ** r, 1e-300)
        return f(x) * r * x1 * u ** (r - 1)

    head = integrate(mapped, 0.0, 1.0, spec, panels=4)
    tail = integrate(f, x1, hi, spec, panels=panels)
    return head + tail


# --------------------------------------------------------------------------
# Linear combinations of wave functions
# --------------------------------------------------------------------------

KINDS = ("phi", "psi", "chi", "eps", "dchi")


class Wave:
    """Finite linear combination of the basic functions.

    Kinds: ``phi_n``, ``psi_n``, ``chi_n``, ``eps_n`` (= eps psi_sharp_n) and
    ``dchi_n`` (= chi_n').  Derivatives and the epsilon operator are applied
    symbolically through the structure relation, never numerically.
    """

    def __init__(self, terms=None):
        self.terms = {k: v for k, v in (terms or {}).items() if v}
        for kind, n in self.terms:
            if kind not in KINDS:
                raise DomainError(f"unknown wave kind {kind!r}")

    @classmethod
    def of(cls, kind, n, coeff=1.0):
        if n < 0:
            return cls()
        return cls({(kind, n): coeff})

    def __add__(self, other):
        out = dict(self.terms)
        for key, v in other.terms.items():
            out[key] = out.get(key, 0.0) + v
        return Wave(out)

    def __sub__(self, other):
        return self + other * -1.0

    def __mul__(self, c):
        return Wave({k: c * v for k, v in self.terms.items()})

    __rmul__ = __mul__

    def __repr__(self):
        return " + ".join(f"{v:g}*{k}_{n}" for (k, n), v in sorted(self.terms.items())) or "0"

    @property
    def max_index(self):
        return max((n for _, n in self.terms), default=0)

    def derivative(self):
        out = Wave()
        for (kind, n), c in self.terms.items():
            if kind == "chi":
                out = out + Wave.of("psi", n - 1, 2 * c) + Wave.of("psi", n + 1, -2 * c)
            elif kind == "eps":
                out = out + Wave.of("psi", n, 2 * c)
            elif kind == "dchi":
                raise CapabilityError("second derivatives of chi are not available")
            else:
                raise CapabilityError(f"no closed-form derivative for {kind}")
        return out

    def epsilon(self):
        """Apply the epsilon operator: eps(psi_n) = eps_n / 2, eps(chi_n') = chi_n."""
        out = Wave()
        for (kind, n), c in self.terms.items():
            if kind == "psi":
                out = out + Wave.of("eps", n, 0.5 * c)
            elif kind == "dchi":
                out = out + Wave.of("chi", n, c)
            else:
                raise CapabilityError(f"epsilon of {kind} is not available in closed form")
        return out

    def evaluate(self, table: WaveTable):
        out = np.zeros_like(table.x)
        for (kind, n), c in self.terms.items():
            if kind == "phi":
                v = table.phi[n]
            elif kind == "psi":
                v = table.psi(n)
            elif kind == "chi":
                v = table.chi[n]
            elif kind == "eps":
                v = table.eps(n)
            else:
                v = 2 * table.psi(n - 1) - 2 * table.psi(n + 1)
            out = out + c * v
        return out


def _as_wave(f):
    if isinstance(f, Wave):
        return f
    kind, n = f
    return Wave.of(kind, n)


def l2(f, g, family, spec: QuadSpec = DEFAULT):
    f, g = _as_wave(f), _as_wave(g)
    nmax = max(f.max_index, g.max_index) + 1

    def integrand(x):
        t = WaveTable(family, nmax, x)
        return f.evaluate(t) * g.evaluate(t)

    return integrate_family(integrand, family, nmax, spec)


def inner_product(kind, f, g, family: Family, spec: QuadSpec = DEFAULT):
    """<f, g> for kind in {"L2", "skew1", "skew4"}.

    skew1: <f, eps g>_2;  skew4: (<f', g>_2 - <f, g'>_2) / 2.
    f and g are :class:`Wave` objects or (kind, n) pairs.
    """
    f, g = _as_wave(f), _as_wave(g)
    if kind == "L2":
        return l2(f, g, family, spec)
    if kind == "skew1":
        return l2(f, g.epsilon(), family, spec)
    if kind == "skew4":
        return 0.5 * (l2(f.derivative(), g, family, spec) - l2(f, g.derivative(), family, spec))
    raise DomainError(f"unknown inner product {kind!r}")


def skew_system(beta, count):
    """First ``count`` members of the skew-orthonormal system for beta = 1, 4.

    beta = 1: psi_0, chi_0', psi_2, chi_2', ...
    beta = 4: eps psi_1, chi_1, eps psi_3, chi_3, ...  (eps psi_m = eps_m / 2)
    """
    out = []
    for i in range(count):
        m = 2 * (i // 2)
        if beta == 1:
            out.append(Wave.of("psi", m) if i % 2 == 0 else Wave.of("dchi", m))
        elif beta == 4:
            out.append(Wave.of("eps", m + 1, 0.5) if i % 2 == 0 else Wave.of("chi", m + 1))
        else:
            raise DomainError("skew systems exist for beta = 1, 4")
    return out


def skew_gram(beta, n, family, spec: QuadSpec = DEFAULT):
    """(2n) x (2n) matrix of skew inner products of the skew system."""
    system = skew_system(beta, 2 * n)
    kind = "skew1" if beta == 1 else "skew4"
    gram = np.zeros((2 * n, 2 * n))
    for i, f in enumerate(system):
        for j, g in enumerate(system):
            gram[i, j] = inner_product(kind, f, g, family, spec)
    return gram


def mass_check(spec: EnsembleSpec, qspec: QuadSpec = DEFAULT):
    """Integral of the exact density over the domain (should equal n)."""
    family = spec.family
    return integrate_family(lambda x: rho_exact(spec, x), family, spec.max_index, qspec)
