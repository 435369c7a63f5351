"""Numerical experiments shared by the CLI ``validate`` command, the
acceptance tests and the scripts: convergence-order fits, the fixed-n edge
error comparison, and the full invariant suite.

Slopes are fitted against ``log(1/h)`` so that an error of order
``h^(m+1)`` shows up as slope ``-(m+1)``.
"""

from __future__ import annotations

import time
from dataclasses import dataclass, field

import numpy as np

from . import polyalg, tables
from .densities import (
    EnsembleSpec,
    Psi_sharp_rescaled,
    psi_sharp_rescaled,
    rho_exact,
    rho_exact_altform,
    rho_rescaled,
    wave_scaling,
)
from .expansions import expansion_density_terms, expansion_wave, leading_identity_holds, omega_coeff
from .polyalg import LABELS
from .quad import inner_product, mass_check, skew_gram
from .specfun import airy_ai, airy_ai_prime, airy_int
from .wavefns import Family, WaveTable

S_PANEL = (-2.0, 0.0, 1.0)
N_LADDER = (16, 32, 64, 128)
# the invariant suite uses a ladder further into the asymptotic regime
SUITE_LADDER = (64, 128, 256, 512)
SLOPE_TOL = 0.35


@dataclass(frozen=True)
class ConvergenceConfig:
    s_points: tuple = S_PANEL
    n_ladder: tuple = N_LADDER
    p_ratio: float | None = None  # None -> Gaussian, else p = p_ratio * n
    orders: tuple = (0, 1, 2)


def fit_slope(h, err):
    """Least-squares slope of log(err) against log(1/h)."""
    h = np.asarray(h, dtype=float)
    err = np.asarray(err, dtype=float)
    return float(np.polyfit(np.log(1.0 / h), np.log(err), 1)[0])


def density_errors(beta, cfg: ConvergenceConfig):
    """Array err[n_index, m, s_index] and the ladder of h values."""
    s = np.asarray(cfg.s_points, dtype=float)
    errs, hs = [], []
    for n in cfg.n_ladder:
        spec = EnsembleSpec(beta, n, None if cfg.p_ratio is None else cfg.p_ratio * n)
        exact = rho_rescaled(spec, s)
        terms = expansion_density_terms(spec, s)
        errs.append([np.abs(exact - terms[m]) for m in cfg.orders])
        hs.append(spec.scaling().h)
    return np.array(errs), np.array(hs)


def density_slopes(beta, cfg: ConvergenceConfig):
    """slopes[m_index][s_index] of the density expansion error."""
    errs, hs = density_errors(beta, cfg)
    return np.array([[fit_slope(hs, errs[:, i, k]) for k in range(errs.shape[2])]
                     for i in range(errs.shape[1])])


def wave_errors(which, cfg: ConvergenceConfig):
    s = np.asarray(cfg.s_points, dtype=float)
    exact_fn = psi_sharp_rescaled if which == "psi" else Psi_sharp_rescaled
    errs, hs = [], []
    for n in cfg.n_ladder:
        if cfg.p_ratio is None:
            fam = Family.hermite()
        else:
            fam = Family.laguerre((cfg.p_ratio - 1) * n)
        exact = exact_fn(fam, n, s)
        errs.append([np.abs(exact - expansion_wave(fam, n, s, m, which)) for m in cfg.orders])
        hs.append(wave_scaling(fam, n).h)
    return np.array(errs), np.array(hs)


def wave_slopes(which, cfg: ConvergenceConfig):
    errs, hs = wave_errors(which, cfg)
    return np.array([[fit_slope(hs, errs[:, i, k]) for k in range(errs.shape[2])]
                     for i in range(errs.shape[1])])


def compare_grid(spec: EnsembleSpec, s):
    """Exact rescaled density, the three truncations and their errors."""
    s = np.asarray(s, dtype=float)
    exact = rho_rescaled(spec, s)
    terms = expansion_density_terms(spec, s)
    return exact, terms, [np.abs(exact - t) for t in terms]


# --------------------------------------------------------------------------
# Invariant suite
# --------------------------------------------------------------------------

@dataclass
class Check:
    name: str
    passed: bool
    value: float | str
    tol: float | str
    seconds: float = 0.0
    detail: dict = field(default_factory=dict)

    def as_dict(self):
        return {
            "name": self.name,
            "passed": bool(self.passed),
            "value": self.value,
            "tol": self.tol,
            "seconds": round(self.seconds, 3),
            **({"detail": self.detail} if self.detail else {}),
        }


def _timed(fn):
    t0 = time.perf_counter()
    out = fn()
    out.seconds = time.perf_counter() - t0
    return out


def check_mass(tol=1e-8):
    worst = 0.0
    for beta in (1, 2, 4):
        for n in range(1, 9):
            for p in (None, n + 5.5):
                worst = max(worst, abs(mass_check(EnsembleSpec(beta, n, p)) - n))
    return Check("mass", worst <= tol, worst, tol)


def _grid(spec, count=20):
    sp = spec.scaling()
    if spec.gaussian:
        return np.linspace(-sp.mu - 2, sp.mu + 4 * sp.sigma, count)
    return np.linspace(0.05 * sp.mu, sp.mu + 4 * sp.sigma, count)


def check_duality(tol=1e-10):
    worst = 0.0
    for n, p in ((2, 5.5), (3, 7.25), (2, None), (3, None)):
        s4 = EnsembleSpec(4, n, p)
        s1 = EnsembleSpec(1, 2 * n + 1, None if p is None else 2 * p + 1)
        x = _grid(s1)
        t = WaveTable(s4.family, 2 * n, x)
        resid = rho_exact(s1, x) - 2 * rho_exact(s4, x) - t.psi(2 * n)
        worst = max(worst, float(np.max(np.abs(resid))))
    return Check("duality", worst <= tol, worst, tol)


def check_parity_forms(tol=1e-10):
    worst = 0.0
    for n in (5, 6):
        for p in (None, n + 5.5):
            spec = EnsembleSpec(1, n, p)
            x = _grid(spec)
            worst = max(worst, float(np.max(np.abs(rho_exact(spec, x) - rho_exact_altform(spec, x)))))
    return Check("parity_forms", worst <= tol, worst, tol)


def slope_deviation(slopes, one_sided=False):
    """Largest deviation of slopes[m][i] from -(m+1).

    One-sided: only slower-than-claimed decay counts (the expansions bound
    the error by O(h^(m+1)); exact cancellations may make it smaller).
    """
    target = -np.arange(1, slopes.shape[0] + 1)[:, None]
    dev = slopes - target
    if not one_sided:
        dev = np.abs(dev)
    return float(np.max(dev))


def check_density_convergence(tol=SLOPE_TOL, n_ladder=SUITE_LADDER):
    detail, worst = {}, 0.0
    for beta in (1, 2, 4):
        for label, ratio in (("gaussian", None), ("laguerre", 2.0)):
            slopes = density_slopes(beta, ConvergenceConfig(n_ladder=n_ladder, p_ratio=ratio))
            detail[f"beta{beta}_{label}"] = np.round(slopes, 3).tolist()
            worst = max(worst, slope_deviation(slopes))
    return Check("density_convergence", worst <= tol, worst, tol, detail=detail)


def check_wave_convergence(tol=SLOPE_TOL, n_ladder=SUITE_LADDER):
    detail, worst = {}, 0.0
    for label, ratio in (("hermite", None), ("laguerre", 2.0)):
        for which in ("psi", "Psi"):
            slopes = wave_slopes(which, ConvergenceConfig(n_ladder=n_ladder, p_ratio=ratio))
            detail[f"{which}_{label}"] = np.round(slopes, 3).tolist()
            worst = max(worst, slope_deviation(slopes, one_sided=True))
    return Check("wave_convergence", worst <= tol, worst, tol, detail=detail)


def check_edge_comparison():
    s = np.linspace(-4, 4, 161)
    detail, ok = {}, True
    for beta in (1, 2, 4):
        _, _, errs = compare_grid(EnsembleSpec(beta, 10, 40), s)
        mx = [float(np.max(e)) for e in errs]
        detail[f"beta{beta}"] = mx
        ok &= mx[0] > mx[1] > mx[2]
    return Check("edge_comparison_monotone", ok, "strict decrease" if ok else "violated", "m0 > m1 > m2", detail=detail)


def check_reconstruction():
    ok = True
    for (beta, j), expected in tables.GENERATING.items():
        omega = omega_coeff(beta, j, "laguerre")
        got = polyalg.reconstruct_P(beta, j, omega)
        ok &= got == expected
        ok &= polyalg.omega_from_P(beta, j, got) == omega
        if beta == 1:
            ok &= polyalg.reconstruct_P(4, j, omega_coeff(4, j, "laguerre")) == expected
    return Check("reconstruction", ok, "exact" if ok else "mismatch", "exact")


def check_table_identities():
    ok = True
    for fam in ("gaussian", "laguerre"):
        for j in range(3):
            a, b = omega_coeff(1, j, fam), omega_coeff(4, j, fam)
            ok &= a.coeffs == b.coeffs and a.nu == 1 and b.nu == 0
        for beta in (1, 4):
            ok &= leading_identity_holds(beta, fam)
    for beta in (1, 2):
        for j in range(3):
            lag, gau = omega_coeff(beta, j, "laguerre"), omega_coeff(beta, j, "gaussian")
            ok &= all(lag.get(l).subs_tau(0) == gau.get(l) for l in LABELS)
    for kind in ("psi", "Psi"):
        for k in (1, 2):
            for a, b in zip(tables.WAVE["laguerre"][kind][k], tables.WAVE["gaussian"][kind][k]):
                ok &= a.subs_tau(0) == b
    for fam in ("gaussian", "laguerre"):
        for k in (1, 2):
            p, q = tables.WAVE[fam]["psi"][k]
            ok &= polyalg.integrate_wave_term(p, q) == tables.WAVE[fam]["Psi"][k]
    return Check("table_identities", ok, "exact" if ok else "mismatch", "exact")


def airy_int_oracle(x, dps=30):
    """AI_0 from the hypergeometric form of int_0^x Ai, at high precision."""
    import mpmath

    with mpmath.workdps(dps):
        x = mpmath.mpf(x)
        z = x ** 3 / 9
        third = mpmath.mpf(1) / 3
        c1 = mpmath.airyai(0)
        c2 = -mpmath.airyai(0, derivative=1)
        head = c1 * x * mpmath.hyp1f2(third, 2 * third, 4 * third, z)
        tail = c2 * x ** 2 / 2 * mpmath.hyp1f2(2 * third, 4 * third, 5 * third, z)
        return float(-third + head - tail)


def check_airy(tol=1e-12, tol_int=1e-11):
    import mpmath

    x = np.linspace(-10, 10, 200)
    with mpmath.workdps(30):
        ai = np.array([float(mpmath.airyai(v)) for v in x])
        aip = np.array([float(mpmath.airyai(v, derivative=1)) for v in x])
    aint = np.array([airy_int_oracle(v) for v in x])
    e1 = float(np.max(np.abs(airy_ai(x) - ai)))
    e2 = float(np.max(np.abs(airy_ai_prime(x) - aip)))
    e3 = float(np.max(np.abs(airy_int(x) - aint)))
    ok = e1 <= tol and e2 <= tol and e3 <= tol_int
    return Check("airy", ok, max(e1, e2, e3), tol, detail={"ai": e1, "ai_prime": e2, "ai_int": e3})


def check_skew(tol=1e-8):
    worst = 0.0
    families = (Family.hermite(), Family.laguerre(0.5), Family.laguerre(5.5))
    for fam in families:
        for beta in (1, 4):
            gram = skew_gram(beta, 3, fam)
            worst = max(worst, float(np.max(np.abs(gram - np.kron(np.eye(3), [[0, 1], [-1, 0]])))))
        for n in range(6):
            plus = inner_product("L2", ("psi", n), ("eps", n + 1), fam)
            worst = max(worst, abs(plus + (n % 2 == 0)))
            if n >= 1:
                minus = inner_product("L2", ("psi", n), ("eps", n - 1), fam)
                worst = max(worst, abs(minus - (n % 2 == 1)))
    return Check("skew_orthonormality", worst <= tol, worst, tol)


SUITE = (
    check_mass,
    check_duality,
    check_parity_forms,
    check_density_convergence,
    check_wave_convergence,
    check_edge_comparison,
    check_reconstruction,
    check_table_identities,
    check_airy,
    check_skew,
)


def run_suite(checks=SUITE):
    return [_timed(fn) for fn in checks]
