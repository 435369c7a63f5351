"""Acceptance criteria, each at its stated tolerance.

Every criterion records one PASS/FAIL line, printed at the end of the pytest
run under "acceptance criteria".  The convergence criteria are additionally
split into one test per (ensemble, order, s) cell; cells with a documented
deviation are strict xfails, so they show up as expected failures and would
turn red if they started passing.
"""

import time

import numpy as np
import pytest

import conftest
import oracles
from softedge import polyalg, tables
from softedge.densities import EnsembleSpec, rho_exact, rho_exact_altform
from softedge.expansions import leading_identity_holds, omega_coeff
from softedge.polyalg import LABELS
from softedge.quad import inner_product, mass_check, skew_gram
from softedge.specfun import airy_ai, airy_ai_prime, airy_int
from softedge.validation import (
    N_LADDER,
    S_PANEL,
    SLOPE_TOL,
    ConvergenceConfig,
    compare_grid,
    density_errors,
    density_slopes,
    wave_slopes,
)
from softedge.wavefns import Family, WaveTable

ORDERS = (0, 1, 2)


def record(number, ok, detail):
    line = f"criterion {number:>2}: {'PASS' if ok else 'FAIL'}  {detail}"
    conftest.ACCEPTANCE_LINES.append(line)
    print(line)


def _grid20(spec):
    sp = spec.scaling()
    if spec.gaussian:
        return np.linspace(-sp.mu - 2, sp.mu + 4 * sp.sigma, 20)
    return np.linspace(0.05 * sp.mu, sp.mu + 4 * sp.sigma, 20)


# 1 --------------------------------------------------------------------------

def test_c1_mass():
    t0 = time.perf_counter()
    worst, where = 0.0, None
    for beta in (1, 2, 4):
        for n in range(1, 9):
            for p in (None, n + 5.5):
                err = abs(mass_check(EnsembleSpec(beta, n, p)) - n)
                if err > worst:
                    worst, where = err, (beta, n, p)
    elapsed = time.perf_counter() - t0
    ok = worst <= 1e-8 and elapsed < 60
    record(1, ok, f"mass: max |int rho - n| = {worst:.2e} at {where} (tol 1e-8), {elapsed:.1f} s (< 60 s)")
    assert worst <= 1e-8
    assert elapsed < 60


# 2 --------------------------------------------------------------------------

def test_c2_duality():
    worst = 0.0
    for n, p in ((2, 5.5), (3, 7.25), (2, None), (3, None)):
        s4 = EnsembleSpec(4, n, p)
        s1 = EnsembleSpec(1, 2 * n + 1, None if p is None else 2 * p + 1)
        x = _grid20(s1)
        psi = WaveTable(s4.family, 2 * n, x).psi(2 * n)
        worst = max(worst, float(np.max(np.abs(rho_exact(s1, x) - 2 * rho_exact(s4, x) - psi))))
    record(2, worst <= 1e-10, f"duality: max residual {worst:.2e} (tol 1e-10)")
    assert worst <= 1e-10


# 3 --------------------------------------------------------------------------

def test_c3_parity_forms():
    worst = 0.0
    for n in (5, 6):
        for p in (None, n + 5.5):
            spec = EnsembleSpec(1, n, p)
            x = _grid20(spec)
            worst = max(worst, float(np.max(np.abs(rho_exact(spec, x) - rho_exact_altform(spec, x)))))
    record(3, worst <= 1e-10, f"even/odd forms of rho_1: max gap {worst:.2e} (tol 1e-10)")
    assert worst <= 1e-10


# 4 --------------------------------------------------------------------------

DENSITY_CASES = [(beta, fam) for beta in (1, 2, 4) for fam in ("gaussian", "laguerre")]
# preasymptotic at n <= 128: local slopes continue -2.69, -2.83, -2.90, -2.93 up to n = 1024
DENSITY_KNOWN = {(2, "laguerre", 2, 0.0)}


@pytest.fixture(scope="module")
def density_table():
    t0 = time.perf_counter()
    out = {}
    for beta, fam in DENSITY_CASES:
        cfg = ConvergenceConfig(n_ladder=N_LADDER, p_ratio=None if fam == "gaussian" else 2.0)
        out[beta, fam] = density_slopes(beta, cfg)
    return out, time.perf_counter() - t0


def _density_cells():
    for beta, fam in DENSITY_CASES:
        for m in ORDERS:
            for s in S_PANEL:
                marks = []
                if (beta, fam, m, s) in DENSITY_KNOWN:
                    marks = [pytest.mark.xfail(strict=True, reason="preasymptotic slope at n <= 128; see ledger")]
                yield pytest.param(beta, fam, m, s, marks=marks, id=f"beta{beta}-{fam}-m{m}-s{s:g}")


@pytest.mark.parametrize("beta,fam,m,s", list(_density_cells()))
def test_c4_density_slope_cell(density_table, beta, fam, m, s):
    slopes, _ = density_table
    slope = slopes[beta, fam][m][S_PANEL.index(s)]
    assert abs(slope + (m + 1)) <= SLOPE_TOL, f"slope {slope:.3f}, target {-(m + 1)}"


def test_c4_summary(density_table):
    slopes, elapsed = density_table
    bad = []
    for (beta, fam), table in slopes.items():
        for m in ORDERS:
            for k, s in enumerate(S_PANEL):
                if abs(table[m][k] + (m + 1)) > SLOPE_TOL:
                    bad.append(((beta, fam, m, s), table[m][k]))
    total = len(DENSITY_CASES) * len(ORDERS) * len(S_PANEL)
    text = ", ".join(f"beta={b} {f} m={m} s={s:g}: {v:.2f}" for (b, f, m, s), v in bad)
    record(4, not bad and elapsed < 300,
           f"density slopes: {total - len(bad)}/{total} cells within +-{SLOPE_TOL}"
           + (f"; outside: {text}" if bad else "") + f"; {elapsed:.1f} s (< 300 s)")
    assert elapsed < 300
    # nothing beyond the documented deviation
    assert {cell for cell, _ in bad} <= DENSITY_KNOWN


def test_c4_known_cell_is_preasymptotic():
    # local slopes between consecutive n approach -3 further up the ladder
    ladder = (128, 256, 512, 1024)
    cfg = ConvergenceConfig(s_points=(0.0,), n_ladder=ladder, p_ratio=2.0)
    errs, hs = density_errors(2, cfg)
    e = errs[:, 2, 0]
    local = np.diff(np.log(e)) / np.diff(np.log(1 / hs))
    assert np.all(np.diff(local) < 0)
    assert abs(local[-1] + 3) <= SLOPE_TOL


# 5 --------------------------------------------------------------------------

WAVE_CASES = ("hermite", "laguerre")
# p_1(0) = q_1(0) = 0 exactly: the m = 0 error at s = 0 is O(h^2), faster than claimed
WAVE_KNOWN = {("hermite", 0, 0.0), ("laguerre", 0, 0.0)}


@pytest.fixture(scope="module")
def wave_table():
    out = {}
    for fam in WAVE_CASES:
        cfg = ConvergenceConfig(n_ladder=N_LADDER, p_ratio=None if fam == "hermite" else 2.0)
        out[fam] = wave_slopes("psi", cfg)
    return out


def _wave_cells():
    for fam in WAVE_CASES:
        for m in ORDERS:
            for s in S_PANEL:
                marks = []
                if (fam, m, s) in WAVE_KNOWN:
                    marks = [pytest.mark.xfail(strict=True, reason="first correction vanishes at s = 0; see ledger")]
                yield pytest.param(fam, m, s, marks=marks, id=f"{fam}-m{m}-s{s:g}")


@pytest.mark.parametrize("fam,m,s", list(_wave_cells()))
def test_c5_wave_slope_cell(wave_table, fam, m, s):
    slope = wave_table[fam][m][S_PANEL.index(s)]
    assert abs(slope + (m + 1)) <= SLOPE_TOL, f"slope {slope:.3f}, target {-(m + 1)}"


def test_c5_first_correction_vanishes_at_origin():
    # the reason behind the known cells: the h^1 term of psi_sharp is zero at s = 0
    for fam in ("gaussian", "laguerre"):
        p, q = tables.WAVE[fam]["psi"][1]
        assert p.subs_tau(0)(0.0) == 0 and q(0.0, 0.3) == 0 and p(0.0, 0.7) == 0


def test_c5_summary(wave_table):
    bad = []
    for fam, table in wave_table.items():
        for m in ORDERS:
            for k, s in enumerate(S_PANEL):
                if abs(table[m][k] + (m + 1)) > SLOPE_TOL:
                    bad.append(((fam, m, s), table[m][k]))
    total = len(WAVE_CASES) * len(ORDERS) * len(S_PANEL)
    text = ", ".join(f"{f} m={m} s={s:g}: {v:.2f}" for (f, m, s), v in bad)
    record(5, not bad, f"psi_sharp slopes: {total - len(bad)}/{total} cells within +-{SLOPE_TOL}"
           + (f"; outside: {text}" if bad else ""))
    assert {cell for cell, _ in bad} <= WAVE_KNOWN


# 6 --------------------------------------------------------------------------

def test_c6_edge_comparison():
    s = np.linspace(-4, 4, 161)
    parts, ok = [], True
    for beta in (1, 2, 4):
        _, _, errs = compare_grid(EnsembleSpec(beta, 10, 40), s)
        mx = [float(np.max(e)) for e in errs]
        ok &= mx[0] > mx[1] > mx[2]
        parts.append(f"beta={beta}: " + " > ".join(f"{v:.2e}" for v in mx))
    record(6, ok, "n=10, p=40 max errors decrease with m; " + "; ".join(parts))
    assert ok


# 7 --------------------------------------------------------------------------

def test_c7_reconstruction():
    t0 = time.perf_counter()
    count, ok = 0, True
    for (beta, j), expected in tables.GENERATING.items():
        betas = (1, 4) if beta == 1 else (2,)
        for b in betas:
            got = polyalg.reconstruct_P(b, j, omega_coeff(b, j, "laguerre"), polyalg.omega_leading(b))
            ok &= got == expected
        count += len(expected)
    for fam in ("gaussian", "laguerre"):
        for beta, j in ((2, 1), (1, 1), (1, 2), (4, 1), (4, 2)):
            omega = omega_coeff(beta, j, fam)
            ok &= polyalg.omega_from_P(beta, j, polyalg.reconstruct_P(beta, j, omega)) == omega
    elapsed = time.perf_counter() - t0
    record(7, ok and count == 8 and elapsed < 1,
           f"reconstruction: {count} polynomials exact, round trips exact, {elapsed:.3f} s (< 1 s)")
    assert ok and count == 8
    assert elapsed < 1


# 8 --------------------------------------------------------------------------

def test_c8_table_identities():
    ok = True
    for fam in ("gaussian", "laguerre"):
        for j in range(3):
            a, b = omega_coeff(1, j, fam), omega_coeff(4, j, fam)
            ok &= a.coeffs == b.coeffs
        ok &= leading_identity_holds(1, fam) and leading_identity_holds(4, fam)
    for beta in (1, 2, 4):
        for j in range(3):
            lag, gau = omega_coeff(beta, j, "laguerre"), omega_coeff(beta, j, "gaussian")
            ok &= all(lag.get(l).subs_tau(0) == gau.get(l) for l in LABELS)
    for kind in ("psi", "Psi"):
        for k in (1, 2):
            for a, b in zip(tables.WAVE["laguerre"][kind][k], tables.WAVE["gaussian"][kind][k]):
                ok &= a.subs_tau(0) == b
    record(8, ok, "beta=1/4 equality, tau=0 specialization, leading-order identity: exact")
    assert ok


# 9 --------------------------------------------------------------------------

def test_c9_airy():
    x = np.linspace(-10, 10, 200)
    ref = np.array([oracles.airy(v) for v in x])
    ref_int = np.array([oracles.airy_int0_hyp(v) for v in x])
    e_ai = float(np.max(np.abs(airy_ai(x) - ref[:, 0])))
    e_aip = float(np.max(np.abs(airy_ai_prime(x) - ref[:, 1])))
    e_int = float(np.max(np.abs(airy_int(x) - ref_int)))
    ok = e_ai <= 1e-12 and e_aip <= 1e-12 and e_int <= 1e-11
    record(9, ok, f"Airy: Ai {e_ai:.1e}, Ai' {e_aip:.1e} (tol 1e-12); AI_0 {e_int:.1e} (tol 1e-11)")
    assert ok


# 10 -------------------------------------------------------------------------

def test_c10_skew():
    families = (Family.hermite(), Family.laguerre(0.5), Family.laguerre(-0.5), Family.laguerre(5.5))
    worst = 0.0
    for fam in families:
        for beta in (1, 4):
            gram = skew_gram(beta, 5, fam)
            target = np.kron(np.eye(5), [[0.0, 1.0], [-1.0, 0.0]])
            worst = max(worst, float(np.max(np.abs(gram - target))))
        for n in range(6):
            worst = max(worst, abs(inner_product("L2", ("psi", n), ("eps", n + 1), fam) + (n % 2 == 0)))
            if n >= 1:
                worst = max(worst, abs(inner_product("L2", ("psi", n), ("eps", n - 1), fam) - (n % 2 == 1)))
    record(10, worst <= 1e-8, f"skew-orthonormality (n <= 5) and +-1 integrals: max error {worst:.1e} (tol 1e-8)")
    assert worst <= 1e-8
