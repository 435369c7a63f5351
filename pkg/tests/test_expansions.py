from fractions import Fraction

import numpy as np
import pytest
from hypothesis import given
from hypothesis import strategies as st

from softedge import tables
from softedge.densities import EnsembleSpec, psi_sharp_rescaled
from softedge.errors import DomainError, UnsupportedOrderError
from softedge.expansions import (
    eval_omega,
    expansion_density,
    expansion_density_terms,
    expansion_wave,
    leading_identity_holds,
    omega_coeff,
    tables_json,
    wave_coeff,
)
from softedge.polyalg import LABELS, ONE, S, TAU, BiPoly
from softedge.specfun import airy_basis
from softedge.wavefns import Family

F = lambda a, b=1: BiPoly.const(Fraction(a, b))


def test_omega_coeff_examples():
    w = omega_coeff(2, 1, "laguerre")
    assert w.get("Ai^2") == 3 * (2 * TAU - 1) * S**2 / 5
    assert w.get("Ai'^2") == -2 * (2 * TAU - 1) * S / 5
    assert w.get("Ai*Ai'") == (3 - TAU) / 5
    for fam in ("gaussian", "laguerre", Family.hermite(), Family.laguerre(2.0)):
        w = omega_coeff(1, 0, fam)
        assert (w.get("Ai^2"), w.get("Ai'^2"), w.get("Ai*AI"), w.nu) == (-S, ONE, F(1, 2), 1)
    assert omega_coeff(2, 2, "gaussian").get("Ai*Ai'") == -S**4 / 25 - 99 * S / 175


def test_omega_coeff_errors():
    with pytest.raises(UnsupportedOrderError):
        omega_coeff(2, 3, "gaussian")
    with pytest.raises(DomainError):
        omega_coeff(3, 0, "gaussian")
    with pytest.raises(DomainError):
        omega_coeff(2, 0, "jacobi")


@pytest.mark.parametrize("family", ["gaussian", "laguerre"])
@pytest.mark.parametrize("j", [0, 1, 2])
def test_beta_independence(family, j):
    w1, w4 = omega_coeff(1, j, family), omega_coeff(4, j, family)
    assert w1.coeffs == w4.coeffs
    assert (w1.nu, w4.nu) == (1, 0)


@pytest.mark.parametrize("beta", [1, 2, 4])
@pytest.mark.parametrize("j", [0, 1, 2])
def test_tau_zero_specialization(beta, j):
    assert omega_coeff(beta, j, "laguerre").subs_tau(0) == omega_coeff(beta, j, "gaussian")


@pytest.mark.parametrize("kind", ["psi", "Psi"])
@pytest.mark.parametrize("k", [1, 2])
def test_wave_tau_zero(kind, k):
    lag, gau = wave_coeff(kind, k, "laguerre"), wave_coeff(kind, k, "gaussian")
    assert (lag.a.subs_tau(0), lag.b.subs_tau(0)) == (gau.a, gau.b)


def test_wave_coeff_examples():
    w = wave_coeff("psi", 1, Family.hermite())
    assert (w.a, w.b) == (-S / 5, S**2 / 5)
    w = wave_coeff("Psi", 2, "laguerre")
    assert w.a.subs_tau(0) == -29 * S**3 / 175 - F(309, 350)
    assert w.b.subs_tau(0) == S**4 / 50 + 219 * S / 350
    with pytest.raises(UnsupportedOrderError):
        wave_coeff("psi", 3, "gaussian")
    with pytest.raises(DomainError):
        wave_coeff("phi", 1, "gaussian")


@pytest.mark.parametrize("beta", [1, 4])
@pytest.mark.parametrize("family", ["gaussian", "laguerre"])
def test_leading_identity(beta, family):
    assert leading_identity_holds(beta, family)


def test_leading_identity_beta2_rejected():
    with pytest.raises(DomainError):
        leading_identity_holds(2, "gaussian")


def test_eval_omega_examples():
    ai0p = airy_basis(0.0)[1]
    assert eval_omega(omega_coeff(2, 0, "gaussian"), 0.0) == pytest.approx(ai0p**2, rel=1e-15)
    for s in (-1.0, 0.0, 1.0):
        d = eval_omega(omega_coeff(1, 0, "gaussian"), s) - eval_omega(omega_coeff(4, 0, "gaussian"), s)
        assert abs(d - 0.5 * airy_basis(s)[0]) < 1e-13
    with pytest.raises(DomainError):
        eval_omega(omega_coeff(2, 1, "laguerre"), 0.0, tau=3.0)


@given(st.floats(-6, 6), st.floats(0, 1))
def test_eval_linear_in_basis(s, tau):
    # beta = 1 and 4 differ exactly by Ai * (AI_1 - AI_0) times the AI coefficients
    for j in range(3):
        w1, w4 = omega_coeff(1, j, "laguerre"), omega_coeff(4, j, "laguerre")
        ai, aip, _ = airy_basis(s)
        gap = w1.get("Ai*AI")(s, tau) * ai + w1.get("Ai'*AI")(s, tau) * aip
        assert eval_omega(w1, s, tau) - eval_omega(w4, s, tau) == pytest.approx(gap, abs=1e-12)


def test_expansion_density_leading_is_n_free():
    s = np.linspace(-3, 3, 9)
    ai, aip, _ = airy_basis(s)
    for n in (3, 50, 900):
        np.testing.assert_allclose(expansion_density(EnsembleSpec(2, n), s, 0), -s * ai**2 + aip**2, rtol=0, atol=1e-16)


def test_expansion_terms_agree():
    spec = EnsembleSpec(4, 10, 40)
    s = np.linspace(-4, 4, 11)
    terms = expansion_density_terms(spec, s)
    for m in range(3):
        np.testing.assert_allclose(terms[m], expansion_density(spec, s, m), rtol=1e-15, atol=1e-16)
    with pytest.raises(UnsupportedOrderError):
        expansion_density(spec, s, 3)


def test_expansion_wave_leading():
    s = np.array([-2.0, 0.5])
    for fam in (Family.hermite(), Family.laguerre(1.5)):
        np.testing.assert_array_equal(expansion_wave(fam, 20, s, 0), airy_basis(s)[0])
        np.testing.assert_array_equal(expansion_wave(fam, 20, s, 0, which="Psi"), airy_basis(s)[2])
    with pytest.raises(DomainError):
        expansion_wave("gaussian", 5, s, 1)


def test_expansion_wave_improves():
    fam = Family.laguerre(3.0)
    s = np.linspace(-3, 2, 21)
    exact = psi_sharp_rescaled(fam, 60, s)
    errs = [np.max(np.abs(exact - expansion_wave(fam, 60, s, m))) for m in range(3)]
    assert errs[0] > errs[1] > errs[2]


def test_tables_json():
    data = tables_json()
    assert set(data) == {"density", "wave", "generating"}
    row = data["density"][0]
    assert set(row) == {"beta", "j", "family", "term", "nu", "coefficient"}
    for r in data["density"]:
        assert BiPoly.parse(r["coefficient"]) == omega_coeff(r["beta"], r["j"], r["family"]).get(r["term"])
        assert r["term"] in LABELS
    assert not [r for r in data["density"] if r["beta"] == 2 and "AI" in r["term"]]
    gen = [r for r in data["generating"] if (r["beta"], r["j"]) == (1, 2)]
    assert [BiPoly.parse(r["coefficient"]) for r in gen] == tables.GENERATING[(1, 2)]
    assert len(data["generating"]) == 8
