"""Soft-edge Airy expansions of the level densities and wave functions.

Density:  sigma' rho(mu' + sigma' s) ~ sum_{j<=m} omega_{beta,j}(s; tau) h^j,
with (mu', sigma', h, tau) taken at the shifted indices (n', p').

Wave functions, centered at (n + 1/2, p + 1/2):

    sigma psi_sharp_n(mu + sigma s) ~ Ai + sum_k (p_k Ai + q_k Ai') h^k
    Psi_sharp_n(mu + sigma s)       ~ AI_0 + sum_k (P_k Ai + Q_k Ai') h^k
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from . import tables
from .densities import EnsembleSpec, wave_scaling
from .errors import DomainError, UnsupportedOrderError
from .polyalg import LABELS, AiryCombo, BiPoly
from .specfun import airy_basis
from .wavefns import Family

FAMILIES = ("gaussian", "laguerre")


def _family_key(family):
    if isinstance(family, Family):
        return "gaussian" if family.is_hermite else "laguerre"
    key = str(family).lower()
    if key in ("hermite", "gaussian"):
        return "gaussian"
    if key == "laguerre":
        return "laguerre"
    raise DomainError(f"unknown family {family!r}")


def _check_order(j, what="order"):
    if int(j) != j or j < 0:
        raise DomainError(f"{what} must be a non-negative integer, got {j!r}")
    if j > tables.MAX_ORDER:
        raise UnsupportedOrderError(
            f"{what} {j} requested; tables stop at {tables.MAX_ORDER}"
        )


def omega_coeff(beta, j, family):
    """Exact expansion term omega_{beta,j} as an AiryCombo."""
    if beta not in (1, 2, 4):
        raise DomainError(f"beta must be 1, 2 or 4, got {beta!r}")
    _check_order(j)
    return tables.density_combo(beta, j, _family_key(family))


def eval_omega(combo, s, tau=0.0):
    if not 0.0 <= tau <= 1.0:
        raise DomainError(f"tau must lie in [0, 1], got {tau!r}")
    return combo.evaluate(np.asarray(s, dtype=float), tau, airy_basis(s))


def expansion_density(spec: EnsembleSpec, s, m):
    """Truncation at order m of the density expansion, in rescaled units."""
    _check_order(m)
    sp = spec.scaling()
    fam = "gaussian" if spec.gaussian else "laguerre"
    basis = airy_basis(s)
    s_arr = np.asarray(s, dtype=float)
    total = 0.0
    for j in range(m + 1):
        combo = tables.density_combo(spec.beta, j, fam)
        total = total + combo.evaluate(s_arr, sp.tau, basis) * sp.h ** j
    return total


def expansion_density_terms(spec: EnsembleSpec, s):
    """List of the partial sums for m = 0, 1, 2, sharing one Airy evaluation."""
    sp = spec.scaling()
    fam = "gaussian" if spec.gaussian else "laguerre"
    basis = airy_basis(s)
    s_arr = np.asarray(s, dtype=float)
    out, total = [], 0.0
    for j in range(tables.MAX_ORDER + 1):
        combo = tables.density_combo(spec.beta, j, fam)
        total = total + combo.evaluate(s_arr, sp.tau, basis) * sp.h ** j
        out.append(total)
    return out


@dataclass(frozen=True)
class WaveExpansion:
    kind: str  # "psi" (p_k, q_k) or "Psi" (P_k, Q_k)
    order: int
    a: BiPoly  # coefficient of Ai
    b: BiPoly  # coefficient of Ai'


def wave_coeff(kind, k, family):
    if kind not in ("psi", "Psi"):
        raise DomainError(f"kind must be 'psi' or 'Psi', got {kind!r}")
    if k < 1:
        raise DomainError("wave-expansion orders start at k = 1")
    _check_order(k)
    a, b = tables.WAVE[_family_key(family)][kind][k]
    return WaveExpansion(kind, k, a, b)


def expansion_wave(family, n, s, m, which="psi"):
    """Order-m truncation of the rescaled psi_sharp_n or Psi_sharp_n."""
    _check_order(m)
    if which not in ("psi", "Psi"):
        raise DomainError(f"which must be 'psi' or 'Psi', got {which!r}")
    if not isinstance(family, Family):
        raise DomainError("expansion_wave needs a Family instance")
    sp = wave_scaling(family, n)
    ai, aip, aint = airy_basis(s)
    s_arr = np.asarray(s, dtype=float)
    total = ai if which == "psi" else aint
    for k in range(1, m + 1):
        w = wave_coeff(which, k, family)
        total = total + (w.a(s_arr, sp.tau) * ai + w.b(s_arr, sp.tau) * aip) * sp.h ** k
    return total


def tables_json():
    """All coefficient tables as plain JSON-ready data with exact rational text."""
    density = []
    for fam in FAMILIES:
        for beta in (1, 2, 4):
            for j in range(tables.MAX_ORDER + 1):
                combo = tables.density_combo(beta, j, fam)
                for label in LABELS:
                    if beta == 2 and label in ("Ai*AI", "Ai'*AI"):
                        continue
                    density.append({
                        "beta": beta,
                        "j": j,
                        "family": fam,
                        "term": label,
                        "nu": combo.nu,
                        "coefficient": combo.get(label).render(),
                    })
    wave = []
    for fam in FAMILIES:
        for kind in ("psi", "Psi"):
            for k, (a, b) in tables.WAVE[fam][kind].items():
                wave.append({"family": fam, "kind": kind, "k": k, "term": "Ai", "coefficient": a.render()})
                wave.append({"family": fam, "kind": kind, "k": k, "term": "Ai'", "coefficient": b.render()})
    generating = []
    for (beta, j), polys in tables.GENERATING.items():
        for k, poly in enumerate(polys, start=1):
            generating.append({"beta": beta, "j": j, "k": k, "coefficient": poly.render()})
    return {"density": density, "wave": wave, "generating": generating}


def leading_identity_holds(beta, family):
    """omega_{beta,0} == omega_{2,0} + Ai*AI_nu / 2 as exact data (beta = 1, 4)."""
    if beta not in (1, 4):
        raise DomainError("the leading-order relation concerns beta = 1 and 4")
    lhs = omega_coeff(beta, 0, family)
    rhs = omega_coeff(2, 0, family) + AiryCombo({"Ai*AI": BiPoly.const("1/2")}, 1 if beta == 1 else 0)
    return lhs == rhs and lhs.nu == rhs.nu
