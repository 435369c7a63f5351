"""Exact coefficient tables of the soft-edge expansions.

Single source of truth for every rational polynomial used by
:mod:`softedge.expansions`, :mod:`softedge.polyalg` checks and the CLI.
Gaussian and Laguerre tables are transcribed independently, so that the
tau = 0 specialization is a genuine check rather than a tautology.
"""

from __future__ import annotations

from fractions import Fraction as F

from .polyalg import ONE, S, TAU, ZERO, AiryCombo, BiPoly

s, t = S, TAU
c = BiPoly.const


def _combo(p, q, r, u=ZERO, v=ZERO):
    return {"Ai^2": p, "Ai'^2": q, "Ai*Ai'": r, "Ai*AI": u, "Ai'*AI": v}


# density tables, beta = 2: (p~, q~, r~) ------------------------------------
UNITARY = {
    "gaussian": {
        0: _combo(-s, ONE, ZERO),
        1: _combo(-F(3, 5) * s**2, F(2, 5) * s, c(F(3, 5))),
        2: _combo(
            F(39, 175) * s**3 + F(9, 100),
            -F(3, 175) * s**2,
            -F(1, 25) * s**4 - F(99, 175) * s,
        ),
    },
    "laguerre": {
        0: _combo(-s, ONE, ZERO),
        1: _combo(
            F(3, 5) * (2 * t - 1) * s**2,
            -F(2, 5) * (2 * t - 1) * s,
            (3 - t) / 5,
        ),
        2: _combo(
            -(214 * t**2 - 79 * t - 39) * s**3 / 175 + (t - 3) ** 2 / 100,
            (143 * t**2 - 103 * t - 3) * s**2 / 175,
            -((2 * t - 1) ** 2) * s**4 / 25 + (29 * t**2 - 4 * t - 99) * s / 175,
        ),
    },
}

# density tables, beta = 1 and 4: (p, q, r, u, v) ---------------------------
ORTHO_SYMPLECTIC = {
    "gaussian": {
        0: _combo(-s, ONE, ZERO, c(F(1, 2)), ZERO),
        1: _combo(-s**2 / 2, F(2, 5) * s, c(F(3, 10)), -s / 10, s**2 / 10),
        2: _combo(
            F(3, 25) * s**3 + F(279, 700),
            -F(27, 350) * s**2,
            -s**4 / 100 - F(27, 140) * s,
            s**5 / 100 + F(9, 140) * s**2,
            -F(3, 70) * s**3 - F(9, 70),
        ),
    },
    "laguerre": {
        0: _combo(-s, ONE, ZERO, c(F(1, 2)), ZERO),
        1: _combo(
            (2 * t - 1) * s**2 / 2,
            -F(2, 5) * (2 * t - 1) * s,
            (3 - t) / 10,
            -(3 * t + 1) * s / 10,
            -(2 * t - 1) * s**2 / 10,
        ),
        2: _combo(
            -(51 * t**2 - 26 * t - 6) * s**3 / 50 + (37 * t**2 - 372 * t + 558) / 1400,
            (272 * t**2 - 157 * t - 27) * s**2 / 350,
            -((2 * t - 1) ** 2) * s**4 / 100 + (13 * t**2 - 10 * t - 27) * s / 140,
            (2 * t - 1) ** 2 * s**5 / 100 + (33 * t**2 + 8 * t + 9) * s**2 / 140,
            (17 * t**2 - 5 * t - 3) * s**3 / 70 + (t**2 + 24 * t - 36) / 280,
        ),
    },
}

# wave-function tables: k -> (p_k, q_k) for psi_sharp, (P_k, Q_k) for Psi_sharp
WAVE = {
    "gaussian": {
        "psi": {
            1: (-s / 5, s**2 / 5),
            2: (s**5 / 50 + F(9, 70) * s**2, -F(3, 35) * s**3 - F(9, 35)),
        },
        "Psi": {
            1: (s**2 / 5, c(F(-3, 5))),
            2: (-F(29, 175) * s**3 - F(309, 350), s**4 / 50 + F(219, 350) * s),
        },
    },
    "laguerre": {
        "psi": {
            1: (-(3 * t + 1) * s / 5, -(2 * t - 1) * s**2 / 5),
            2: (
                (2 * t - 1) ** 2 * s**5 / 50 + (33 * t**2 + 8 * t + 9) * s**2 / 70,
                (17 * t**2 - 5 * t - 3) * s**3 / 35 + (t**2 + 24 * t - 36) / 140,
            ),
        },
        "Psi": {
            1: (-(2 * t - 1) * s**2 / 5, (t - 3) / 5),
            2: (
                (29 * t**2 + 31 * t - 29) * s**3 / 175 + (23 * t**2 + 412 * t - 618) / 700,
                (2 * t - 1) ** 2 * s**4 / 50 - (9 * t**2 + 146 * t - 219) * s / 350,
            ),
        },
    },
}

# generating-function polynomials P_{beta,j,1..2j} (beta = 4 shares beta = 1)
GENERATING = {
    (2, 1): [-(2 * t - 1) * s**2 / 5, (t - 3) / 10],
    (1, 1): [-(2 * t - 1) * s**2 / 5, (t - 3) / 5],
    (1, 2): [
        (43 * t**2 - 18 * t - 8) * s**3 / 175 + (9 * t**2 + 496 * t - 744) / 700,
        (2 * t - 1) ** 2 * s**4 / 50 - 2 * (4 * t**2 + 26 * t - 39) * s / 175,
        -(t - 3) * (2 * t - 1) * s**2 / 25,
        (t - 3) ** 2 / 50,
    ],
}

MAX_ORDER = 2


def density_combo(beta, j, family):
    """AiryCombo omega_{beta,j} from the tables (no validation)."""
    table = UNITARY if beta == 2 else ORTHO_SYMPLECTIC
    nu = 1 if beta == 1 else 0
    return AiryCombo(table[family][j], nu)
