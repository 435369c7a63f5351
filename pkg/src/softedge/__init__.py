"""Finite-n level densities of the Gaussian and Laguerre ensembles and their
Airy-function expansions at the soft edge."""

from .densities import EnsembleSpec, rho_exact, rho_exact_altform, rho_rescaled
from .errors import (
    CapabilityError,
    DomainError,
    InconsistentSystemError,
    NonIntegrableTermError,
    QuadratureError,
    SoftEdgeError,
    UnsupportedOrderError,
)
from .expansions import eval_omega, expansion_density, expansion_wave, omega_coeff, wave_coeff
from .polyalg import AiryCombo, BiPoly, omega_from_P, reconstruct_P
from .quad import QuadSpec, inner_product, integrate, mass_check
from .scaling import ScalingParams, scaling_params, shifted_index
from .specfun import airy_ai, airy_ai_prime, airy_int
from .wavefns import Family

__all__ = [
    "AiryCombo",
    "BiPoly",
    "CapabilityError",
    "DomainError",
    "EnsembleSpec",
    "Family",
    "InconsistentSystemError",
    "NonIntegrableTermError",
    "QuadSpec",
    "QuadratureError",
    "ScalingParams",
    "SoftEdgeError",
    "UnsupportedOrderError",
    "airy_ai",
    "airy_ai_prime",
    "airy_int",
    "eval_omega",
    "expansion_density",
    "expansion_wave",
    "inner_product",
    "integrate",
    "mass_check",
    "omega_coeff",
    "omega_from_P",
    "reconstruct_P",
    "rho_exact",
    "rho_exact_altform",
    "rho_rescaled",
    "scaling_params",
    "shifted_index",
    "wave_coeff",
]
