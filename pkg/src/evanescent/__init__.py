"""Evanescent waves at total internal reflection.

Modules: :mod:`~evanescent.airy` (Airy function and its sector-correct
asymptotics), :mod:`~evanescent.borel` (Borel sums and late terms),
:mod:`~evanescent.eikonal` and :mod:`~evanescent.transport` (phase and
amplitude fields for linear wavefronts), :mod:`~evanescent.field`
(matched fields on both sides of the interface), :mod:`~evanescent.goos`
(lateral shift) and :mod:`~evanescent.cli`.
"""
from .airy import ai_asymptotic, ai_exact, ai_prime_exact, sector_of
from .borel import LateTermModel, continue_lambda, lambda_n, late_term, monodromy_jump, resum_tail
from .eikonal import MediumConfig, Region, RegionType, classify_point, phase, u_field, v_field
from .errors import DomainError, EvanescentError, ToleranceError
from .field import boundary_match, fresnel_phase_oracle, reflection_phase, sample_field, shadow_field
from .goos import beam_shift, delta_derivative, lateral_D, shift
from .profiles import ConstantProfile, GaussianProfile, RaisedCosineProfile, parse_profile
from .transport import coefficients, illuminated_amplitudes, shadow_amplitudes

__version__ = "0.1.0"

__all__ = [
    "ai_asymptotic", "ai_exact", "ai_prime_exact", "sector_of",
    "LateTermModel", "continue_lambda", "lambda_n", "late_term", "monodromy_jump", "resum_tail",
    "MediumConfig", "Region", "RegionType", "classify_point", "phase", "u_field", "v_field",
    "DomainError", "EvanescentError", "ToleranceError",
    "boundary_match", "fresnel_phase_oracle", "reflection_phase", "sample_field", "shadow_field",
    "beam_shift", "delta_derivative", "lateral_D", "shift",
    "ConstantProfile", "GaussianProfile", "RaisedCosineProfile", "parse_profile",
    "coefficients", "illuminated_amplitudes", "shadow_amplitudes",
]
