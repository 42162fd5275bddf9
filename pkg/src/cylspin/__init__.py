"""Spin-orbit-split bound modes of a spin-1/2 particle in a cylindrical
step potential.

Two independent solver routes are provided: a perturbative two-component
calculation (delta-shell S_z L_z coupling at the well boundary) and the
exact four-component boundary-value problem, whose transverse wavenumbers
split by the sign of sigma*m_ell.  Both emit dispersion data, rotation
rates of the lobe pattern of parallel/anti-parallel superpositions, and
sampled probability densities.
"""

from .errors import (ConfigurationError, CutoffError, CylspinError,
                     DomainError, InternalConsistencyError,
                     PoleProximityError, SolverError)
from .model import (KLEIN_GUARD_DV, STRONG_INEQUALITY_FACTOR, ModeSpec,
                    OperatingPoint, RegimeWarning, WaveguideParams,
                    make_params, validate_regime)
from .scalar_modes import (DispersionPoint, ScalarMode, SoiShift, beta_shift,
                           characteristic_residual, dispersion_curve,
                           energy_shift, mode_from_wavenumbers,
                           normalization_brace, normalize, radial_profile,
                           rotation_rate_fw, soi_shift, solve_scalar_modes)
from .dirac_modes import (DiracModePair, FirstOrderSplit, dirac_residual_full,
                          form_equivalence, residual_signed, residual_unified,
                          rotation_rate_from_dispersion, solve_dirac_pair,
                          solve_first_order)
from .wavefield import (FieldGrid, GridSpec, lobe_angle_slope,
                        polar_norm_integral, sample_bispinor_density,
                        sample_eigenstate, sample_rotating_superposition)
from . import specfun

__version__ = "0.1.0"

__all__ = [
    "CylspinError", "ConfigurationError", "DomainError", "PoleProximityError",
    "SolverError", "CutoffError", "InternalConsistencyError",
    "WaveguideParams", "OperatingPoint", "ModeSpec", "RegimeWarning",
    "make_params", "validate_regime", "KLEIN_GUARD_DV", "STRONG_INEQUALITY_FACTOR",
    "ScalarMode", "SoiShift", "DispersionPoint", "solve_scalar_modes",
    "characteristic_residual", "normalization_brace", "normalize",
    "mode_from_wavenumbers", "radial_profile", "energy_shift", "beta_shift",
    "soi_shift", "rotation_rate_fw", "dispersion_curve",
    "DiracModePair", "FirstOrderSplit", "dirac_residual_full",
    "residual_signed", "residual_unified", "form_equivalence",
    "solve_dirac_pair", "solve_first_order", "rotation_rate_from_dispersion",
    "FieldGrid", "GridSpec", "sample_eigenstate",
    "sample_rotating_superposition", "sample_bispinor_density",
    "polar_norm_integral", "lobe_angle_slope",
    "specfun",
]
