"""Unit conventions, potential parameters, and dimensionless groups.

Internal unit system: hbar = m = c = 1, lengths in units of the cylinder
radius a, energies in units of mc^2.  Every wavenumber is reported as a
dimensionless product with a (kappa*a, beta*a), which is how the
characteristic equations are naturally expressed.

The potential is the attractive step

    V(rho) = V0 - dV * theta(rho - a),        V0 > 0, dV > 0,

entering only through two dimensionless numbers: v0 = e V0 / mc^2 and
dv = e dV / mc^2.  The well strength combines with the Compton ratio
C = a mc/hbar = 2 pi a / lambda_Compton into

    R^2       = 2 C^2 dv          (nonrelativistic well strength)
    R_gamma^2 = 2 gamma_z C^2 dv  (its relativistic analogue)

R plays exactly the role of the normalized frequency ("V number") of a
step-index fiber: bound modes have inside wavenumber u = kappa*a and
outside decay constant w with u^2 + w^2 = R^2.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from .errors import ConfigurationError, DomainError

# single-particle guard: well depths beyond this would start to probe pair
# production, where a one-particle wave equation is no longer trustworthy
KLEIN_GUARD_DV = 0.1

# operational meaning of "much less than" for regime warnings
STRONG_INEQUALITY_FACTOR = 5.0


@dataclass(frozen=True)
class WaveguideParams:
    """Dimensionless step-potential geometry.

    compton_ratio : C = a mc / hbar, cylinder radius in reduced Compton
        wavelengths.
    v0 : well offset e V0 / mc^2.
    dv : well depth e dV / mc^2 (the only parameter entering the
        characteristic equations).
    gamma_z : longitudinal Lorentz factor used in the relativistic groups.
    """

    compton_ratio: float
    v0: float
    dv: float
    gamma_z: float = 1.0

    def __post_init__(self):
        c, v0, dv, gz = self.compton_ratio, self.v0, self.dv, self.gamma_z
        if not (math.isfinite(c) and c > 0):
            raise ConfigurationError(f"compton_ratio must be > 0, got {c!r}")
        if not (math.isfinite(dv) and dv > 0):
            raise ConfigurationError(f"well depth dv must be > 0, got {dv!r}")
        if not (math.isfinite(v0) and dv <= v0):
            raise ConfigurationError(
                f"well offset v0 must satisfy dv <= v0, got v0={v0!r}, dv={dv!r}")
        if dv >= KLEIN_GUARD_DV:
            raise ConfigurationError(
                f"well depth dv={dv!r} violates the single-particle guard dv < {KLEIN_GUARD_DV}")
        if not (math.isfinite(gz) and gz >= 1.0):
            raise ConfigurationError(f"gamma_z must be >= 1, got {gz!r}")

    @property
    def R(self) -> float:
        """Well-strength parameter, R = sqrt(2 C^2 dv)."""
        return math.sqrt(2.0 * self.compton_ratio ** 2 * self.dv)

    @property
    def R_gamma(self) -> float:
        """Relativistic well strength, R_gamma = sqrt(gamma_z) * R >= R."""
        return math.sqrt(2.0 * self.gamma_z * self.compton_ratio ** 2 * self.dv)

    @property
    def epsilon(self) -> float:
        """Small splitting parameter gamma_z * dv / 2."""
        return 0.5 * self.gamma_z * self.dv


@dataclass(frozen=True)
class OperatingPoint:
    """Longitudinal speed of the traveling mode, v_z/c in (0, 1)."""

    vz_over_c: float

    def __post_init__(self):
        v = self.vz_over_c
        if not (math.isfinite(v) and 0.0 < v < 1.0):
            raise ConfigurationError(f"vz_over_c must lie in (0, 1), got {v!r}")

    def beta_bar_a(self, params: WaveguideParams) -> float:
        """Mean propagation constant beta_bar * a = gamma_z * C * (v_z/c)."""
        return params.gamma_z * params.compton_ratio * self.vz_over_c


@dataclass(frozen=True)
class ModeSpec:
    """Quantum labels of one transverse bound state.

    m_ell : signed orbital angular momentum quantum number.
    sigma : spin quantum number, +1 or -1.
    radial_index : 0 for the lowest-u root at given |m_ell|, 1 for the
        next, and so on.
    """

    m_ell: int
    sigma: int
    radial_index: int = 0

    def __post_init__(self):
        if self.sigma not in (+1, -1):
            raise ConfigurationError(f"sigma must be +1 or -1, got {self.sigma!r}")
        if self.radial_index < 0:
            raise ConfigurationError(f"radial_index must be >= 0, got {self.radial_index!r}")

    @property
    def m_abs(self) -> int:
        return abs(self.m_ell)

    @property
    def parallel(self) -> bool:
        """True when spin and orbital angular momenta point the same way."""
        return self.sigma * self.m_ell > 0

    @property
    def m_j(self) -> float:
        """Total angular momentum z-projection, m_ell + sigma/2."""
        return self.m_ell + 0.5 * self.sigma


@dataclass(frozen=True)
class RegimeWarning:
    """One violated strong inequality; ratio < 1 means the plain inequality
    itself fails, 1 <= ratio < 5 means it holds but not strongly."""

    check: str
    ratio: float
    message: str

    def __str__(self) -> str:
        return self.message


def make_params(compton_ratio: float, v0: float, dv: float,
                gamma_z: float = 1.0) -> WaveguideParams:
    """Validated constructor for WaveguideParams.

    Raises ConfigurationError naming the violated bound.
    """
    return WaveguideParams(float(compton_ratio), float(v0), float(dv), float(gamma_z))


def validate_regime(params: WaveguideParams, op: OperatingPoint, u: float) -> list[RegimeWarning]:
    """Advisory checks of the bound-state / paraxial operating window.

    The window is (1/2) m v_T^2 << e V0 << |kappa/beta| mc^2 together with
    paraxiality kappa << beta.  ``u`` is a solved transverse wavenumber
    kappa*a.  "<<" is taken as a factor of STRONG_INEQUALITY_FACTOR; each
    violated strong inequality yields one warning, never an error.
    """
    if not (math.isfinite(u) and u > 0):
        raise DomainError(f"u must be a positive solved wavenumber, got {u!r}")
    f = STRONG_INEQUALITY_FACTOR
    bb = op.beta_bar_a(params)
    warnings: list[RegimeWarning] = []

    # transverse kinetic energy well below the well offset (bound states exist)
    vt2_half = 0.5 * (u / params.compton_ratio) ** 2
    ratio = params.v0 / vt2_half
    if ratio < f:
        warnings.append(RegimeWarning(
            "transverse-kinetic", ratio,
            f"(1/2)(v_T/c)^2 = {vt2_half:.3g} is not << v0 = {params.v0:.3g} "
            f"(ratio {ratio:.2f} < {f})"))

    # well offset well below the momentum-ratio bound (no pair creation)
    bound = u / bb
    ratio = bound / params.v0
    if ratio < f:
        warnings.append(RegimeWarning(
            "well-depth", ratio,
            f"v0 = {params.v0:.3g} is not << u/(beta_bar*a) = {bound:.3g} "
            f"(ratio {ratio:.2f} < {f})"))

    # paraxiality: transverse momentum well below longitudinal
    ratio = bb / u
    if ratio < f:
        warnings.append(RegimeWarning(
            "paraxiality", ratio,
            f"u = {u:.3g} is not << beta_bar*a = {bb:.3g} "
            f"(ratio {ratio:.2f} < {f})"))

    return warnings
