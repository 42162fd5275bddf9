"""Schrodinger-level bound modes and first-order spin-orbit shifts.

The transverse problem is the classic step-guide eigenvalue problem: inside
the cylinder the radial profile is J_m(u rho/a), outside it is the matched
K_m(w rho/a) tail, and requiring value and slope continuity at rho = a
gives the characteristic equation

    F(u) = u J_{m+1}(u)/J_m(u) - w K_{m+1}(w)/K_m(w) = 0,
    w = sqrt(R^2 - u^2),  m = |m_ell|.

Each root u in (0, R) is one bound mode.  The spin-orbit interaction is a
delta-shell perturbation at rho = a proportional to S_z L_z, diagonal in
the (m_ell, sigma) basis; its first-order energy shift is

    dE/mc^2 = sigma m_ell (pi/2) dv (N a)^2 J_m(u)^2 / C^2,

which converts to a propagation-constant shift through the group velocity,
dbeta = -dE/(hbar v_z).  Half the parallel/anti-parallel splitting is the
rotation rate of the two-lobe superposition pattern,

    dbeta_rot * a = -|m_ell| (c/v_z) dv/(2C) / brace(u, w, m),

with brace() the K/J cross-product combination that also fixes the mode
normalization.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np
from scipy.special import jv, kv  # vectorized profile evaluation only

from .errors import DomainError, InternalConsistencyError, SolverError
from .model import ModeSpec, OperatingPoint, WaveguideParams
from .rootfind import solve_ascending_roots
from .specfun import (bessel_j, bessel_j_int, bessel_k, bessel_k_int, jratio,
                      kratio)

# accepted residual after refinement; anything worse marks a spurious root
RESIDUAL_TOL = 1e-10
# stay this far (relative) inside the (0, R) interval when scanning
_EDGE_MARGIN = 1e-9


@dataclass(frozen=True)
class ScalarMode:
    """One solved transverse bound state at Schrodinger level.

    u, w are the dimensionless inside/outside transverse constants
    (kappa0*a, kappa0tilde*a); norm_a2 is the squared normalization N^2 a^2
    of the 2-D transverse profile.
    """

    m_abs: int
    radial_index: int
    u: float
    w: float
    norm_a2: float


@dataclass(frozen=True)
class SoiShift:
    """First-order spin-orbit shifts of one (m_ell, sigma) state."""

    dE: float          # energy shift / mc^2
    dBeta_a: float     # propagation-constant shift * a
    dBetaRot_a: float  # rotation rate * a (0 for m_ell = 0)


@dataclass(frozen=True)
class DispersionPoint:
    """One (E, beta*a) sample; E is total-minus-rest energy in mc^2 units.
    beta_a is NaN for energies off the bound branch."""

    E: float
    beta_a: float


def characteristic_residual(u: float, m_abs: int, big_r: float) -> float:
    """F(u) for the scalar matching condition at well strength big_r."""
    if not (0.0 < u < big_r):
        raise DomainError(f"u must lie in (0, {big_r!r}), got {u!r}")
    w = math.sqrt(big_r * big_r - u * u)
    return u * jratio(m_abs, u) - w * kratio(m_abs, w)


def normalization_brace(u: float, w: float, m_abs: int) -> float:
    """K/J cross-product combination entering normalization and shifts:

        K_{m-1}(w) K_{m+1}(w) / K_m(w)^2 - J_{m-1}(u) J_{m+1}(u) / J_m(u)^2

    Positive for genuine bound modes.
    """
    kterm = bessel_k_int(m_abs - 1, w) * bessel_k(m_abs + 1, w) / bessel_k(m_abs, w) ** 2
    jterm = bessel_j_int(m_abs - 1, u) * bessel_j(m_abs + 1, u) / bessel_j(m_abs, u) ** 2
    return kterm - jterm


def normalize(u: float, w: float, m_abs: int) -> float:
    """Closed-form N^2 a^2 for the matched J/K profile.

    Raises InternalConsistencyError if the brace combination is not
    positive, which signals a spurious characteristic root.
    """
    try:
        brace = normalization_brace(u, w, m_abs)
    except ZeroDivisionError:
        raise InternalConsistencyError(
            f"normalization brace degenerate at u={u!r}, w={w!r}, m={m_abs}") from None
    if not (brace > 0.0) or not math.isfinite(brace):
        raise InternalConsistencyError(
            f"non-positive normalization brace {brace!r} at u={u!r}, w={w!r}, m={m_abs}")
    return 1.0 / (math.pi * bessel_j(m_abs, u) ** 2 * brace)


def mode_from_wavenumbers(m_abs: int, radial_index: int, u: float, w: float) -> ScalarMode:
    """Assemble a ScalarMode from solved wavenumbers, computing N^2 a^2."""
    return ScalarMode(m_abs, radial_index, u, w, normalize(u, w, m_abs))


def solve_scalar_modes(params: WaveguideParams, m_abs: int) -> list[ScalarMode]:
    """All bound modes at azimuthal order |m_ell| = m_abs, ascending in u.

    Returns an empty list below cutoff.  Each root is bisection-refined to
    better than 1e-12 in u and verified against RESIDUAL_TOL.
    """
    if m_abs < 0:
        raise DomainError(f"m_abs must be >= 0, got {m_abs}")
    big_r = params.R
    f = lambda u: characteristic_residual(u, m_abs, big_r)
    lo = big_r * _EDGE_MARGIN
    hi = big_r * (1.0 - _EDGE_MARGIN)
    modes = []
    for n, u in enumerate(solve_ascending_roots(f, lo, hi)):
        resid = f(u)
        if abs(resid) > RESIDUAL_TOL * (1.0 + u):
            raise SolverError(
                f"refined root u={u!r} (m={m_abs}, R={big_r!r}) has residual "
                f"{resid!r} beyond {RESIDUAL_TOL}*(1+u)")
        w = math.sqrt(big_r * big_r - u * u)
        modes.append(mode_from_wavenumbers(m_abs, n, u, w))
    return modes


def radial_profile(mode: ScalarMode, rho):
    """Normalized transverse amplitude N J_m(u rho) matched to the K tail.

    rho is in units of a; accepts scalars or arrays.  The returned amplitude
    squares to the probability density (the azimuthal phase is unimodular).
    """
    rho = np.asarray(rho, dtype=float)
    amp = math.sqrt(mode.norm_a2)
    inside = amp * jv(mode.m_abs, mode.u * np.minimum(rho, 1.0))
    match = amp * bessel_j(mode.m_abs, mode.u) / bessel_k(mode.m_abs, mode.w)
    outside = match * kv(mode.m_abs, mode.w * np.maximum(rho, 1.0))
    return np.where(rho <= 1.0, inside, outside)


def energy_shift(mode: ScalarMode, spec: ModeSpec, params: WaveguideParams) -> float:
    """First-order spin-orbit energy shift dE/mc^2 of state (m_ell, sigma).

    Proportional to sigma*m_ell: parallel states shift up, anti-parallel
    down, and m_ell = 0 states do not shift at all.
    """
    if spec.m_abs != mode.m_abs:
        raise DomainError(
            f"spec |m_ell|={spec.m_abs} does not match mode m_abs={mode.m_abs}")
    return (spec.sigma * spec.m_ell * (math.pi / 2.0) * params.dv * mode.norm_a2
            * bessel_j(mode.m_abs, mode.u) ** 2 / params.compton_ratio ** 2)


def beta_shift(dE: float, params: WaveguideParams, op: OperatingPoint) -> float:
    """Convert an energy shift to dbeta*a = -dE * C / (v_z/c).

    The sign is opposite to dE: at fixed energy, an upward-shifted curve
    crosses at a smaller propagation constant.
    """
    return -dE * params.compton_ratio / op.vz_over_c


def rotation_rate_fw(mode: ScalarMode, params: WaveguideParams, op: OperatingPoint) -> float:
    """Rotation rate dbeta_rot*a of the lobe pattern, perturbative route.

    Equals (dbeta_parallel - dbeta_antiparallel)/2 identically; always
    negative.  Requires |m_ell| >= 1.
    """
    if mode.m_abs < 1:
        raise DomainError("rotation rate needs |m_ell| >= 1; m_ell = 0 carries no OAM")
    brace = normalization_brace(mode.u, mode.w, mode.m_abs)
    return (-mode.m_abs / op.vz_over_c * params.dv
            / (2.0 * params.compton_ratio) / brace)


def soi_shift(mode: ScalarMode, spec: ModeSpec, params: WaveguideParams,
              op: OperatingPoint) -> SoiShift:
    """Bundle dE, dbeta*a, and the rotation rate for one labeled state."""
    dE = energy_shift(mode, spec, params)
    db = beta_shift(dE, params, op)
    rot = rotation_rate_fw(mode, params, op) if mode.m_abs >= 1 else 0.0
    return SoiShift(dE, db, rot)


def dispersion_curve(mode: ScalarMode, params: WaveguideParams, energies,
                     relativistic: bool = False) -> list[DispersionPoint]:
    """Sample beta(E)*a along the bound branch.

    E is always total-minus-rest energy in mc^2 units.  Nonrelativistic:
    (beta a)^2 = 2 C^2 (E + v0) - u^2.  Relativistic uses the inside branch
    of (beta a)^2 = C^2 [(1 + E + v0)^2 - 1] - u^2, which reduces to the
    former at low kinetic energy.  Energies with (beta a)^2 < 0 yield NaN
    markers rather than errors.
    """
    c2 = params.compton_ratio ** 2
    out = []
    for e in np.asarray(energies, dtype=float):
        if relativistic:
            b2 = c2 * ((1.0 + e + params.v0) ** 2 - 1.0) - mode.u ** 2
        else:
            b2 = 2.0 * c2 * (e + params.v0) - mode.u ** 2
        out.append(DispersionPoint(float(e), math.sqrt(b2) if b2 >= 0.0 else math.nan))
    return out
