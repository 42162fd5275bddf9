"""Exact four-component route to the spin-orbit splitting.

Matching the bound bispinor across the potential step couples the upper
J_m component to a lower component of order m_ell + sigma, so the
characteristic equation acquires a spin-dependent right-hand side.  Two
equivalent written forms are used:

signed form (orders carry the sign of m_ell; weak-potential limit)

    u J_{m_ell+sigma}(u)/J_{m_ell}(u) - [i w H_{m_ell+sigma}(iw)/H_{m_ell}(iw)]
        = eps * u J_{m_ell+sigma}(u)/J_{m_ell}(u)

unified form (absolute orders; s = sigma * sign(m_ell) = +-1)

    u J_{m+1}(u)/J_m(u) - w K_{m+1}(w)/K_m(w)
        = s * eps * u J_{m+s}(u)/J_m(u),      m = |m_ell|,

with w = sqrt(R_gamma^2 - u^2) and eps = gamma_z dv / 2.  Every
imaginary-argument Hankel ratio is rewritten through real K functions via
H_n(ix) = (-i)^(n+1) (2/pi) K_n(x), so the whole solver runs in real
arithmetic.  The two residuals satisfy exactly

    residual_signed = sigma * residual_unified,

which the validator sweeps as a property test.  Parallel states (s = +1)
come out with a slightly larger transverse wavenumber u+ > u-, hence a
smaller propagation constant, and the splitting converts to the rotation
rate through

    dbeta_rot * a = -(u+^2 - u-^2) / (4 gamma_z C (v_z/c)).

A one-term expansion about the mean root reproduces the perturbative
formula: the mean u_bar solves the even part of the characteristic
equation, the half-split follows from

    u_bar * du = eps |m_ell| / brace(u_bar, w_bar, m),

and dbeta_rot has the same closed form as the perturbative route with
(u_bar, w_bar) in place of the Schrodinger wavenumbers.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from .errors import (CutoffError, DomainError, InternalConsistencyError,
                     PoleProximityError)
from .model import OperatingPoint, WaveguideParams
from .rootfind import solve_ascending_roots
from .scalar_modes import normalization_brace
from .specfun import (JRATIO_POLE_GUARD, bessel_j, bessel_j_int, bessel_k_int,
                      jratio, kratio)

_EDGE_MARGIN = 1e-9

# powers of (-i): exact complex units, index mod 4
_MINUS_I_POW = (1 + 0j, -1j, -1 + 0j, 1j)


def _hankel_unit(n: int) -> complex:
    """Unit c_n with H_n(ix) = c_n (2/pi) K_|n|(x), any integer order.

    For n >= 0 this is (-i)^(n+1); negative orders pick up the reflection
    factor (-1)^|n|.
    """
    if n >= 0:
        return _MINUS_I_POW[(n + 1) % 4]
    return _MINUS_I_POW[(2 * (-n) + (-n) + 1) % 4]


def _j_ratio_signed(n_num: int, n_den: int, u: float) -> float:
    """J_{n_num}(u)/J_{n_den}(u) with reflection handled, pole-guarded on the
    denominator order."""
    jd = bessel_j_int(n_den, u)
    jn = bessel_j_int(n_num, u)
    if abs(jd) < JRATIO_POLE_GUARD * max(abs(jd), abs(jn)):
        raise PoleProximityError(abs(n_den), u)
    return jn / jd


def hankel_k_term(n: int, sigma: int, w: float) -> float:
    """Real value of i*w*H_{n+sigma}(iw)/H_n(iw), rewritten through K ratios.

    This is the outside-tail term of the signed characteristic form; the
    complex units multiply out to exactly +-1.
    """
    unit = 1j * _hankel_unit(n + sigma) / _hankel_unit(n)
    if unit.imag != 0.0:
        raise InternalConsistencyError(
            f"Hankel unit bookkeeping produced non-real factor {unit!r}")
    return unit.real * w * bessel_k_int(n + sigma, w) / bessel_k_int(n, w)


def residual_signed(u: float, w: float, eps: float, m_ell: int, sigma: int) -> float:
    """Signed-order characteristic residual (left minus right).

    Equal to sigma * residual_unified(...) exactly; both vanish on the same
    mode set.
    """
    if sigma not in (+1, -1):
        raise DomainError(f"sigma must be +-1, got {sigma!r}")
    jr = _j_ratio_signed(m_ell + sigma, m_ell, u)
    return (1.0 - eps) * u * jr - hankel_k_term(m_ell, sigma, w)


def residual_unified(u: float, w: float, eps: float, m_ell: int, sigma: int) -> float:
    """Absolute-order characteristic residual (left minus right).

    Requires m_ell != 0 (the unified form divides by sign(m_ell)); this is
    the form the solver drives to zero.
    """
    if sigma not in (+1, -1):
        raise DomainError(f"sigma must be +-1, got {sigma!r}")
    if m_ell == 0:
        raise DomainError("unified form needs m_ell != 0")
    m = abs(m_ell)
    s = sigma * (1 if m_ell > 0 else -1)
    rhs = s * eps * u * _j_ratio_signed(m + s, m, u)
    return u * jratio(m, u) - w * kratio(m, w) - rhs


def form_equivalence(u: float, w: float, eps: float, m_ell: int, sigma: int) -> tuple[float, float]:
    """Evaluate both characteristic forms at one point.

    Returns (residual_signed, residual_unified).  The exact sign
    bookkeeping between them is residual_signed == sigma * residual_unified;
    the validator asserts this to 1e-10 relative over random sweeps.
    """
    return (residual_signed(u, w, eps, m_ell, sigma),
            residual_unified(u, w, eps, m_ell, sigma))


def dirac_residual_full(u: float, params: WaveguideParams, m_ell: int, sigma: int) -> float:
    """Signed characteristic residual keeping the full step denominators.

    The weak-potential forms above drop the gamma_z*v0-dependent factors
    2 + gamma_z*v0 and 2 + gamma_z*(v0 - dv) multiplying the two sides;
    this variant keeps them, so its roots differ from the unified form's
    at second order in the well depth.  Pole proximity raises the usual
    bracket-boundary signal.
    """
    if sigma not in (+1, -1):
        raise DomainError(f"sigma must be +-1, got {sigma!r}")
    rg = params.R_gamma
    if not (0.0 < u < rg):
        raise DomainError(f"u must lie in (0, {rg!r}), got {u!r}")
    w = math.sqrt(rg * rg - u * u)
    d_in = 2.0 + params.gamma_z * params.v0
    d_out = 2.0 + params.gamma_z * (params.v0 - params.dv)
    jr = _j_ratio_signed(m_ell + sigma, m_ell, u)
    return u * jr / d_in - hankel_k_term(m_ell, sigma, w) / d_out


@dataclass(frozen=True)
class DiracModePair:
    """Parallel/anti-parallel exact wavenumbers and the derived splitting.

    u_plus (s=+1, parallel) exceeds u_minus (s=-1); u_bar and du are their
    half-sum and half-difference, w_bar = sqrt(R_gamma^2 - u_bar^2), and
    dBetaRot_a is the exact-route rotation rate (always negative).
    epsilon records gamma_z*dv/2.
    """

    m_ell: int
    radial_index: int
    u_plus: float
    u_minus: float
    u_bar: float
    du: float
    w_bar: float
    dBetaRot_a: float
    epsilon: float


@dataclass(frozen=True)
class FirstOrderSplit:
    """Mean root and half-split from the one-term expansion."""

    m_ell: int
    radial_index: int
    u_bar: float
    w_bar: float
    du: float
    dBetaRot_a: float


def _solve_branch(params: WaveguideParams, m_ell: int, s: int,
                  use_full: bool) -> list[float]:
    """All roots for one sign s = sigma*sign(m_ell), ascending."""
    rg = params.R_gamma
    sgn = 1 if m_ell > 0 else -1
    sigma = s * sgn
    if use_full:
        # the signed residual equals sigma * (ascending function), so flip
        f = lambda u: sigma * dirac_residual_full(u, params, m_ell, sigma)
    else:
        eps = params.epsilon

        def f(u, _eps=eps, _m=m_ell, _sig=sigma, _rg=rg):
            w = math.sqrt(_rg * _rg - u * u)
            return residual_unified(u, w, _eps, _m, _sig)

    return solve_ascending_roots(f, rg * _EDGE_MARGIN, rg * (1.0 - _EDGE_MARGIN))


def solve_dirac_pair(params: WaveguideParams, m_ell: int, radial_index: int,
                     op: OperatingPoint, use_full: bool = False) -> DiracModePair:
    """Solve the exact pair (u+, u-) at one radial index and form dbeta_rot.

    Roots are paired by radial ordinal: both branches share the pole
    partition, so the n-th root of each belongs to the same radial mode.
    ``use_full`` switches to the full-denominator characteristic form.
    """
    if m_ell == 0:
        raise DomainError("spin-orbit pair needs |m_ell| >= 1")
    if radial_index < 0:
        raise DomainError(f"radial_index must be >= 0, got {radial_index}")
    roots_p = _solve_branch(params, m_ell, +1, use_full)
    roots_m = _solve_branch(params, m_ell, -1, use_full)
    if radial_index >= len(roots_p) or radial_index >= len(roots_m):
        raise CutoffError(
            f"no bound pair at |m_ell|={abs(m_ell)}, n={radial_index} "
            f"(R_gamma={params.R_gamma!r}: {len(roots_p)} parallel / "
            f"{len(roots_m)} anti-parallel roots)")
    up, um = roots_p[radial_index], roots_m[radial_index]
    if not up > um:
        raise InternalConsistencyError(
            f"invalid root pairing: u+={up!r} <= u-={um!r} at n={radial_index}")
    spacing = min(
        abs(roots_p[i] - roots_p[radial_index])
        for i in range(len(roots_p)) if i != radial_index
    ) if len(roots_p) > 1 else math.inf
    if up - um > 0.5 * spacing:
        raise InternalConsistencyError(
            f"ambiguous pairing: split {up - um!r} comparable to root spacing {spacing!r}")
    u_bar = 0.5 * (up + um)
    du = 0.5 * (up - um)
    eps = params.epsilon
    if du > 10.0 * eps * u_bar:
        raise InternalConsistencyError(
            f"split du={du!r} outside the first-order regime (10*eps*u_bar="
            f"{10.0 * eps * u_bar!r})")
    w_bar = math.sqrt(params.R_gamma ** 2 - u_bar ** 2)
    dbeta = -(up * up - um * um) / (
        4.0 * params.gamma_z * params.compton_ratio * op.vz_over_c)
    return DiracModePair(m_ell, radial_index, up, um, u_bar, du, w_bar, dbeta, eps)


def solve_first_order(params: WaveguideParams, m_ell: int, radial_index: int,
                      op: OperatingPoint) -> FirstOrderSplit:
    """One-term expansion about the mean root.

    The mean equation is the even combination of the two characteristic
    branches,

        u J_{m+1}(u)/J_m(u) - w K_{m+1}(w)/K_m(w)
            = (eps/2) u (J_{m+1}(u) - J_{m-1}(u)) / J_m(u),

    the half-split is du = eps |m_ell| / (u_bar * brace), and the rotation
    rate keeps the same closed form as the perturbative route evaluated at
    (u_bar, w_bar).
    """
    if m_ell == 0:
        raise DomainError("spin-orbit pair needs |m_ell| >= 1")
    if radial_index < 0:
        raise DomainError(f"radial_index must be >= 0, got {radial_index}")
    m = abs(m_ell)
    rg = params.R_gamma
    eps = params.epsilon

    def f(u):
        w = math.sqrt(rg * rg - u * u)
        rhs = 0.5 * eps * u * (bessel_j(m + 1, u) - bessel_j_int(m - 1, u)) / bessel_j(m, u)
        return u * jratio(m, u) - w * kratio(m, w) - rhs

    roots = solve_ascending_roots(f, rg * _EDGE_MARGIN, rg * (1.0 - _EDGE_MARGIN))
    if radial_index >= len(roots):
        raise CutoffError(
            f"no bound mode at |m_ell|={m}, n={radial_index} "
            f"(R_gamma={rg!r}: {len(roots)} mean roots)")
    u_bar = roots[radial_index]
    w_bar = math.sqrt(rg * rg - u_bar * u_bar)
    brace = normalization_brace(u_bar, w_bar, m)
    if not (brace > 0.0):
        raise InternalConsistencyError(
            f"non-positive brace {brace!r} at mean root u_bar={u_bar!r}")
    du = eps * m / brace / u_bar
    dbeta = -m / op.vz_over_c * params.dv / (2.0 * params.compton_ratio) / brace
    return FirstOrderSplit(m_ell, radial_index, u_bar, w_bar, du, dbeta)


def rotation_rate_from_dispersion(pair: DiracModePair, params: WaveguideParams,
                                  op: OperatingPoint) -> float:
    """Cross-check route: subtract the two relativistic dispersion branches.

    Chooses the energy so the mean branch propagates at beta_bar_a, then
    returns (beta+ - beta-)*a/2.  Agrees with the pair's dBetaRot_a to
    second order in du; kept separate because the direct difference
    cancels catastrophically at small splittings while the u^2-difference
    form does not.
    """
    bb = op.beta_bar_a(params)
    base = bb * bb + pair.u_bar ** 2
    b2p = base - pair.u_plus ** 2
    b2m = base - pair.u_minus ** 2
    if b2p <= 0.0 or b2m <= 0.0:
        raise DomainError(
            f"operating point beta_bar_a={bb!r} puts a branch off the bound "
            f"dispersion (u+={pair.u_plus!r}, u-={pair.u_minus!r})")
    return 0.5 * (math.sqrt(b2p) - math.sqrt(b2m))
