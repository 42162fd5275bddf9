"""Real-valued cylinder functions of integer order.

A thin, validated layer over scipy.special providing the two families the
mode solvers consume: Bessel functions of the first kind J_n and modified
Bessel functions of the second kind K_n, together with the ratio
combinations J_{n+1}/J_n and K_{n+1}/K_n that appear in every
characteristic equation, derivative helpers, and the reflection-rule
wrappers for signed orders.

The core functions accept non-negative orders only; negative orders are
normalized at the call boundary through ``bessel_j_int`` / ``bessel_k_int``
using J_{-n}(x) = (-1)^n J_n(x) and K_{-n}(x) = K_n(x).  Keeping the
recurrences single-direction makes the identity tests unambiguous.

All functions are pure: identical inputs give bitwise-identical outputs.
"""

from __future__ import annotations

import math

from scipy.special import jn_zeros, jv, kv, kve

from .errors import DomainError, PoleProximityError

# x counts as "at a zero of J_n" when |J_n(x)| falls below this fraction of
# the local envelope max(|J_n|, |J_{n+1}|).  Zeros of J_n and J_{n+1}
# interlace, so the envelope never vanishes.  The fraction approximates the
# distance to the nearest zero: |J_n/J_{n+1}| ~ |x - x_zero| there.
JRATIO_POLE_GUARD = 1e-5


def _check_order(n: int) -> int:
    if not isinstance(n, (int,)) or isinstance(n, bool):
        raise DomainError(f"order must be an integer, got {n!r}")
    if n < 0:
        raise DomainError(f"order must be non-negative, got {n}")
    return n


def _check_arg(x: float) -> float:
    x = float(x)
    if not math.isfinite(x) or x <= 0.0:
        raise DomainError(f"argument must be finite and positive, got {x!r}")
    return x


def bessel_j(n: int, x: float) -> float:
    """J_n(x) for integer n >= 0, x > 0."""
    n = _check_order(n)
    x = _check_arg(x)
    return float(jv(n, x))


def bessel_k(n: int, x: float) -> float:
    """K_n(x) for integer n >= 0, x > 0.  Always positive."""
    n = _check_order(n)
    x = _check_arg(x)
    return float(kv(n, x))


def bessel_j_int(n: int, x: float) -> float:
    """J_n(x) for any integer order, via J_{-n}(x) = (-1)^n J_n(x)."""
    if n >= 0:
        return bessel_j(n, x)
    return bessel_j(-n, x) if (-n) % 2 == 0 else -bessel_j(-n, x)


def bessel_k_int(n: int, x: float) -> float:
    """K_n(x) for any integer order; K is even in its order."""
    return bessel_k(abs(n), x)


def jratio(n: int, x: float, pole_guard: float = JRATIO_POLE_GUARD) -> float:
    """J_{n+1}(x) / J_n(x), guarding against the poles at zeros of J_n.

    Raises PoleProximityError when x is within roughly ``pole_guard`` of a
    zero of J_n (relative-to-envelope test; see JRATIO_POLE_GUARD).  Callers
    doing root bracketing treat that as a bracket boundary.
    """
    n = _check_order(n)
    x = _check_arg(x)
    jn = float(jv(n, x))
    jn1 = float(jv(n + 1, x))
    if abs(jn) < pole_guard * max(abs(jn), abs(jn1)):
        raise PoleProximityError(n, x)
    return jn1 / jn


def kratio(n: int, x: float) -> float:
    """K_{n+1}(x) / K_n(x), computed from exponentially scaled values.

    The scaling factor e^x cancels in the ratio, so this stays finite and
    accurate for arguments where kv itself would underflow.  The ratio is
    always > 1.
    """
    n = _check_order(n)
    x = _check_arg(x)
    return float(kve(n + 1, x)) / float(kve(n, x))


def bessel_j_deriv(n: int, x: float) -> float:
    """J_n'(x) via J_n'(x) = J_{n-1}(x) - (n/x) J_n(x); J_0' = -J_1."""
    n = _check_order(n)
    x = _check_arg(x)
    if n == 0:
        return -float(jv(1, x))
    return float(jv(n - 1, x)) - (n / x) * float(jv(n, x))


def bessel_k_deriv(n: int, x: float) -> float:
    """K_n'(x) via K_n'(x) = -K_{n-1}(x) - (n/x) K_n(x); always negative."""
    n = _check_order(n)
    x = _check_arg(x)
    return -float(kv(abs(n - 1), x)) - (n / x) * float(kv(n, x))


def bessel_j_zeros(n: int, upper: float) -> list[float]:
    """All positive zeros of J_n strictly below ``upper``, ascending."""
    n = _check_order(n)
    if not math.isfinite(upper) or upper <= 0:
        raise DomainError(f"upper bound must be positive, got {upper!r}")
    # zeros are spaced by roughly pi, so this count always suffices
    count = max(4, int(upper / 3.0) + n + 4)
    zs = jn_zeros(n, count)
    while zs[-1] < upper:
        count *= 2
        zs = jn_zeros(n, count)
    return [float(z) for z in zs if z < upper]
