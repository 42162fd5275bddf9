"""Pole-aware bracketing and bisection for the characteristic functions.

Every characteristic function in this package shares one structure on the
solving interval: it is strictly increasing between consecutive poles, the
poles sit at zeros of J_m (upward +inf -> downward -inf jumps), and each
pole-to-pole stretch holds at most one root.  A uniform scan therefore
classifies sign changes unambiguously: (-,+) is a root bracket, (+,-) is a
pole crossing.  Evaluations that raise PoleProximityError mark bracket
boundaries rather than failures.
"""

from __future__ import annotations

from collections.abc import Callable

from .errors import PoleProximityError, SolverError

DEFAULT_SCAN_POINTS = 2048
# target bracket width; near-cutoff roots sit where the characteristic
# function is steep, so refining essentially to machine width keeps the
# residual check meaningful at no real cost (~10 extra halvings)
BISECT_XTOL = 1e-15


def bracket_ascending_roots(f: Callable[[float], float], lo: float, hi: float,
                            n: int = DEFAULT_SCAN_POINTS) -> list[tuple[float, float, float, float]]:
    """Scan [lo, hi] uniformly and return (-,+) sign-change brackets.

    Requires f to increase through each of its roots and to jump downward at
    its poles (true for all the J/K characteristic functions here).  Returns
    (a, b, fa, fb) tuples ascending in a.
    """
    if not (hi > lo):
        raise SolverError(f"empty scan interval [{lo!r}, {hi!r}]")
    step = (hi - lo) / n
    brackets = []
    prev_x = prev_f = None
    for i in range(n + 1):
        x = lo + i * step
        try:
            fx = f(x)
        except PoleProximityError:
            prev_x = prev_f = None
            continue
        if fx == 0.0:
            # exact hit; degenerate bracket refines trivially
            brackets.append((x, x, 0.0, 0.0))
            prev_x = prev_f = None
            continue
        if prev_f is not None and prev_f < 0.0 < fx:
            brackets.append((prev_x, x, prev_f, fx))
        prev_x, prev_f = x, fx
    return brackets


def bisect(f: Callable[[float], float], a: float, b: float,
           fa: float, fb: float, xtol: float = BISECT_XTOL,
           max_iter: int = 200) -> float:
    """Bisection on an (-,+) bracket; PoleProximityError inside the bracket
    is sidestepped by nudging the midpoint (cannot recur: the bracket holds
    no pole)."""
    if a == b:
        return a
    if not (fa < 0.0 < fb):
        raise SolverError(f"invalid bracket [{a!r}, {b!r}] with f=({fa!r}, {fb!r})")
    a0, b0 = a, b
    for _ in range(max_iter):
        mid = 0.5 * (a + b)
        if mid == a or mid == b:  # interval no longer representable
            return mid
        try:
            fm = f(mid)
        except PoleProximityError:
            mid = mid + 0.26 * (b - mid)
            fm = f(mid)
        if fm == 0.0:
            return mid
        if fm < 0.0:
            a = mid
        else:
            b = mid
        if b - a < xtol:
            return 0.5 * (a + b)
    raise SolverError(
        f"bisection did not converge on bracket [{a0!r}, {b0!r}] "
        f"(last interval [{a!r}, {b!r}], width {b - a!r})")


def solve_ascending_roots(f: Callable[[float], float], lo: float, hi: float,
                          n: int = DEFAULT_SCAN_POINTS) -> list[float]:
    """All roots of f on (lo, hi), ascending, refined to ~BISECT_XTOL."""
    return [bisect(f, a, b, fa, fb) for a, b, fa, fb in bracket_ascending_roots(f, lo, hi, n)]
