"""Closed-form fluid limit of the greedy-vs-balanced game on K_n.

Normalising x cleaned vertices to t = x/n and y placed brushes to
f(t) = y/n**2 gives f'(t) = 2(1 - t - f(t)/(1 - t)) with f(0) = 0, whose
solution is f(t) = -2(1-t)^2 ln(1-t).  The game ends where f' vanishes:
t0 = 1 - e^{-1/2}, with f(t0) = 1/e, which is where the n^2/e asymptotic
comes from.
"""

from __future__ import annotations

import math


def ode_f(t: float) -> float:
    """f(t) = -2 (1-t)^2 ln(1-t) for 0 <= t < 1."""
    if not 0 <= t < 1:
        raise ValueError("t must lie in [0, 1)")
    if t == 0:
        return 0.0
    u = 1.0 - t
    return -2.0 * u * u * math.log(u)


def ode_fprime(t: float) -> float:
    """f'(t) = 2 (1-t) (2 ln(1-t) + 1)."""
    if not 0 <= t < 1:
        raise ValueError("t must lie in [0, 1)")
    u = 1.0 - t
    return 2.0 * u * (2.0 * math.log(u) + 1.0)


def ode_constants() -> tuple[float, float]:
    """(t0, f(t0)) = (1 - e^{-1/2}, 1/e): the stationary point and value."""
    t0 = 1.0 - math.exp(-0.5)
    return t0, 1.0 / math.e
