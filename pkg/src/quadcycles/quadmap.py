"""The real quadratic family f_c(x) = x**2 + c and its basic calculus."""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Optional

from .errors import DomainError

#: |x| below this is treated as the singular point of the Schwarzian.
SCHWARZIAN_GUARD = 1e-9


@dataclass(frozen=True)
class FixedPoints:
    """Real fixed points ``p1 <= p2`` of ``x**2 + c``."""

    p1: float
    p2: float

    def as_tuple(self) -> tuple[float, float]:
        return (self.p1, self.p2)


def eval_f(c: float, x: float) -> float:
    return x * x + c


def deriv_f(c: float, x: float) -> float:
    # c is accepted for a uniform signature with eval_f
    return 2.0 * x


def fixed_points(c: float) -> Optional[FixedPoints]:
    """Fixed points of f_c, or ``None`` when ``c > 1/4``."""
    disc = 1.0 - 4.0 * c
    if disc < 0.0:
        return None
    root = math.sqrt(disc)
    return FixedPoints((1.0 - root) / 2.0, (1.0 + root) / 2.0)


def schwarzian_f(x: float) -> float:
    """Schwarzian derivative of x**2 + c, which is -3 / (2 x**2).

    Raises
    ------
    DomainError
        If ``|x| < SCHWARZIAN_GUARD``.
    """
    if abs(x) < SCHWARZIAN_GUARD:
        raise DomainError(f"Schwarzian of x**2 + c is undefined at x={x!r}")
    return -3.0 / (2.0 * x * x)


def iterate(c: float, x0: float, n: int) -> float:
    """Return the n-th iterate f_c^n(x0); ``n == 0`` returns ``x0``.

    Orbits that escape simply overflow to ``inf``; nothing is raised.
    """
    if n < 0:
        raise ValueError("n must be non-negative")
    x = x0
    for _ in range(n):
        x = x * x + c
    return x
