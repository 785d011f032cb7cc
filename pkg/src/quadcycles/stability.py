"""Stability of 3-cycles of x**2 + c.

Hyperbolic cycles are decided by the multiplier 8 x1 x2 x3. The two
non-hyperbolic cases that actually occur are handled by the matching
higher-order test:

* multiplier +1 (at c = -7/4): second derivative of F = f∘f∘f at the cycle
  points. Non-zero values mean the cycle is unstable.
* multiplier -1 (at c = c̃): Schwarzian derivative of F. Negative values at
  every cycle point mean the cycle is still asymptotically stable.
"""

from __future__ import annotations

import enum
import math
from dataclasses import dataclass
from typing import Optional

import numpy as np

from .algebra import EXISTENCE_THRESHOLD, Branch, Cycle3
from .errors import PreconditionError
from .quadmap import deriv_f, schwarzian_f

#: |multiplier -/+ 1| at or below this is treated as non-hyperbolic.
HYPERBOLICITY_TOL = 1e-9

#: Largest closure defect accepted by :func:`classify`.
CLOSURE_TOL = 1e-8


class StabilityClass(enum.Enum):
    ASYMPTOTICALLY_STABLE = "AsymptoticallyStable"
    UNSTABLE = "Unstable"
    NON_HYPERBOLIC_STABLE = "NonHyperbolicStable"
    NON_HYPERBOLIC_UNSTABLE = "NonHyperbolicUnstable"


@dataclass(frozen=True)
class StabilityReport:
    """Multiplier, verdict and, for non-hyperbolic cycles, the test values.

    ``diagnostic_kind`` is ``"second_derivative"`` or ``"schwarzian"`` when
    ``diagnostics`` holds the three per-component values, else ``None``.
    """

    multiplier: float
    stability: StabilityClass
    diagnostics: Optional[tuple[float, float, float]] = None
    diagnostic_kind: Optional[str] = None


@dataclass(frozen=True)
class CTilde:
    """The parameter where the stable 3-cycle loses stability."""

    value: float
    residual: float


def multiplier(cycle: Cycle3) -> float:
    x1, x2, x3 = cycle.components
    return 8.0 * x1 * x2 * x3


def _rotated(cycle: Cycle3, i: int) -> tuple[float, float, float]:
    if i not in (1, 2, 3):
        raise ValueError(f"component index must be 1, 2 or 3, got {i!r}")
    xs = cycle.components
    k = i - 1
    return xs[k], xs[(k + 1) % 3], xs[(k + 2) % 3]


def second_derivative_F(cycle: Cycle3, i: int) -> float:
    """(f∘f∘f)'' at component ``i`` by the chain rule.

    With a, b, e the component and its two successors this is
    32 a² b² + 16 a² e + 8 b e.
    """
    a, b, e = _rotated(cycle, i)
    return 32.0 * a * a * b * b + 16.0 * a * a * e + 8.0 * b * e


def schwarzian_F(cycle: Cycle3, i: int) -> float:
    """Schwarzian of f∘f∘f at component ``i``.

    Raises :class:`~quadcycles.errors.DomainError` if any component is
    within the Schwarzian guard of zero.
    """
    a, b, e = _rotated(cycle, i)
    # every component enters through Sf, so each must be off the singularity
    sa, sb, se = schwarzian_f(a), schwarzian_f(b), schwarzian_f(e)
    da, db = deriv_f(0.0, a), deriv_f(0.0, b)
    return se * (da * db) ** 2 + sb * da**2 + sa


def c_tilde() -> CTilde:
    """Real root of 64c³ + 128c² + 72c + 81, from its radical form."""
    root = 540.0 * math.sqrt(201.0)
    value = float(-np.cbrt(7660.0 + root) / 24.0 - np.cbrt(7660.0 - root) / 24.0 - 2.0 / 3.0)
    residual = ((64.0 * value + 128.0) * value + 72.0) * value + 81.0
    if abs(residual) > 1e-9:
        raise ArithmeticError(f"c-tilde radical has residual {residual!r}")
    return CTilde(value, residual)


def stability_window() -> tuple[float, float]:
    """Open interval of c where the DoubleTilde cycle is hyperbolic and stable."""
    return (c_tilde().value, EXISTENCE_THRESHOLD)


def classify(c: float, branch: Branch, cycle: Cycle3) -> StabilityReport:
    """Stability verdict for ``cycle``, the ``branch`` 3-cycle of x**2 + c.

    Raises
    ------
    PreconditionError
        If the branch tags disagree or the cycle does not close under f_c.
    """
    if cycle.branch is not branch:
        raise PreconditionError(f"cycle belongs to {cycle.branch.value}, not {branch.value}")
    if c > EXISTENCE_THRESHOLD:
        raise PreconditionError(f"no 3-cycles exist at c={c!r}")
    closure = cycle.closure_error(c)
    if not closure <= CLOSURE_TOL:
        raise PreconditionError(f"cycle does not close at c={c!r} (defect {closure:.3g})")

    lam = multiplier(cycle)
    if abs(lam - 1.0) <= HYPERBOLICITY_TOL:
        values = tuple(second_derivative_F(cycle, i) for i in (1, 2, 3))
        if all(v == 0.0 for v in values):
            raise ArithmeticError("second-derivative test is inconclusive")
        return StabilityReport(
            lam, StabilityClass.NON_HYPERBOLIC_UNSTABLE, values, "second_derivative"
        )
    if abs(lam + 1.0) <= HYPERBOLICITY_TOL:
        values = tuple(schwarzian_F(cycle, i) for i in (1, 2, 3))
        verdict = (
            StabilityClass.NON_HYPERBOLIC_STABLE
            if all(v < 0.0 for v in values)
            else StabilityClass.NON_HYPERBOLIC_UNSTABLE
        )
        return StabilityReport(lam, verdict, values, "schwarzian")
    if abs(lam) < 1.0:
        return StabilityReport(lam, StabilityClass.ASYMPTOTICALLY_STABLE)
    return StabilityReport(lam, StabilityClass.UNSTABLE)
