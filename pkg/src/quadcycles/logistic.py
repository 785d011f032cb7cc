"""Transfer of 3-cycle results to the logistic map g_r(y) = r y (1 - y).

The affine map h(y) = -r y + r/2 conjugates g_r to x**2 + c with
c = -r (r - 2) / 4, i.e. f_c(h(y)) = h(g_r(y)). Logistic cycles are obtained
by pulling quadratic cycles back through h⁻¹; nothing is re-derived on the
logistic side.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Optional

import numpy as np

from .algebra import EXISTENCE_THRESHOLD, Branch, cycles_for
from .errors import DegenerateConjugacyError
from .quadmap import eval_f
from .stability import StabilityReport, classify

SQRT2 = math.sqrt(2.0)
#: Logistic parameters bounding the region where 3-cycles exist.
EXISTENCE_LOW = 1.0 - 2.0 * SQRT2
EXISTENCE_HIGH = 1.0 + 2.0 * SQRT2


@dataclass(frozen=True)
class ConjugacyMap:
    """h(x) = -r x + r/2 and its inverse h⁻¹(y) = 1/2 - y/r."""

    r: float

    def __call__(self, y: float) -> float:
        return -self.r * y + self.r / 2.0

    def inverse(self, x: float) -> float:
        if self.r == 0.0:
            raise DegenerateConjugacyError("h is constant for r = 0 and has no inverse")
        return 0.5 - x / self.r


@dataclass(frozen=True)
class LogisticWindow:
    """Logistic parameter intervals with a stable 3-cycle.

    ``lower = (r_min, 1 - 2√2)`` and ``upper = (1 + 2√2, r_max)``; both are
    open and are carried by c = -r(r-2)/4 onto (c̃, -7/4).
    """

    r_min: float
    r_max: float
    existence_low: float = EXISTENCE_LOW
    existence_high: float = EXISTENCE_HIGH

    @property
    def lower(self) -> tuple[float, float]:
        return (self.r_min, self.existence_low)

    @property
    def upper(self) -> tuple[float, float]:
        return (self.existence_high, self.r_max)


@dataclass(frozen=True)
class LogisticCycle:
    """A pulled-back 3-cycle (y2 = g(y1), y3 = g(y2), y1 = g(y3))."""

    y1: float
    y2: float
    y3: float
    branch: Branch
    report: StabilityReport

    @property
    def components(self) -> tuple[float, float, float]:
        return (self.y1, self.y2, self.y3)

    def closure_error(self, r: float) -> float:
        ys = self.components
        return max(abs(eval_g(r, ys[i]) - ys[(i + 1) % 3]) for i in range(3))


def c_of_r(r: float) -> float:
    return -r * (r - 2.0) / 4.0


def r_of_c(c: float) -> Optional[tuple[float, float]]:
    """Both logistic parameters conjugate to ``c``, ascending; ``None`` if c > 1/4."""
    disc = 1.0 - 4.0 * c
    if disc < 0.0:
        return None
    root = math.sqrt(disc)
    return (1.0 - root, 1.0 + root)


def eval_g(r: float, y: float) -> float:
    return r * y * (1.0 - y)


def deriv_g(r: float, y: float) -> float:
    return r * (1.0 - 2.0 * y)


def verify_conjugacy(r: float, y: float) -> float:
    """Pointwise residual ``|f_c(h(y)) - h(g_r(y))|`` with c = c_of_r(r)."""
    h = ConjugacyMap(r)
    return abs(eval_f(c_of_r(r), h(y)) - h(eval_g(r, y)))


def logistic_cycles(r: float) -> list[LogisticCycle]:
    """3-cycles of g_r with the stability verdict of their quadratic image.

    Raises
    ------
    DegenerateConjugacyError
        If ``r == 0``.
    """
    if r == 0.0:
        raise DegenerateConjugacyError("r = 0 makes the conjugacy degenerate")
    h = ConjugacyMap(r)
    c = c_of_r(r)
    out = []
    for cycle in cycles_for(c):
        ys = [h.inverse(x) for x in cycle.components]
        out.append(LogisticCycle(*ys, cycle.branch, classify(c, cycle.branch, cycle)))
    return out


def logistic_multiplier(r: float, cycle: LogisticCycle) -> float:
    """Product g'(y1) g'(y2) g'(y3), computed on the logistic side."""
    return float(np.prod([deriv_g(r, y) for y in cycle.components]))


def logistic_stable_window() -> LogisticWindow:
    a = np.cbrt(7660.0 + 540.0 * math.sqrt(201.0))
    b = np.cbrt(7660.0 - 540.0 * math.sqrt(201.0))
    half_width = math.sqrt(132.0 + 6.0 * a + 6.0 * b) / 6.0
    return LogisticWindow(1.0 - half_width, 1.0 + half_width)


def existence_region_contains(r: float) -> bool:
    """True iff g_r has a 3-cycle, i.e. r <= 1 - 2√2 or r >= 1 + 2√2."""
    return c_of_r(r) <= EXISTENCE_THRESHOLD
