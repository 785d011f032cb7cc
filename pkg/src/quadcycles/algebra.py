"""Closed-form period-3 cycles of x**2 + c via elementary symmetric functions.

A 3-cycle (x1, x2, x3) is encoded by s1 = x1 + x2 + x3, s2 = x1 x2 + x2 x3 +
x3 x1 and s3 = x1 x2 x3. Genuine 3-cycles have s1 on the quadratic

    s1**2 + s1 + c + 2 = 0,

which has real solutions only for c <= -7/4. Each root s1 gives one branch,
and the cycle components are the roots of x**3 - s1 x**2 + s2 x - s3.
"""

from __future__ import annotations

import enum
import math
from dataclasses import dataclass

import numpy as np
from numpy.polynomial import polynomial as P

from .errors import PreconditionError
from .quadmap import eval_f

#: Largest parameter value that admits a 3-cycle (exact in binary).
EXISTENCE_THRESHOLD = -1.75

#: Branch triples closer than this (componentwise) are one cycle.
DEDUP_TOL = 1e-9


class Branch(enum.Enum):
    """Which root of s1**2 + s1 + c + 2 = 0 a cycle comes from."""

    TILDE = "tilde"  # s1 = (-1 - sqrt(-4c - 7)) / 2
    DOUBLE_TILDE = "doubletilde"  # s1 = (-1 + sqrt(-4c - 7)) / 2

    @classmethod
    def parse(cls, name: str) -> "Branch":
        key = name.strip().lower().replace("_", "").replace("-", "")
        for member in cls:
            if member.value == key:
                return member
        raise ValueError(f"unknown branch {name!r}; expected 'tilde' or 'doubletilde'")


@dataclass(frozen=True)
class SymmetricTriple:
    s1: float
    s2: float
    s3: float

    def as_tuple(self) -> tuple[float, float, float]:
        return (self.s1, self.s2, self.s3)


@dataclass(frozen=True)
class Cubic:
    """Monic cubic ``x**3 + b x**2 + c2 x + d``."""

    b: float
    c2: float
    d: float

    @classmethod
    def from_triple(cls, triple: SymmetricTriple) -> "Cubic":
        # + 0.0 turns -0.0 into 0.0
        return cls(-triple.s1 + 0.0, triple.s2, -triple.s3 + 0.0)

    def __call__(self, x: float) -> float:
        return ((x + self.b) * x + self.c2) * x + self.d

    def derivative(self, x: float) -> float:
        return (3.0 * x + 2.0 * self.b) * x + self.c2

    def coefficients(self) -> tuple[float, float, float, float]:
        """Coefficients in descending degree, leading 1 included."""
        return (1.0, self.b, self.c2, self.d)

    def ascending(self) -> np.ndarray:
        return np.array([self.d, self.c2, self.b, 1.0])


@dataclass(frozen=True)
class Cycle3:
    """An orbit-ordered 3-cycle: x2 = f(x1), x3 = f(x2), x1 = f(x3)."""

    x1: float
    x2: float
    x3: float
    branch: Branch

    @property
    def components(self) -> tuple[float, float, float]:
        return (self.x1, self.x2, self.x3)

    def closure_error(self, c: float) -> float:
        x1, x2, x3 = self.components
        return max(
            abs(eval_f(c, x1) - x2),
            abs(eval_f(c, x2) - x3),
            abs(eval_f(c, x3) - x1),
        )


def existence_condition(c: float) -> bool:
    """True iff x**2 + c has a 3-cycle, i.e. ``c <= -7/4``."""
    return c <= EXISTENCE_THRESHOLD


def _require_cycles(c: float) -> float:
    """Return sqrt(-4c - 7), raising when no 3-cycle exists at ``c``."""
    if not existence_condition(c):
        raise PreconditionError(
            f"no 3-cycles for c={c!r}; 3-cycles require c <= -7/4"
        )
    return math.sqrt(-4.0 * c - 7.0)


def symmetric_triple(c: float, branch: Branch) -> SymmetricTriple:
    root = _require_cycles(c)
    if branch is Branch.TILDE:
        return SymmetricTriple(
            (-1.0 - root) / 2.0,
            (2.0 * c - 1.0 + root) / 2.0,
            (c + 2.0 - c * root) / 2.0,
        )
    return SymmetricTriple(
        (-1.0 + root) / 2.0,
        (2.0 * c - 1.0 - root) / 2.0,
        (c + 2.0 + c * root) / 2.0,
    )


def cycle_cubic(c: float, branch: Branch) -> Cubic:
    return Cubic.from_triple(symmetric_triple(c, branch))


def cubic_discriminant_general(q: Cubic) -> float:
    """Discriminant B²C² - 4AC³ - 4B³D - 27A²D² + 18ABCD with A = 1."""
    b, c, d = q.b, q.c2, q.d
    return b * b * c * c - 4.0 * c**3 - 4.0 * b**3 * d - 27.0 * d * d + 18.0 * b * c * d


def cubic_discriminant_closed_form(c: float, branch: Branch) -> float:
    """Discriminant of the branch cubic as a closed form in ``c``.

    The Tilde cubic has ``16c² - 4c - 7 + 8c sqrt(-4c - 7)`` and the
    DoubleTilde cubic ``16c² - 4c - 7 - 8c sqrt(-4c - 7)``. At c = -2 these
    give 49 (for x³ + x² - 2x - 1) and 81 (for x³ - 3x + 1).
    """
    root = _require_cycles(c)
    base = 16.0 * c * c - 4.0 * c - 7.0
    cross = 8.0 * c * root
    return base + cross if branch is Branch.TILDE else base - cross


def solve_cubic_three_real(q: Cubic) -> tuple[float, float, float]:
    """Real roots of a monic cubic with non-negative discriminant, ascending.

    Uses the trigonometric form of the depressed cubic, then a single Newton
    step per root (kept only if it lowers the residual). Repeated roots are
    returned with multiplicity.

    Raises
    ------
    PreconditionError
        If the discriminant is negative, i.e. two roots are complex.
    """
    disc = cubic_discriminant_general(q)
    scale = 1.0 + max(abs(q.b), abs(q.c2), abs(q.d)) ** 4
    if disc < -1e-12 * scale:
        raise PreconditionError(f"cubic has complex roots (discriminant {disc:.3g})")

    shift = -q.b / 3.0
    p = q.c2 - q.b * q.b / 3.0
    r = 2.0 * q.b**3 / 27.0 - q.b * q.c2 / 3.0 + q.d
    m = 2.0 * math.sqrt(-p / 3.0) if p < 0.0 else 0.0
    if p * m == 0.0:
        # disc >= 0 forces p <= 0; p ~ 0 (or underflow) means a triple root
        roots = [shift] * 3
    else:
        arg = 3.0 * r / (p * m)
        arg = min(1.0, max(-1.0, arg))
        theta = math.acos(arg) / 3.0
        roots = [m * math.cos(theta - 2.0 * math.pi * k / 3.0) + shift for k in range(3)]

    polished = []
    for x in roots:
        slope = q.derivative(x)
        if slope != 0.0:
            candidate = x - q(x) / slope
            if abs(q(candidate)) < abs(q(x)):
                x = candidate
        polished.append(x)
    polished.sort()
    return (polished[0], polished[1], polished[2])


def _orbit_order(c: float, roots: tuple[float, float, float], branch: Branch) -> Cycle3:
    # Start at the smallest component; then pick the root nearest to f(x).
    remaining = sorted(roots)
    x1 = remaining.pop(0)
    fx = eval_f(c, x1)
    x2 = min(remaining, key=lambda r: abs(r - fx))
    remaining.remove(x2)
    return Cycle3(x1, x2, remaining[0], branch)


def cycle_for_branch(c: float, branch: Branch) -> Cycle3:
    """The orbit-ordered 3-cycle of one branch at ``c <= -7/4``."""
    roots = solve_cubic_three_real(cycle_cubic(c, branch))
    return _orbit_order(c, roots, branch)


def cycles_for(c: float) -> list[Cycle3]:
    """All real 3-cycles of x**2 + c.

    Empty for ``c > -7/4``, a single cycle at ``c == -7/4`` where the two
    branches coincide, and one cycle per branch below that.
    """
    if not existence_condition(c):
        return []
    tilde = symmetric_triple(c, Branch.TILDE)
    dtilde = symmetric_triple(c, Branch.DOUBLE_TILDE)
    branches = [Branch.TILDE]
    if max(abs(a - b) for a, b in zip(tilde.as_tuple(), dtilde.as_tuple())) >= DEDUP_TOL:
        branches.append(Branch.DOUBLE_TILDE)
    return [cycle_for_branch(c, br) for br in branches]


def verify_factorization_identity(c: float) -> float:
    """Max coefficient gap between f³(x) - x and (x² - x + c)·C̃(x)·C̿(x).

    Raises
    ------
    PreconditionError
        If ``c > -7/4``.
    """
    # local import: the oracle module depends on this one
    from .oracle import compose_f3_minus_x

    lhs = compose_f3_minus_x(c).coefficients
    fixed = np.array([c, -1.0, 1.0])
    rhs = P.polymul(
        P.polymul(fixed, cycle_cubic(c, Branch.TILDE).ascending()),
        cycle_cubic(c, Branch.DOUBLE_TILDE).ascending(),
    )
    size = max(len(lhs), len(rhs))
    lhs = np.pad(lhs, (0, size - len(lhs)))
    rhs = np.pad(rhs, (0, size - len(rhs)))
    return float(np.max(np.abs(lhs - rhs)))
