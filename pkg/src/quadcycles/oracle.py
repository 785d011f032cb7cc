"""Independent numerical checks: polynomial algebra, root isolation, orbits.

Nothing here uses the symmetric-function formulas, so agreement with
:mod:`quadcycles.algebra` is a genuine cross-check.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional, Sequence

import numpy as np
from numpy.polynomial import polynomial as P

from .errors import PreconditionError

TRIM_TOL = 1e-14
ESCAPE_BOUND = 10.0
GRID_POINTS = 4096
ROOT_TOL = 1e-9
MERGE_TOL = 1e-7


@dataclass(frozen=True, eq=False)
class Polynomial:
    """Real polynomial with coefficients in ascending degree."""

    coefficients: np.ndarray

    def __init__(self, coefficients: Sequence[float]):
        coeffs = np.atleast_1d(np.asarray(coefficients, dtype=float))
        nonzero = np.nonzero(np.abs(coeffs) > TRIM_TOL)[0]
        coeffs = coeffs[: nonzero[-1] + 1] if nonzero.size else np.zeros(1)
        object.__setattr__(self, "coefficients", coeffs.copy())

    @property
    def degree(self) -> int:
        return len(self.coefficients) - 1

    def is_zero(self) -> bool:
        return self.degree == 0 and self.coefficients[0] == 0.0

    def __call__(self, x):
        return P.polyval(x, self.coefficients)

    def deriv(self) -> "Polynomial":
        return Polynomial(P.polyder(self.coefficients))

    def max_abs(self) -> float:
        return float(np.max(np.abs(self.coefficients)))

    def __repr__(self) -> str:
        return f"Polynomial({self.coefficients.tolist()})"


def poly_multiply(a: Polynomial, b: Polynomial) -> Polynomial:
    return Polynomial(P.polymul(a.coefficients, b.coefficients))


def poly_divide(num: Polynomial, den: Polynomial) -> tuple[Polynomial, Polynomial]:
    """Return ``(quotient, remainder)`` with ``num = quotient*den + remainder``."""
    if den.is_zero():
        raise ZeroDivisionError("polynomial division by the zero polynomial")
    quot, rem = P.polydiv(num.coefficients, den.coefficients)
    return Polynomial(quot), Polynomial(rem)


def compose_f3_minus_x(c: float) -> Polynomial:
    """Coefficients of ((x² + c)² + c)² + c - x, built by composition."""
    f = np.array([c, 0.0, 1.0])
    g = f
    for _ in range(2):
        g = P.polymul(g, g)
        g[0] += c
    g = g.copy()
    g[1] -= 1.0
    return Polynomial(g)


def _bisect(p: Polynomial, a: float, b: float, pa: float) -> float:
    for _ in range(200):
        m = 0.5 * (a + b)
        if m == a or m == b:
            break
        pm = p(m)
        if pm == 0.0:
            return m
        if (pm < 0.0) == (pa < 0.0):
            a, pa = m, pm
        else:
            b = m
    return 0.5 * (a + b)


def _newton_polish(p: Polynomial, dp: Polynomial, x: float, steps: int = 3) -> float:
    for _ in range(steps):
        slope = dp(x)
        if slope == 0.0:
            break
        candidate = x - p(x) / slope
        if not abs(p(candidate)) < abs(p(x)):
            break
        x = candidate
    return x


def _critical_points(p: Polynomial, lo: float, hi: float) -> list[float]:
    if p.degree < 2:
        return []
    return isolate_real_roots(p.deriv(), lo, hi, _touching=False)


def isolate_real_roots(
    p: Polynomial, lo: float, hi: float, *, _touching: bool = True
) -> list[float]:
    """All real roots of ``p`` in ``[lo, hi]``, ascending.

    Sign changes are bracketed on a uniform grid refined with the critical
    points of ``p`` (found recursively from ``p'``); each bracket is bisected
    and Newton-polished. A critical point where ``|p| <= 1e-9`` counts as an
    even-multiplicity root. Roots closer than 1e-7 are merged.
    """
    if not lo < hi:
        raise ValueError("need lo < hi")
    if p.is_zero():
        raise ValueError("the zero polynomial has no isolated roots")
    if p.degree == 0:
        return []

    crit = _critical_points(p, lo, hi)
    xs = np.union1d(np.linspace(lo, hi, GRID_POINTS), np.asarray(crit, dtype=float))
    vals = p(xs)
    dp = p.deriv()

    found: list[float] = [float(x) for x in xs[vals == 0.0]]
    signs = np.sign(vals)
    for i in np.nonzero(signs[:-1] * signs[1:] < 0)[0]:
        root = _bisect(p, float(xs[i]), float(xs[i + 1]), float(vals[i]))
        found.append(float(_newton_polish(p, dp, root)))
    if _touching:
        for x in crit:
            if abs(p(x)) <= ROOT_TOL:
                found.append(float(x))

    found.sort()
    merged: list[float] = []
    for x in found:
        if merged and x - merged[-1] <= MERGE_TOL:
            if abs(p(x)) < abs(p(merged[-1])):  # keep the better-polished twin
                merged[-1] = x
            continue
        merged.append(x)
    return merged


@dataclass(frozen=True)
class OrbitTail:
    """Iterates recorded after a transient; ``diverged`` if the orbit escaped."""

    samples: tuple[float, ...]
    diverged: bool = False


def orbit_tail(
    c: float,
    x0: float,
    transient: int,
    keep: int,
    escape: float = ESCAPE_BOUND,
) -> OrbitTail:
    """Iterate x**2 + c from ``x0``, discard ``transient`` steps, keep ``keep``.

    Iteration stops as soon as ``|x| > escape``; the tail then holds the
    samples recorded so far and is flagged as diverged.
    """
    if keep < 1:
        raise ValueError("keep must be at least 1")
    x = x0
    for _ in range(transient):
        x = x * x + c
        if abs(x) > escape:
            return OrbitTail((), True)
    samples = []
    for _ in range(keep):
        x = x * x + c
        if abs(x) > escape:
            return OrbitTail(tuple(samples), True)
        samples.append(x)
    return OrbitTail(tuple(samples))


def detect_period(tail: OrbitTail, max_period: int, tol: float) -> Optional[int]:
    """Smallest ``p <= max_period`` with ``|x[n+p] - x[n]| <= tol`` for all n."""
    if tail.diverged:
        raise PreconditionError("cannot detect the period of a diverged orbit")
    if max_period < 1:
        raise ValueError("max_period must be at least 1")
    xs = np.asarray(tail.samples)
    for p in range(1, min(max_period, len(xs) - 1) + 1):
        if np.all(np.abs(xs[p:] - xs[:-p]) <= tol):
            return p
    return None


def count_clusters(values: Sequence[float], radius: float) -> int:
    """Number of groups left after splitting sorted values at gaps > radius."""
    xs = np.sort(np.asarray(values, dtype=float))
    if xs.size == 0:
        return 0
    return int(np.count_nonzero(np.diff(xs) > radius)) + 1
