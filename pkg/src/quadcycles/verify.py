"""Seeded cross-checks of every module, as driven by ``quadcycles verify``."""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Callable

import numpy as np

from . import algebra, logistic, oracle, quadmap, stability
from .algebra import Branch


@dataclass
class SuiteResult:
    name: str
    checked: int = 0
    failures: list[str] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.failures

    def check(self, condition: bool, message: str) -> None:
        self.checked += 1
        if not condition:
            self.failures.append(message)


def _rel(a: float, b: float) -> float:
    return abs(a - b) / max(1.0, abs(b))


def suite_quadmap(rng: np.random.Generator, trials: int) -> SuiteResult:
    res = SuiteResult("quadmap")
    h = 1e-6
    for _ in range(trials):
        c, x = rng.uniform(-3.0, 3.0, size=2)
        fd = (quadmap.eval_f(c, x + h) - quadmap.eval_f(c, x - h)) / (2 * h)
        res.check(abs(fd - quadmap.deriv_f(c, x)) <= 1e-5, f"derivative mismatch at c={c:.17g}, x={x:.17g}")
        cf = rng.uniform(-3.0, 0.25)
        fps = quadmap.fixed_points(cf)
        res.check(
            fps is not None
            and abs(quadmap.eval_f(cf, fps.p1) - fps.p1) <= 1e-12
            and abs(quadmap.eval_f(cf, fps.p2) - fps.p2) <= 1e-12,
            f"fixed points not fixed at c={cf:.17g}",
        )
        m, n = rng.integers(0, 20, size=2)
        x0 = rng.uniform(-1.0, 1.0)
        cc = rng.uniform(-2.0, 0.25)
        res.check(
            quadmap.iterate(cc, x0, m + n) == quadmap.iterate(cc, quadmap.iterate(cc, x0, m), n),
            f"iterate is not additive at c={cc:.17g}",
        )
    return res


def suite_algebra(rng: np.random.Generator, trials: int) -> SuiteResult:
    res = SuiteResult("algebra")
    for c in rng.uniform(-4.0, -1.75, size=trials):
        for br in Branch:
            t = algebra.symmetric_triple(c, br)
            res.check(
                abs(t.s1**2 + t.s1 + c + 2) <= 1e-10
                and abs(t.s2 - (-t.s1 + c - 1)) <= 1e-10
                and abs(t.s3 - (c * t.s1 + c + 1)) <= 1e-10,
                f"symmetric identities fail at c={c:.17g} ({br.value})",
            )
            general = algebra.cubic_discriminant_general(algebra.cycle_cubic(c, br))
            closed = algebra.cubic_discriminant_closed_form(c, br)
            res.check(
                closed > 0 and abs(general - closed) <= 1e-9 * abs(closed),
                f"discriminant mismatch at c={c:.17g} ({br.value})",
            )
        d1 = algebra.cubic_discriminant_closed_form(c, Branch.TILDE)
        d2 = algebra.cubic_discriminant_closed_form(c, Branch.DOUBLE_TILDE)
        target = (16 * c * c + 4 * c + 7) ** 2
        res.check(abs(d1 * d2 - target) <= 1e-9 * target, f"discriminant product fails at c={c:.17g}")
        for cyc in algebra.cycles_for(c):
            res.check(cyc.closure_error(c) <= 1e-9, f"cycle does not close at c={c:.17g}")
        coeffs = oracle.compose_f3_minus_x(c)
        res.check(
            algebra.verify_factorization_identity(c) <= 1e-8 * (1 + coeffs.max_abs()),
            f"factorization identity fails at c={c:.17g}",
        )
    return res


def suite_stability(rng: np.random.Generator, trials: int) -> SuiteResult:
    res = SuiteResult("stability")
    ct = stability.c_tilde().value
    for c in rng.uniform(-4.0, -1.75 - 1e-9, size=trials):
        lam_t = stability.multiplier(algebra.cycle_for_branch(c, Branch.TILDE))
        lam_d = stability.multiplier(algebra.cycle_for_branch(c, Branch.DOUBLE_TILDE))
        res.check(lam_t > 1.0, f"Tilde multiplier {lam_t:.17g} <= 1 at c={c:.17g}")
        res.check(lam_d < 1.0, f"DoubleTilde multiplier {lam_d:.17g} >= 1 at c={c:.17g}")
    for c in rng.uniform(ct + 1e-6, -1.75 - 1e-9, size=trials):
        lam = stability.multiplier(algebra.cycle_for_branch(c, Branch.DOUBLE_TILDE))
        res.check(abs(lam) < 1.0, f"|multiplier| >= 1 inside the window at c={c:.17g}")
    for c in rng.uniform(-4.0, ct - 1e-6, size=trials):
        lam = stability.multiplier(algebra.cycle_for_branch(c, Branch.DOUBLE_TILDE))
        res.check(lam < -1.0, f"multiplier {lam:.17g} >= -1 below c-tilde at c={c:.17g}")
    return res


def _admissible_r(rng: np.random.Generator, size: int) -> np.ndarray:
    high = rng.uniform(logistic.EXISTENCE_HIGH, 5.0, size=size)
    low = rng.uniform(-3.0, logistic.EXISTENCE_LOW, size=size)
    return np.where(rng.random(size) < 0.5, high, low)


def suite_logistic(rng: np.random.Generator, trials: int) -> SuiteResult:
    res = SuiteResult("logistic")
    rs, ys = rng.uniform(-5.0, 5.0, size=(2, trials))
    for r, y in zip(rs, ys):
        resid = logistic.verify_conjugacy(r, y)
        res.check(resid <= 1e-10 * (1 + y * y * r * r), f"conjugacy residual {resid:.3g} at r={r:.17g}, y={y:.17g}")
        pair = logistic.r_of_c(logistic.c_of_r(r))
        res.check(pair is not None and min(abs(p - r) for p in pair) <= 1e-10, f"r_of_c misses r={r:.17g}")
    for r in _admissible_r(rng, trials):
        for cyc in logistic.logistic_cycles(r):
            g_mult = logistic.logistic_multiplier(r, cyc)
            res.check(
                _rel(g_mult, cyc.report.multiplier) <= 1e-8,
                f"multiplier transfer fails at r={r:.17g}",
            )
            res.check(cyc.closure_error(r) <= 1e-8, f"logistic cycle does not close at r={r:.17g}")
    return res


def suite_oracle(rng: np.random.Generator, trials: int) -> SuiteResult:
    res = SuiteResult("oracle")
    for c in rng.uniform(-3.0, -1.75, size=trials):
        roots = oracle.isolate_real_roots(oracle.compose_f3_minus_x(c), -3.0, 3.0)
        fps = quadmap.fixed_points(c)
        closed = sorted(
            [fps.p1, fps.p2] + [x for cyc in algebra.cycles_for(c) for x in cyc.components]
        )
        res.check(
            len(roots) == len(closed)
            and all(abs(a - b) <= 1e-7 for a, b in zip(roots, closed)),
            f"root isolation disagrees with closed form at c={c:.17g}",
        )
    for c in rng.uniform(-3.0, 0.25, size=trials):
        num = oracle.compose_f3_minus_x(c)
        _, rem = oracle.poly_divide(num, oracle.Polynomial([c, -1.0, 1.0]))
        res.check(
            rem.max_abs() <= 1e-8 * (1 + num.max_abs()),
            f"fixed-point factor does not divide f^3(x) - x at c={c:.17g}",
        )
    return res


Suite = Callable[[np.random.Generator, int], SuiteResult]

SUITES: list[Suite] = [
    suite_quadmap,
    suite_algebra,
    suite_stability,
    suite_logistic,
    suite_oracle,
]


def run_all(seed: int, trials: int, suites: list[Suite] | None = None) -> list[SuiteResult]:
    if trials < 1:
        raise ValueError("trials must be at least 1")
    rng = np.random.default_rng(seed)
    results = []
    for suite in SUITES if suites is None else suites:
        try:
            results.append(suite(rng, trials))
        except Exception as exc:  # a crashing suite is a failed suite
            name = getattr(suite, "__name__", "suite").removeprefix("suite_")
            results.append(SuiteResult(name, 1, [f"{type(exc).__name__}: {exc}"]))
    return results
