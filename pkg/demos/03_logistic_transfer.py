"""
From x^2 + c to r y (1 - y)
===========================

Pull quadratic 3-cycles back to the logistic map and compare multipliers
computed independently on each side.
"""

from quadcycles import c_of_r, logistic_cycles, logistic_stable_window, verify_conjugacy
from quadcycles.logistic import logistic_multiplier

w = logistic_stable_window()
print(f"stable 3-cycle for r in ({w.r_min:.6f}, {w.existence_low:.6f}) or ({w.existence_high:.6f}, {w.r_max:.6f})")

for r in (3.5, 3.83, 3.84, 4.0, -1.835):
    c = c_of_r(r)
    print(f"\nr = {r}  ->  c = {c:.6f}")
    for cyc in logistic_cycles(r):
        print(
            f"  {cyc.branch.value:12s} y = ({cyc.y1:.6f}, {cyc.y2:.6f}, {cyc.y3:.6f})"
            f"  λ_f = {cyc.report.multiplier:+.6f}  λ_g = {logistic_multiplier(r, cyc):+.6f}"
            f"  {cyc.report.stability.value}"
        )

print("\nconjugacy residual at r = 3.83, y = 0.2:", verify_conjugacy(3.83, 0.2))
