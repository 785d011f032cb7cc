"""
The stability window (c-tilde, -7/4)
====================================

Only one of the two cycles is ever attracting, and only on a short
parameter interval. At each end the multiplier is +1 or -1 and a
higher-order test takes over.
"""

import numpy as np

from quadcycles import Branch, c_tilde, classify, cycles_for, stability_window
from quadcycles.algebra import cycle_for_branch
from quadcycles.oracle import detect_period, orbit_tail

lo, hi = stability_window()
print(f"window: ({lo:.9f}, {hi})  width {hi - lo:.6f}")

for c in np.linspace(-1.80, -1.74, 13):
    line = [f"c = {c:+.4f}"]
    for cyc in cycles_for(c):
        rep = classify(c, cyc.branch, cyc)
        line.append(f"{cyc.branch.value}: λ = {rep.multiplier:+.4f} {rep.stability.value}")
    print("   ".join(line) if len(line) > 1 else line[0] + "   (no 3-cycles)")

# The endpoints are non-hyperbolic.
(boundary,) = cycles_for(-1.75)
print(classify(-1.75, boundary.branch, boundary))
ct = c_tilde().value
print(classify(ct, Branch.DOUBLE_TILDE, cycle_for_branch(ct, Branch.DOUBLE_TILDE)))

# The critical orbit finds the attracting cycle inside the window.
tail = orbit_tail(-1.76, 0.0, 2000, 30)
print("period detected at c = -1.76:", detect_period(tail, 8, 1e-9))
