"""
Bifurcation-diagram data
========================

Generate the ``c,x`` samples behind a bifurcation diagram and summarise
how many attractor points each parameter has. Plotting is left to
whatever tool reads the CSV.
"""

import sys

from quadcycles.bifurcation import read_csv, sweep, to_csv
from quadcycles.oracle import count_clusters

text = to_csv(sweep(-2.0, 0.0, samples=201, transient=2000, keep=64))
groups = read_csv(text)

# c = -2 reads as a single point: the critical orbit 0 -> -2 -> 2 lands
# exactly on the (repelling) fixed point 2.
for c, xs in groups.items():
    if abs(c * 100 - round(c * 100)) < 1e-9 or -1.77 < c < -1.74:
        n = count_clusters(xs, 1e-4)
        print(f"c = {c:+.3f}  attractor points: {n if n <= 16 else 'many'}")

if len(sys.argv) > 1:
    with open(sys.argv[1], "w", newline="\n") as fh:
        fh.write(text)
    print("wrote", sys.argv[1])
