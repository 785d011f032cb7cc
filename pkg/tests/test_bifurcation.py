import numpy as np
import pytest

from quadcycles.bifurcation import parameter_grid, read_csv, sweep, to_csv
from quadcycles.oracle import count_clusters, orbit_tail
from quadcycles.stability import c_tilde

CT = c_tilde().value


def clusters_by_c(text, radius=1e-4):
    return {c: count_clusters(xs, radius) for c, xs in read_csv(text).items()}


def test_grid():
    np.testing.assert_array_equal(parameter_grid(-1.0, 0.0, 3), [-1.0, -0.5, 0.0])
    with pytest.raises(ValueError):
        parameter_grid(0.0, 0.0, 10)
    with pytest.raises(ValueError):
        parameter_grid(-1.0, 0.0, 1)


def test_sweep_matches_scalar_orbits():
    records = sweep(-1.9, -0.2, samples=7, transient=300, keep=5)
    by_c = {}
    for rec in records:
        by_c.setdefault(rec.c, []).append(rec.x)
    for c, xs in by_c.items():
        assert xs == list(orbit_tail(c, 0.0, 300, 5).samples)


def test_sweep_is_ascending_and_drops_diverged():
    records = sweep(-2.5, 0.5, samples=31, transient=200, keep=4)
    cs = [r.c for r in records]
    assert cs == sorted(cs)
    assert max(cs) <= 0.25 + 1e-12
    assert min(cs) >= -2.0 - 1e-12


def test_csv_format():
    text = to_csv(sweep(-1.0, -0.5, samples=2, transient=10, keep=2))
    lines = text.split("\n")
    assert lines[0] == "c,x"
    assert lines[-1] == ""
    assert len(lines) == 1 + 4 + 1
    assert "\r" not in text
    assert lines[1].startswith("-1,")


def test_csv_deterministic_and_worker_independent():
    a = to_csv(sweep(-2.0, 0.0, samples=101, transient=200, keep=20, workers=1))
    b = to_csv(sweep(-2.0, 0.0, samples=101, transient=200, keep=20, workers=1))
    c = to_csv(sweep(-2.0, 0.0, samples=101, transient=200, keep=20, workers=4))
    assert a == b == c


def test_read_csv_requires_header():
    with pytest.raises(ValueError):
        read_csv("a,b\n1,2\n")


@pytest.mark.parametrize(
    "lo, hi, expected",
    [(-0.7, -0.1, 1), (-1.1, -0.9, 2), (CT + 5e-4, -1.75 - 5e-3, 3)],
)
def test_cluster_counts_per_regime(lo, hi, expected):
    text = to_csv(sweep(lo, hi, samples=40, transient=3000, keep=60))
    counts = clusters_by_c(text)
    assert counts and all(n == expected for n in counts.values())
