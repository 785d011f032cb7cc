import math

import numpy as np
import pytest
from hypothesis import given, strategies as st

from conftest import f3_pointwise, int_polymul
from quadcycles.algebra import (
    Branch,
    Cubic,
    SymmetricTriple,
    cubic_discriminant_closed_form,
    cubic_discriminant_general,
    cycle_cubic,
    cycles_for,
    existence_condition,
    solve_cubic_three_real,
    symmetric_triple,
    verify_factorization_identity,
)
from quadcycles.errors import PreconditionError
from quadcycles.oracle import compose_f3_minus_x

T, D = Branch.TILDE, Branch.DOUBLE_TILDE
below = st.floats(min_value=-4.0, max_value=-1.75)


def rotations(xs):
    xs = tuple(xs)
    return [xs[k:] + xs[:k] for k in range(3)]


def brute_discriminant(roots):
    a, b, c = roots
    return ((a - b) * (b - c) * (c - a)) ** 2


@pytest.mark.parametrize("c, expected", [(0.0, False), (-1.75, True), (-2.0, True), (-1.7499999999, False)])
def test_existence_condition(c, expected):
    assert existence_condition(c) is expected


def test_symmetric_triple_examples():
    assert symmetric_triple(-2.0, T).as_tuple() == (-1.0, -2.0, 1.0)
    assert symmetric_triple(-2.0, D).as_tuple() == (0.0, -3.0, -1.0)
    for br in Branch:
        assert symmetric_triple(-1.75, br).as_tuple() == (-0.5, -2.25, 0.125)
    with pytest.raises(PreconditionError):
        symmetric_triple(-1.7, T)


def test_cycle_cubic_examples():
    for br in Branch:
        assert cycle_cubic(-1.75, br).coefficients() == (1.0, 0.5, -2.25, -0.125)
    assert cycle_cubic(-2.0, T).coefficients() == (1.0, 1.0, -2.0, -1.0)
    assert cycle_cubic(-2.0, D).coefficients() == (1.0, 0.0, -3.0, 1.0)
    with pytest.raises(PreconditionError):
        cycle_cubic(0.0, D)


def test_general_discriminant_examples():
    assert cubic_discriminant_general(Cubic(0.0, -3.0, 1.0)) == 81.0
    assert cubic_discriminant_general(Cubic(1.0, -2.0, -1.0)) == 49.0
    assert cubic_discriminant_general(Cubic(-3.0, 3.0, -1.0)) == 0.0


def test_general_discriminant_matches_root_differences():
    # oracle: prod (xi - xj)^2 over the known roots 2cos(2πk/7), 2cos(2πk/9)
    sept = [2 * math.cos(2 * math.pi * k / 7) for k in (1, 2, 3)]
    nine = [2 * math.cos(math.radians(a)) for a in (40, 80, 160)]
    assert cubic_discriminant_general(Cubic(1.0, -2.0, -1.0)) == pytest.approx(brute_discriminant(sept), rel=1e-12)
    assert cubic_discriminant_general(Cubic(0.0, -3.0, 1.0)) == pytest.approx(brute_discriminant(nine), rel=1e-12)


def test_closed_form_discriminant_examples():
    # the x^3 - 3x + 1 branch has 81, the x^3 + x^2 - 2x - 1 branch 49
    assert cubic_discriminant_closed_form(-2.0, D) == 81.0
    assert cubic_discriminant_closed_form(-2.0, T) == 49.0
    for br in Branch:
        assert cubic_discriminant_closed_form(-1.75, br) == 49.0
        assert cubic_discriminant_general(cycle_cubic(-1.75, br)) == pytest.approx(49.0, rel=1e-12)
    with pytest.raises(PreconditionError):
        cubic_discriminant_closed_form(-1.0, T)


def test_solve_cubic_examples():
    nine = sorted(2 * math.cos(math.radians(a)) for a in (160, 80, 40))
    assert solve_cubic_three_real(Cubic(0.0, -3.0, 1.0)) == pytest.approx(nine, abs=1e-12)
    assert solve_cubic_three_real(Cubic(0.5, -2.25, -0.125)) == pytest.approx((-1.746, -0.054, 1.301), abs=5e-3)
    assert solve_cubic_three_real(Cubic(-3.0, 3.0, -1.0)) == (1.0, 1.0, 1.0)


def test_solve_cubic_repeated_root():
    # (x - 1)^2 (x + 2) = x^3 - 3x + 2
    roots = solve_cubic_three_real(Cubic(0.0, -3.0, 2.0))
    assert roots == pytest.approx((-2.0, 1.0, 1.0), abs=1e-7)


def test_solve_cubic_rejects_complex_roots():
    with pytest.raises(PreconditionError):
        solve_cubic_three_real(Cubic(0.0, 1.0, 0.0))  # x^3 + x


@given(st.lists(st.floats(min_value=-5, max_value=5), min_size=3, max_size=3))
def test_solve_cubic_recovers_roots(roots):
    roots = sorted(roots)
    a, b, c = roots
    q = Cubic(-(a + b + c), a * b + b * c + c * a, -a * b * c)
    got = solve_cubic_three_real(q)
    assert list(got) == sorted(got)
    for x in got:
        assert abs(q(x)) <= 1e-9
    # well-separated roots are recovered individually
    if min(b - a, c - b) > 1e-3:
        assert got == pytest.approx(roots, abs=1e-6)


def test_cycles_for_examples():
    assert cycles_for(-1.0) == []
    assert cycles_for(0.3) == []

    (only,) = cycles_for(-1.75)
    assert only.components == pytest.approx((-1.746, 1.301, -0.054), abs=5e-3)

    both = cycles_for(-2.0)
    assert [cyc.branch for cyc in both] == [T, D]
    dt = both[1].components
    assert any(r == pytest.approx((1.5321, 0.3473, -1.8794), abs=1e-4) for r in rotations(dt))


@given(below)
def test_cycles_close_and_are_ordered(c):
    cycles = cycles_for(c)
    assert len(cycles) in (1, 2)
    for cyc in cycles:
        assert cyc.closure_error(c) <= 1e-9
        assert cyc.x1 == min(cyc.components)
        assert f3_pointwise(c, cyc.x1) == pytest.approx(cyc.x1, abs=1e-8)


def test_cycle_components_distinct(rng):
    for c in rng.uniform(-4.0, -1.75 - 1e-9, size=300):
        for cyc in cycles_for(c):
            xs = sorted(cyc.components)
            assert min(xs[1] - xs[0], xs[2] - xs[1]) >= 1e-7


def test_symmetric_identities(rng):
    for c in rng.uniform(-4.0, -1.75, size=500):
        for br in Branch:
            t = symmetric_triple(c, br)
            assert abs(t.s1**2 + t.s1 + c + 2) <= 1e-10
            assert abs(t.s2 - (-t.s1 + c - 1)) <= 1e-10
            assert abs(t.s3 - (c * t.s1 + c + 1)) <= 1e-10


def test_triple_matches_cycle_components(rng):
    for c in rng.uniform(-4.0, -1.75, size=100):
        for cyc in cycles_for(c):
            x1, x2, x3 = cyc.components
            t = symmetric_triple(c, cyc.branch)
            assert x1 + x2 + x3 == pytest.approx(t.s1, abs=1e-9)
            assert x1 * x2 + x2 * x3 + x3 * x1 == pytest.approx(t.s2, abs=1e-9)
            assert x1 * x2 * x3 == pytest.approx(t.s3, abs=1e-9)


def test_discriminant_consistency_and_product(rng):
    for c in rng.uniform(-4.0, -1.75, size=500):
        d = {}
        for br in Branch:
            closed = cubic_discriminant_closed_form(c, br)
            general = cubic_discriminant_general(cycle_cubic(c, br))
            assert closed > 0
            assert general == pytest.approx(closed, rel=1e-9)
            d[br] = closed
        assert d[T] * d[D] == pytest.approx((16 * c * c + 4 * c + 7) ** 2, rel=1e-9)


def test_factorization_identity_examples():
    for c in (-2.0, -1.75, -3.0):
        assert verify_factorization_identity(c) <= 1e-9
    with pytest.raises(PreconditionError):
        verify_factorization_identity(-1.0)


def test_factorization_identity_exact_integers_at_minus_two():
    # oracle: exact integer expansion of the three factors
    expected = int_polymul(int_polymul([-2, -1, 1], [-1, -2, 1, 1]), [1, -3, 0, 1])
    assert compose_f3_minus_x(-2.0).coefficients.tolist() == [float(v) for v in expected]


def test_factorization_identity_random(rng):
    for c in rng.uniform(-4.0, -1.75, size=200):
        scale = 1 + compose_f3_minus_x(c).max_abs()
        assert verify_factorization_identity(c) <= 1e-8 * scale


def test_cubic_value_and_helpers():
    q = Cubic.from_triple(SymmetricTriple(0.0, -3.0, -1.0))
    assert q.coefficients() == (1.0, 0.0, -3.0, 1.0)
    assert q(0.0) == 1.0
    assert q.derivative(1.0) == 0.0
    np.testing.assert_array_equal(q.ascending(), [1.0, -3.0, 0.0, 1.0])


def test_branch_parse():
    assert Branch.parse("tilde") is T
    assert Branch.parse("DoubleTilde") is D
    assert Branch.parse("double_tilde") is D
    with pytest.raises(ValueError):
        Branch.parse("hat")
