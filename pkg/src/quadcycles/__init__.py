"""Period-3 cycles of the real quadratic map x**2 + c and the logistic map.

The cycles come from a closed form in the elementary symmetric functions of
the cycle points. They are classified by their multiplier or by the
higher-order tests at the two non-hyperbolic parameters. Results transfer to
r y (1 - y) through an affine conjugacy, and an independent numerical
oracle checks everything.
"""

from .algebra import (
    Branch,
    Cubic,
    Cycle3,
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
from .errors import DegenerateConjugacyError, DomainError, PreconditionError, QuadCyclesError
from .logistic import (
    ConjugacyMap,
    LogisticWindow,
    c_of_r,
    eval_g,
    logistic_cycles,
    logistic_stable_window,
    r_of_c,
    verify_conjugacy,
)
from .quadmap import FixedPoints, deriv_f, eval_f, fixed_points, iterate, schwarzian_f
from .report import AnalysisReport, analyze, regime
from .stability import (
    CTilde,
    StabilityClass,
    StabilityReport,
    c_tilde,
    classify,
    multiplier,
    schwarzian_F,
    second_derivative_F,
    stability_window,
)

__version__ = "0.1.0"
