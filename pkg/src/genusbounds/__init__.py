"""Exact genus bounds for projective curves off quadrics and cubics.

Four layers:

* `arith` - exact integers, rationals, Euclidean splits, exact ceilings of
  fractional powers;
* `classical` - Castelnuovo's bound, the Castelnuovo-Halphen bracket with
  its degree thresholds, and the section/ideal dimension counts;
* `bounds` - the quadric- and cubic-free bounds themselves, the profiles
  behind them, and the cone construction certifying sharpness;
* `hilbert` - the least-fixpoint closure of Hilbert-function constraints
  and the replay of the low-degree case analysis in four-space;
* `surfaces` - exact-rank certification that parametrized surfaces lie on
  no low-degree hypersurface.

Everything is exact; no floating point enters any computation.
"""

from .arith import Decomposition, Rat, binom, ceil_power_product, decompose, iroot
from .bounds import (
    ExtremalConstruction,
    GenusBound,
    cone_curve_genus,
    genus_bound_p4,
    genus_bound_p4_odd_acm,
    genus_bound_p5,
    genus_bracket,
    quintic_genus_bound,
    quintic_profile,
    scroll_degree_cubics,
    scroll_degree_quadrics,
)
from .classical import (
    HalphenEstimate,
    PiClass,
    Thresholds,
    castelnuovo,
    castelnuovo_closed_form,
    eh_pi2_bound,
    halphen_interval,
    scroll_h0,
    section_h0_upper,
    sigma,
    surface_ideal_lower_bound,
    threshold_d0,
    threshold_d1,
    thresholds,
)
from .hilbert import (
    CaseBranch,
    CaseReport,
    ConstraintSet,
    DecayRule,
    GenusEstimate,
    HilbertProfile,
    InfeasibleConstraints,
    case_analysis,
    decay_split,
    expand_decay,
    genus_upper_bound,
    minimal_profile,
    reference_bound_p4,
)
from .surfaces import (
    Certification,
    DegenerateParameter,
    H0Result,
    InconclusiveRank,
    ParamSurface,
    certified_projection,
    certify_not_on_hypersurface,
    generic_projection,
    h0_ideal,
    maximal_rank_expectation,
    parametrize,
    scroll,
    veronese,
)
from .verify import Check, run_suite

__version__ = "0.1.0"
