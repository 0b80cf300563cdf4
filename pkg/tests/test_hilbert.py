import random
from fractions import Fraction

import pytest

from genusbounds.classical import castelnuovo
from genusbounds.hilbert import (
    CaseReport,
    ConstraintSet,
    DecayRule,
    InfeasibleConstraints,
    case_analysis,
    decay_split,
    expand_decay,
    genus_upper_bound,
    minimal_profile,
    reference_bound_p4,
)


def test_unconstrained_closure_is_castelnuovo_envelope():
    prof = minimal_profile(ConstraintSet(d=21, n=3))
    assert prof.values == (1, 4, 7, 10, 13, 16, 19, 21)
    assert prof.genus_sum() == 57 == castelnuovo(4, 21)


def test_closure_with_fixed_and_lower_values():
    cs = ConstraintSet(d=30, n=3, fixed={1: 4, 2: 9}, lower={3: 14, 4: 19})
    assert minimal_profile(cs).values == (1, 4, 9, 14, 19, 22, 27, 30)


def test_closure_quadric_free_section():
    cs = ConstraintSet(d=30, n=3, fixed={2: 10})
    prof = minimal_profile(cs)
    assert prof.values == (1, 4, 10, 13, 19, 22, 28, 30)
    assert prof.values[3] >= 13 and prof.values[4] >= 19
    assert prof.values[5] >= 22 and prof.values[6] >= 28


def test_fixed_below_closed_floor_is_infeasible():
    with pytest.raises(InfeasibleConstraints) as err:
        minimal_profile(ConstraintSet(d=30, n=3, fixed={2: 6}))
    assert err.value.index == 2
    assert err.value.floor == 7


def test_fixed_at_closed_floor_is_feasible():
    # the superadditive floor at index 2 with n = 3 is 2*4 - 1 = 7
    prof = minimal_profile(ConstraintSet(d=30, n=3, fixed={2: 8}))
    assert prof.values[2] == 8


def test_closure_satisfies_all_profile_invariants():
    instances = [
        ConstraintSet(d=21, n=3),
        ConstraintSet(d=30, n=3, fixed={1: 4, 2: 9}, lower={3: 14, 4: 19}),
        ConstraintSet(d=30, n=3, fixed={2: 10}),
        ConstraintSet(d=40, n=4, lower={2: 12}),
        ConstraintSet(d=35, n=2),
    ]
    for cs in instances:
        minimal_profile(cs).check_invariants(cs.n)


def test_closure_is_least_by_decrement_probing():
    rng = random.Random(3)
    for _ in range(60):
        n = rng.randint(2, 5)
        d = rng.randint(n + 3, 40)
        lower = {rng.randint(1, 6): rng.randint(1, d) for _ in range(rng.randint(0, 2))}
        cs = ConstraintSet(d=d, n=n, lower=lower)
        h = minimal_profile(cs).values
        for i in range(1, len(h)):
            generators = [min(d, i * n + 1), cs.lower.get(i, 0), h[i - 1]]
            generators += [min(d, h[j] + h[i - j] - 1) for j in range(1, i)]
            if i == len(h) - 1:
                generators.append(d)  # horizon index is pinned at d
            assert h[i] == max(g for g in generators)


def test_castelnuovo_recovery_sweep():
    for n in range(2, 7):
        for d in range(n + 2, 120):
            est = genus_upper_bound(ConstraintSet(d=d, n=n))
            assert est.bound == castelnuovo(n + 1, d)


def test_lower_bound_constraints_never_raise_the_bound():
    rng = random.Random(11)
    for _ in range(200):
        n = rng.randint(2, 5)
        d = rng.randint(n + 3, 60)
        base = ConstraintSet(d=d, n=n)
        before = genus_upper_bound(base).bound
        i = rng.randint(1, max(2, d // n))
        after = genus_upper_bound(base.with_lower(i, rng.randint(1, d))).bound
        assert after <= before


def test_decay_split_dichotomy_at_17():
    base = ConstraintSet(d=17, n=3, fixed={1: 4, 2: 9}, strict=True)
    branches = decay_split(base, 3, 2)
    assert len(branches) == 2
    saturated = minimal_profile(branches[0])
    assert saturated.values == (1, 4, 9, 17)
    assert saturated.genus_sum() == 21
    kept = minimal_profile(branches[1])
    assert branches[1].lower[3] == 14
    assert kept.values == (1, 4, 9, 14, 17)
    assert kept.genus_sum() == 24
    # both stay below the reference 24.375
    ref = reference_bound_p4(17)
    assert max(saturated.genus_sum(), kept.genus_sum()) < ref


def test_decay_split_with_unsatisfiable_drop_saturates():
    base = ConstraintSet(d=17, n=3, fixed={1: 4, 2: 9})
    branches = decay_split(base, 3, 99)
    assert len(branches) == 1
    assert minimal_profile(branches[0]).values == (1, 4, 9, 17)


def test_decay_split_at_saturated_index_is_noop():
    base = ConstraintSet(d=17, n=3, fixed={1: 4, 2: 9})
    assert decay_split(base, 6, 2) == [base]


def test_expand_decay_fans_out():
    cs = ConstraintSet(d=17, n=3, fixed={1: 4, 2: 9}, decay=[DecayRule(index=3, drop=2)])
    branches = expand_decay(cs)
    assert len(branches) == 2
    assert all(not b.decay for b in branches)


def test_case_analysis_d24():
    reports = {r.case_id: r for r in case_analysis(24)}
    assert reports["I"].excluded and reports["I"].passed
    two = reports["II"]
    assert two.bound == 55
    assert two.strict
    assert two.passed
    assert two.verdict == "p_a < 55 = reference"
    deg5 = [b for b in two.branches if "degree-5" in b.label]
    assert deg5[0].tabulated == 4 * 24 - 41
    assert deg5[0].expression == "4d-41"


def test_case_analysis_d30_all_below_91():
    for report in case_analysis(30):
        if not report.excluded:
            assert report.bound < 91
            assert report.passed
    four = next(r for r in case_analysis(30) if r.case_id == "IV")
    assert four.bound == 84


def test_case_analysis_d18_koszul_floor():
    two = next(r for r in case_analysis(18) if r.case_id == "II")
    deg6 = [b for b in two.branches if "degree-6" in b.label]
    assert len(deg6) == 1
    assert deg6[0].constraints.lower[3] == 14
    assert deg6[0].bound == 28
    assert two.verdict == "p_a < 28 = reference"
    assert two.passed


def test_case_analysis_d17_degree6_splits():
    two = next(r for r in case_analysis(17) if r.case_id == "II")
    deg6_bounds = sorted(b.bound for b in two.branches if "degree-6" in b.label)
    assert deg6_bounds == [21, 23, 24]
    assert two.passed


def test_case_analysis_case3_tabulated_at_21():
    three = next(r for r in case_analysis(21) if r.case_id == "III")
    assert three.bound == 3 * 21 - 22 == 41
    assert three.strict
    # p_a <= 40 < 40 + 3/8
    assert three.passed
    assert reference_bound_p4(21) == Fraction(323, 8)


def test_case_analysis_rejects_out_of_range():
    with pytest.raises(ValueError):
        case_analysis(16)
    with pytest.raises(ValueError):
        case_analysis(144)
