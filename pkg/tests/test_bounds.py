from fractions import Fraction

import pytest

from genusbounds.arith import binom
from genusbounds.bounds import (
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
from genusbounds.classical import castelnuovo, castelnuovo_closed_form


def closed_form_pi1(d):
    m, eps = divmod(d - 1, 5)
    return 5 * binom(m, 2) + m * (eps + 1) + 1 + binom(eps, 4)


def closed_form_pi0(d):
    m, eps = divmod(d - 1, 5)
    return 5 * binom(m, 2) + m * eps + 4


def test_p4_anchors():
    assert genus_bound_p4(24).as_int() == 55 == (12 - 1) * (12 - 2) // 2
    assert genus_bound_p4(18).as_int() == 28
    assert genus_bound_p4(30).as_int() == 91


def test_p4_odd_degree_is_strict_and_fractional():
    gb = genus_bound_p4(25)
    assert gb.value == Fraction(25 * 19, 8) + 1
    assert gb.strict
    with pytest.raises(ValueError):
        gb.as_int()


def test_p4_even_is_half_degree_plane_curve_genus():
    for d in range(18, 200, 2):
        e = d // 2
        assert genus_bound_p4(d).as_int() == (e - 1) * (e - 2) // 2


def test_p4_annotations():
    gb = genus_bound_p4(24)
    assert gb.valid_from == 17
    assert "Veronese" in gb.attained_by


def test_p4_odd_acm_values():
    assert genus_bound_p4_odd_acm(144).as_int() == 2003
    assert genus_bound_p4_odd_acm(24).as_int() == 47


def test_p4_odd_acm_matches_quintic_bound():
    for d in range(16, 500):
        assert genus_bound_p4_odd_acm(d).as_int() == quintic_genus_bound(d, 1)


def test_p4_odd_acm_below_general_even_case():
    for d in range(144, 1001, 2):
        assert genus_bound_p4_odd_acm(d).as_int() < genus_bound_p4(d).as_int()


def test_quintic_profiles():
    assert quintic_profile(24, 0).values == (1, 4, 9, 16, 21, 24)
    assert quintic_profile(24, 1).values == (1, 4, 10, 15, 20, 24)


def test_quintic_profile_eps4_passes_through_d_minus_1():
    # d = 30 has eps = 4, so the genus-1 profile holds at 29 one step
    assert quintic_profile(30, 1).values == (1, 4, 10, 15, 20, 25, 29, 30)
    assert quintic_profile(30, 0).values[-1] == 30
    assert 29 not in quintic_profile(30, 0).values


def test_quintic_genus_values():
    assert quintic_genus_bound(24, 0) == 46 == 20 + 15 + 8 + 3
    assert quintic_genus_bound(24, 1) == 47 == 20 + 14 + 9 + 4


def test_quintic_genus_closed_forms_and_ordering():
    for d in range(20, 501):
        g0 = quintic_genus_bound(d, 0)
        g1 = quintic_genus_bound(d, 1)
        assert g0 == closed_form_pi0(d)
        assert g1 == closed_form_pi1(d)
        assert g0 < g1


def test_p5_anchor_and_identity():
    assert genus_bound_p5(217).as_int() == 3780
    for d in range(216, 600):
        assert genus_bound_p5(d).as_int() == castelnuovo(7, d)


def test_p5_dominates_degree7_surface_bracket():
    for d in range(180, 1200):
        assert Fraction(d * d, 14) - Fraction(3 * d, 14) + 115 < genus_bound_p5(d).value


def test_scroll_degree_quadrics_table():
    assert scroll_degree_quadrics(7) == 11
    assert scroll_degree_quadrics(8) == 14
    assert scroll_degree_quadrics(10) == 21


def test_scroll_degree_quadrics_rejects_multiples_of_3():
    with pytest.raises(ValueError, match="divisible by 3"):
        scroll_degree_quadrics(9)


def test_scroll_degree_quadrics_minimality():
    for r in range(7, 41):
        if r % 3 == 0:
            continue
        s = scroll_degree_quadrics(r)
        assert binom(r + 2, 2) - 3 * (s + 1) <= 0 < binom(r + 2, 2) - 3 * s


def test_scroll_degree_cubics_table():
    for r, s in ((9, 36), (10, 47), (11, 60), (18, 221), (19, 256)):
        assert scroll_degree_cubics(r) == s
        assert 6 * s + 4 == binom(r + 3, 3)


def test_scroll_degree_cubics_rejects_bad_classes():
    with pytest.raises(ValueError, match="not divisible by 6"):
        scroll_degree_cubics(12)


def test_scroll_degree_cubics_residues():
    good = {1, 2, 9, 10, 11, 18, 19, 27, 29}
    for r in range(9, 101):
        if r % 36 in good:
            scroll_degree_cubics(r)
        else:
            with pytest.raises(ValueError):
                scroll_degree_cubics(r)


def test_genus_bracket_radius_and_openness():
    gb = genus_bracket(7, 10**6, 11)
    lo, hi = gb.interval
    assert hi - lo == Fraction(1331, 5)
    assert gb.lower_open


def test_genus_bracket_lower_end_is_closed_form_without_eps_term():
    for ambient, d in ((7, 500), (5, 123), (9, 999)):
        s = ambient - 1
        eps = (d - 1) % s
        gb = genus_bracket(ambient, d, s)
        eps_term = Fraction(1 + eps, 2 * s) * (s + 1 - eps)
        assert gb.interval[0] == castelnuovo_closed_form(ambient, d) - eps_term


def test_genus_bracket_r6_annotation():
    gb = genus_bracket(6, 999, 9)
    assert gb.interval[1] - gb.interval[0] == Fraction(729, 4)
    assert "182" in gb.conditions


def test_cone_curve_genus_anchor():
    c = cone_curve_genus(6, 0, 3)
    assert c.a == -4
    assert c.cone_multiplicity == 16
    assert c.normalization_genus == 48
    assert c.delta_p == 34
    assert c.total_genus == 82 == closed_form_pi1(31)


def test_cone_curve_genus_eps4_quadruple_point_term():
    c = cone_curve_genus(10, 4, 3)
    # binom(4, 4) contributes exactly 1 through the vertex delta invariant
    assert c.delta_p == 5 * binom(3, 2) + 3 * 5 + 1 + 1 - (1 - c.cone_multiplicity)
    assert c.total_genus == closed_form_pi1(55)


def test_cone_curve_genus_identity_sample():
    for m in range(4, 20):
        for eps in range(5):
            for mu in range(3, m):
                assert cone_curve_genus(m, eps, mu).total_genus == closed_form_pi1(5 * m + eps + 1)


def test_cone_curve_genus_rejects_bad_parameters():
    with pytest.raises(ValueError):
        cone_curve_genus(4, 0, 5)
    with pytest.raises(ValueError):
        cone_curve_genus(6, 5, 3)
