"""Regularity invariants on hand-verified fixtures.

Expected numbers come from closed forms that are independent of the
resolution engine: the piecewise profile max{0, 1-x, 3-2x, 4-3x} for the
cubic regular algebra, the (1,2) type of the weighted line, Koszul duality
of the plane, and the periodic resolution over the truncated line.
"""

from fractions import Fraction

import pytest

from gradreg.complexes import minimal_free_resolution
from gradreg.freealg import generator_set, parse_poly
from gradreg.groebner import AlgebraPresentation, compute_groebner
from gradreg.linalg import QQ
from gradreg.modules import cyclic_quotient, free_module, trivial_module
from gradreg.invariants import (
    AS_REGULAR,
    UNCERTIFIED,
    UnsupportedComputation,
    asreg,
    check_as_regular,
    cmreg_affine,
    cmreg_algebra,
    cmreg_module,
    concavity,
    concavity_upper_bound,
    depth,
    extreg,
    koszul_check,
    kunneth_torreg,
    local_cohomology_degrees,
    pdim,
    prop58_bound,
    rate,
    rate_bound,
    slope,
    torreg,
    torreg_affine,
    torreg_support,
    weighted_extremum,
)
from gradreg.values import EXACT, NEG_INF, OBSERVED, POS_INF, ExtendedValue, Weight


def algebra(gens_spec, rel_texts, label, field=QQ):
    gens = generator_set(gens_spec)
    rels = tuple(parse_poly(t, gens, field) for t in rel_texts)
    return AlgebraPresentation(gens, rels, label, field)


KXY = algebra([("x", 1), ("y", 1)], ["x*y - y*x"], "kxy")
KX2 = algebra([("x", 2)], [], "kx2")
KX3 = algebra([("x", 1)], ["x*x*x"], "kx3")
DOWNUP = algebra([("x", 1), ("y", 1)], ["x*x*y - y*x*x", "x*y*y - y*y*x"], "downup")

W = Weight.of


@pytest.fixture(scope="module")
def gxy():
    return compute_groebner(KXY, 12)


@pytest.fixture(scope="module")
def gdu():
    return compute_groebner(DOWNUP, 12)


@pytest.fixture(scope="module")
def k_table_xy(gxy):
    return minimal_free_resolution(trivial_module(KXY), gxy, 8, 12)[1]


@pytest.fixture(scope="module")
def k_table_du(gdu):
    return minimal_free_resolution(trivial_module(DOWNUP), gdu, 8, 12)[1]


@pytest.fixture(scope="module")
def as_xy(gxy):
    return check_as_regular(gxy, 8, 12)


@pytest.fixture(scope="module")
def as_du(gdu):
    return check_as_regular(gdu, 8, 12)


def test_weighted_extremum_basics():
    assert weighted_extremum([(0, 0)], W(1, 7)).value == 0
    assert weighted_extremum([], W(1, 1)).value == NEG_INF
    assert weighted_extremum([], W(1, 1), "inf").value == POS_INF
    # largest homological index at weight (0,1)
    assert weighted_extremum([(5, 0), (2, 3)], W(0, 1)).value == 3


def test_weighted_extremum_downup_support(k_table_du):
    sup = weighted_extremum(torreg_support(k_table_du), W(1, -1))
    assert sup.value == 7  # realized at internal 4, homological 3


def test_torreg_downup_piecewise(k_table_du):
    for xi1, expected in [(0, 4), (1, 1), (Fraction(5, 4), Fraction(1, 2)),
                          (Fraction(3, 2), 0), (2, 0)]:
        ev = torreg(k_table_du, W(1, xi1))
        assert ev.value == max(0, 1 - xi1, 3 - 2 * xi1, 4 - 3 * xi1)
        assert ev.value == expected
        assert ev.status == EXACT


def test_torreg_pdim_weight(k_table_xy, k_table_du):
    assert torreg(k_table_xy, W(0, -1)).value == 2
    assert torreg(k_table_du, W(0, -1)).value == 3


def test_extreg_equals_torreg_and_free_module_zero(gxy, k_table_du):
    _, ft = minimal_free_resolution(free_module(KXY, (0,)), gxy, 4, 10)
    for w in (W(1, 1), W(1, -2), W(0, 1)):
        assert extreg(ft, w).value == 0
        assert extreg(k_table_du, w).value == torreg(k_table_du, w).value


def test_torreg_shifted_trivial_module(gxy):
    from gradreg.modules import shift_module
    m = shift_module(trivial_module(KXY), -2)  # k(-2), generator in degree 2
    _, t = minimal_free_resolution(m, gxy, 6, 12)
    assert torreg(t, W(1, 0)).value == 2 + 2  # t_i = i + 2


def test_infinite_gldim_certification(gdu):
    g3 = compute_groebner(KX3, 10)
    _, table = minimal_free_resolution(trivial_module(KX3), g3, 5, 10)
    ev = torreg(table, W(1, Fraction(1, 2)), infinite_gldim=True)
    assert ev.value == POS_INF and ev.status == EXACT
    # without the assertion only an observed finite sup is reported
    ev2 = torreg(table, W(1, Fraction(1, 2)))
    assert ev2.status == OBSERVED and ev2.is_finite


def test_pdim_statuses(k_table_xy):
    assert pdim(k_table_xy) == ExtendedValue(Fraction(2), EXACT, (8, 12))
    g3 = compute_groebner(KX3, 10)
    _, table = minimal_free_resolution(trivial_module(KX3), g3, 5, 10)
    ev = pdim(table)
    assert ev.value == 5 and ev.status == OBSERVED


def test_check_as_regular_plane(as_xy):
    assert as_xy.kind == AS_REGULAR
    assert (as_xy.d, as_xy.l) == (2, 2)


def test_check_as_regular_downup(as_du):
    assert as_du.kind == AS_REGULAR
    assert (as_du.d, as_du.l) == (3, 4)


def test_check_as_regular_weighted_line():
    g = compute_groebner(KX2, 10)
    t = check_as_regular(g, 6, 10)
    assert t.kind == AS_REGULAR
    assert (t.d, t.l) == (1, 2)


def test_check_as_regular_fails_truncated_line():
    g = compute_groebner(KX3, 10)
    t = check_as_regular(g, 5, 10)
    assert t.kind == UNCERTIFIED
    assert "terminate" in t.reason


def test_cmreg_algebra_values(as_xy, as_du):
    assert cmreg_algebra(as_xy, W(1, 1)).value == 0
    assert cmreg_algebra(as_du, W(1, 1)).value == -1
    g2 = compute_groebner(KX2, 10)
    t2 = check_as_regular(g2, 6, 10)
    for xi1 in (1, 2, 3):
        assert cmreg_algebra(t2, W(1, xi1)).value == xi1 - 2


def test_cmreg_algebra_requires_certificate():
    g = compute_groebner(KX3, 10)
    t = check_as_regular(g, 5, 10)
    with pytest.raises(UnsupportedComputation):
        cmreg_algebra(t, W(1, 1))


def test_local_cohomology_of_free_module(gxy, as_xy):
    lc = local_cohomology_degrees(free_module(KXY, (0,)), as_xy, gxy, 6, 12)
    assert lc.values[2].value == -2 and lc.values[2].status == EXACT
    assert lc.values[0].value == NEG_INF
    assert lc.values[1].value == NEG_INF
    assert depth(lc) == ExtendedValue(Fraction(2), EXACT, (6, 12))


def test_local_cohomology_of_trivial_module(gxy, as_xy):
    lc = local_cohomology_degrees(trivial_module(KXY), as_xy, gxy, 6, 12)
    assert lc.values[0].value == 0 and lc.values[0].status == EXACT
    assert lc.nonvanishing() == [0]
    assert depth(lc).value == 0
    for w in (W(1, 1), W(1, -3), W(2, 5)):
        assert cmreg_module(lc, w).value == 0


def test_local_cohomology_of_coordinate_line(gxy, as_xy):
    m = cyclic_quotient(KXY, [parse_poly("x", KXY.gens, QQ)], "A/x")
    lc = local_cohomology_degrees(m, as_xy, gxy, 6, 12)
    assert lc.values[1].value == -1 and lc.values[1].status == EXACT
    assert lc.values[0].value == NEG_INF
    assert lc.values[2].value == NEG_INF
    assert depth(lc).value == 1
    # CM regularity both ways: xi1*1 + (-1) and the Betti route -l+xi*s+t_{d-s}
    _, bt = minimal_free_resolution(m, gxy, 6, 12)
    for xi1 in (0, Fraction(1, 2), 1):
        via_duality = cmreg_module(lc, W(1, xi1))
        via_betti = -2 + xi1 * 1 + bt.max_degree_of_row(1)
        assert via_duality.value == xi1 - 1 == via_betti


def test_depth_of_module_refused_without_termination(gdu, as_du):
    g3 = compute_groebner(KX3, 10)
    t3 = check_as_regular(g3, 5, 10)
    with pytest.raises(UnsupportedComputation):
        local_cohomology_degrees(trivial_module(KX3), t3, g3, 5, 10)


def test_asreg_profiles(k_table_du, as_du):
    for xi1 in (0, Fraction(1, 2), 1):
        assert asreg(k_table_du, as_du, W(1, xi1)).value == 0
    assert asreg(k_table_du, as_du, W(1, Fraction(3, 2))).value == Fraction(1, 2)
    assert asreg(k_table_du, as_du, W(1, 2)).value == 2


def test_asreg_weighted_line():
    g = compute_groebner(KX2, 10)
    t = check_as_regular(g, 6, 10)
    _, kt = minimal_free_resolution(trivial_module(KX2), g, 6, 10)
    assert asreg(kt, t, W(1, 1)).value == 0
    assert asreg(kt, t, W(1, 2)).value == 0
    assert asreg(kt, t, W(1, 3)).value == 1


def test_koszul_checks(k_table_xy, k_table_du):
    assert koszul_check(k_table_xy).koszul_through_window
    v = koszul_check(k_table_du)
    assert not v.koszul_through_window and v.witness == (2, 3)
    g2 = compute_groebner(KX2, 10)
    _, t2 = minimal_free_resolution(trivial_module(KX2), g2, 6, 10)
    v2 = koszul_check(t2)
    assert not v2.koszul_through_window and v2.witness == (1, 2)


def test_rate_values(k_table_xy, k_table_du):
    assert rate(k_table_xy).value == 1
    assert rate(k_table_du).value == 2
    g3 = compute_groebner(KX3, 10)
    _, t3 = minimal_free_resolution(trivial_module(KX3), g3, 5, 10)
    assert rate(t3).value == 2


def test_slope_values(gxy):
    _, free_t = minimal_free_resolution(free_module(KXY, (3,)), gxy, 4, 12)
    assert slope(free_t).value == NEG_INF
    g3 = compute_groebner(KX3, 10)
    _, t3 = minimal_free_resolution(trivial_module(KX3), g3, 5, 10)
    assert slope(t3).value == Fraction(3, 2)


def test_kunneth_absorbing():
    zero = ExtendedValue(Fraction(0), EXACT)
    inf = ExtendedValue(POS_INF, EXACT)
    assert kunneth_torreg(zero, zero).value == 0
    assert kunneth_torreg(zero, inf).value == POS_INF
    with pytest.raises(ValueError):
        kunneth_torreg(ExtendedValue(NEG_INF, EXACT), inf)


def test_prop58_bound_and_rate_bound():
    from gradreg.subrings import AlgebraMap, restrict_scalars
    kx = algebra([("x", 1)], [], "kx")
    ga = compute_groebner(KX3, 10)
    gt = compute_groebner(kx, 10)
    phi = AlgebraMap(kx, KX3, (parse_poly("x", KX3.gens, QQ),))
    m = restrict_scalars(ga, phi, free_module(KX3, (0,)), 8, 8, g_source=gt)
    _, table = minimal_free_resolution(m, gt, 6, 8)
    assert prop58_bound(table) == 3
    assert rate_bound(Fraction(0), Fraction(3)) == 5


def test_prop58_bound_identity_map(gxy):
    _, free_t = minimal_free_resolution(free_module(KXY, (0,)), gxy, 4, 10)
    assert prop58_bound(free_t) == 0


def test_concavity(as_xy, as_du):
    assert concavity(as_xy, W(1, 1)).value == 0
    assert concavity(as_du, W(1, 1)).value == 1
    with pytest.raises(UnsupportedComputation):
        concavity(as_xy, W(1, 2))
    empty = concavity_upper_bound([], W(1, 1))
    assert empty.value == POS_INF
    both = concavity_upper_bound([as_xy, as_du], W(1, 1))
    assert both.value == 0 and both.status == "upper_bound"


def test_affine_forms(gxy, as_xy):
    m = cyclic_quotient(KXY, [parse_poly("x", KXY.gens, QQ)], "A/x")
    lc = local_cohomology_degrees(m, as_xy, gxy, 6, 12)
    cm_line = cmreg_affine(lc)
    assert (cm_line.intercept, cm_line.slope) == (Fraction(-1), Fraction(1))
    _, bt = minimal_free_resolution(m, gxy, 6, 12)
    tor_line = torreg_affine(bt)
    assert (tor_line.intercept, tor_line.slope) == (Fraction(1), Fraction(-1))
    assert tor_line.valid_below == 1


def test_scaling_law(k_table_du):
    for lam in (2, Fraction(1, 3)):
        for xi in (W(1, 1), W(1, -2)):
            assert torreg(k_table_du, xi.scale(lam)).value == \
                lam * torreg(k_table_du, xi).value
