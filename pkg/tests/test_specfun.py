import math

import pytest

from nonhomnet.errors import InvalidParameter, NonConvergence, PoleError
from nonhomnet.specfun import SeriesControl, hyp2f1, pi_csc

TIGHT = SeriesControl(rel_tolerance=1e-15)

# mpmath.hyp2f1(1, 0.375, 1.375, -2) at 50 dps; parameters are the
# alpha=4, epsilon=-0.5 family member evaluated at -beta = -2
HYP_NEG_ORACLE = 0.727785049860453744


@pytest.mark.parametrize("a,b,c", [(1, 0.5, 1.5), (2, 3, 4), (0.25, 0.75, 1.25)])
def test_unity_at_zero(a, b, c):
    assert hyp2f1(a, b, c, 0.0) == 1.0


@pytest.mark.parametrize("z", [-5.0, -1.0, -0.5, 0.1, 0.3, 0.5, 0.7, 0.9])
def test_log_closed_form(z):
    # 2F1(1,1;2;z) = -ln(1-z)/z
    expected = -math.log(1.0 - z) / z
    assert hyp2f1(1, 1, 2, z, TIGHT) == pytest.approx(expected, rel=1e-12)


def test_pfaff_route_matches_high_precision_oracle():
    assert hyp2f1(1, 0.375, 1.375, -2.0) == pytest.approx(HYP_NEG_ORACLE, rel=1e-10)


@pytest.mark.parametrize("alpha", [2.5, 3.0, 3.5, 4.0, 4.5])
@pytest.mark.parametrize("epsilon", [-1.0, -0.75, -0.5, -0.25, 0.0])
@pytest.mark.parametrize("beta", [0.1, 1.0, 10.0, 100.0])
def test_pfaff_self_consistency(alpha, epsilon, beta):
    # direct negative-argument evaluation vs the manually applied transform;
    # in this family c - b = 1 exactly
    b = (alpha - 2.0 - epsilon) / alpha
    c = (2.0 * alpha - 2.0 - epsilon) / alpha
    direct = hyp2f1(1.0, b, c, -beta)
    transformed = (1.0 + beta) ** -1.0 * hyp2f1(1.0, c - b, c, beta / (1.0 + beta))
    assert abs(direct - transformed) / abs(direct) < 1e-10


def test_monotone_in_argument():
    values = [hyp2f1(1.0, 0.5, 1.5, z) for z in [0.0, 0.1, 0.3, 0.5, 0.7, 0.9]]
    assert all(lo < hi for lo, hi in zip(values, values[1:]))


@pytest.mark.parametrize("z", [0.2, 0.6, -3.0])
def test_truncation_stability_under_term_doubling(z):
    ctl = SeriesControl(rel_tolerance=1e-12, max_terms=10**6)
    doubled = SeriesControl(rel_tolerance=1e-12, max_terms=2 * 10**6)
    v1 = hyp2f1(1.0, 0.5, 1.5, z, ctl)
    v2 = hyp2f1(1.0, 0.5, 1.5, z, doubled)
    assert abs(v1 - v2) <= ctl.rel_tolerance * abs(v1)


@pytest.mark.parametrize("c", [0.0, -1.0, -3.0])
def test_nonpositive_integer_c_rejected(c):
    with pytest.raises(InvalidParameter):
        hyp2f1(1.0, 0.5, c, 0.5)


def test_argument_at_or_above_one_rejected():
    with pytest.raises(InvalidParameter):
        hyp2f1(1.0, 0.5, 1.5, 1.0)


def test_nonconvergence_near_one():
    with pytest.raises(NonConvergence):
        hyp2f1(1.0, 1.0, 1.5, 0.9999999, SeriesControl(max_terms=100))


def test_series_control_validation():
    with pytest.raises(InvalidParameter):
        SeriesControl(rel_tolerance=0.0)
    with pytest.raises(InvalidParameter):
        SeriesControl(max_terms=0)


def test_pi_csc_values():
    assert pi_csc(4.0, 0.0) == pytest.approx(math.pi, rel=1e-15)
    assert pi_csc(3.0, -0.5) == pytest.approx(math.pi, rel=1e-15)
    # generic value: pi / sin(pi * 2.5 / 4)
    assert pi_csc(4.0, 0.5) == pytest.approx(math.pi / math.sin(math.pi * 0.625), rel=1e-14)


def test_pi_csc_pole():
    with pytest.raises(PoleError):
        pi_csc(2.5, 0.5)


def test_pi_csc_domain():
    with pytest.raises(InvalidParameter):
        pi_csc(2.0, 0.0)
    with pytest.raises(InvalidParameter):
        pi_csc(4.0, -2.0)
