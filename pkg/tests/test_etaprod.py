"""Tests for eta products, restricted q-products, and theta sums.

Expected coefficient prefixes were computed by an independent integer
convolution script and are frozen here verbatim.
"""

from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

from modwron.etaprod import (
    NAMES,
    ProductSpec,
    ThetaSpec,
    eta,
    named_series,
    product_series,
    theta_sum,
)
from modwron.qseries import QSeries, first_mismatch

F = Fraction

ETA_UNIT = [1, -1, -1, 0, 0, 1, 0, 1, 0, 0, 0, 0, -1, 0, 0, -1]
ETA4 = [1, -4, 2, 8, -5, -4, -10, 8, 9, 0, 14, -16]
ETA24 = [1, -24, 252, -1472, 4830, -6048, -16744, 84480]
CH1 = [1, 0, 1, 1, 1, 1, 2, 2, 3, 3, 4, 4, 6, 6, 8, 9]
CH2 = [1, 1, 1, 1, 2, 2, 3, 3, 4, 5, 6, 7, 9, 10, 12, 14]
RR = [1, -1, 1, 0, -1, 1, -1, 1, 0, -1, 2, -3, 2, 0, -2, 4]
F1 = [1, 3, 4, 7, 13, 19, 29, 43, 62, 90, 126, 174, 239, 325, 435, 580]
F2 = [2, 2, 6, 8, 14, 20, 34, 46, 70, 96, 138, 186, 262, 346, 472, 620]
W2 = [1, 8, 36, 128, 394, 1088, 2776, 6656, 15155, 33056, 69508, 141568]
W1_HALF = [1, 8, 28, 64, 134, 288, 568, 1024, 1809, 3152, 5316, 8704,
           13990, 22208, 34696, 53248]
ETA5_OVER_ETA = [1, 1, 2, 3, 5, 6, 10, 13, 19, 25, 34, 44, 60, 76, 100, 127]


def slots(s, count):
    """First `count` coefficients on the series' own slot lattice."""
    return [s.coeff_at(s.offset + F(k, s.step_den)) for k in range(count)]


def test_eta_pentagonal_prefix():
    e = eta(1, 20)
    assert e.offset == F(1, 24)
    assert slots(e, 16) == [F(c) for c in ETA_UNIT]


def test_eta_fourth_power():
    e4 = eta(1, 12) ** 4
    assert e4.offset == F(1, 6)
    assert slots(e4, 12) == [F(c) for c in ETA4]


def test_eta_24th_power_is_tau():
    e24 = eta(1, 9) ** 24
    assert e24.offset == 1
    assert slots(e24, 8) == [F(c) for c in ETA24]


def test_eta_rescale_offset_and_step():
    e5 = eta(5, 20)
    assert e5.offset == F(5, 24)
    assert e5.coeff_at(F(5, 24)) == 1
    assert e5.coeff_at(F(5, 24) + 5) == -1
    assert e5.coeff_at(F(5, 24) + 1) == 0
    ehalf = eta(F(1, 2), 3)
    assert ehalf.offset == F(1, 48)
    assert ehalf.coeff_at(F(1, 48) + F(1, 2)) == -1


def test_eta_quotient_5_over_1():
    quot = eta(5, 18) / eta(1, 18)
    assert quot.offset == F(1, 6)
    assert slots(quot, 16) == [F(c) for c in ETA5_OVER_ETA]


def test_eta_rejects_nonpositive_scale():
    with pytest.raises(ValueError):
        eta(0, 10)


def test_ch1_product_prefix():
    s = named_series("ch1", 16)
    assert s.offset == F(11, 60)
    assert s.prec == 16
    assert slots(s, 16) == [F(c) for c in CH1]


def test_ch2_product_prefix():
    s = named_series("ch2", 16)
    assert s.offset == F(-1, 60)
    assert slots(s, 16) == [F(c) for c in CH2]


@pytest.mark.parametrize("name", ["ch1", "ch2"])
def test_ch_theta_route_agrees_with_product(name):
    a = named_series(name, 25, route="product")
    b = named_series(name, 25, route="theta")
    assert first_mismatch(a, b) is None
    assert a.prec == b.prec == 25


def test_rr_cf_prefix():
    s = named_series("rr_cf", 16)
    assert s.offset == F(1, 5)
    assert slots(s, 16) == [F(c) for c in RR]


def test_a1_f1_prefix():
    s = named_series("a1_f1", 16)
    assert s.offset == F(-1, 24)
    assert slots(s, 16) == [F(c) for c in F1]


def test_a1_f2_prefix():
    s = named_series("a1_f2", 16)
    assert s.offset == F(5, 24)
    assert slots(s, 16) == [F(c) for c in F2]


def test_weber8_1_prefix():
    s = named_series("weber8_1", 8)
    assert s.offset == F(-1, 6)
    assert s.step_den == 2
    assert slots(s, 16) == [F(c) for c in W1_HALF]


def test_weber8_2_prefix():
    s = named_series("weber8_2", 12)
    assert s.offset == F(1, 3)
    assert s.step_den == 1
    assert slots(s, 12) == [F(c) for c in W2]


def test_ch_product_identity():
    prod = named_series("ch1", 15) * named_series("ch2", 15)
    quot = eta(5, 15) / eta(1, 15)
    assert first_mismatch(prod, quot) is None


def test_a1_pair_product_identity():
    prod = named_series("a1_f1", 12) * named_series("a1_f2", 12)
    quot = 2 * (eta(2, 12) / eta(1, 12)) ** 4
    assert first_mismatch(prod, quot) is None


@pytest.mark.parametrize("name,lead", [
    ("ch1", 1), ("ch2", 1), ("a1_f1", 1), ("a1_f2", 2),
    ("weber8_1", 1), ("weber8_2", 1),
])
def test_named_series_nonnegative_integer_coeffs(name, lead):
    s = named_series(name, 30)
    assert s.leading_coefficient() == lead
    for _, c in s.coeffs():
        assert c.denominator == 1 and c >= 0


def test_named_series_prec_is_exactly_requested():
    for name in NAMES:
        s = named_series(name, F(21, 2))
        assert s.prec == F(21, 2)


def test_named_series_unknown_name():
    with pytest.raises(ValueError, match="unknown series"):
        named_series("nope", 10)


def test_route_rejected_for_single_route_series():
    with pytest.raises(ValueError, match="single construction route"):
        named_series("rr_cf", 10, route="theta")


def test_bad_route_value():
    with pytest.raises(ValueError, match="route"):
        named_series("ch1", 10, route="jacobi")


def test_product_spec_validates_residues():
    with pytest.raises(ValueError):
        ProductSpec([(5, 5, 1)])
    with pytest.raises(ValueError):
        ProductSpec([(0, 0, 1)])


def test_product_series_euler_inverse():
    spec = ProductSpec([(0, 1, -1)])
    p = product_series(spec, 10)
    assert slots(p, 10) == [F(c) for c in [1, 1, 2, 3, 5, 7, 11, 15, 22, 30]]


def test_product_series_zero_window():
    spec = ProductSpec([(0, 1, 1)], prefactor=5)
    assert product_series(spec, 3).is_zero()


def test_theta_spec_validation():
    with pytest.raises(ValueError, match="positive"):
        ThetaSpec(0, 1)
    with pytest.raises(ValueError, match="sign"):
        ThetaSpec(1, 0, sign="weird")


def test_theta_sum_square_exponents():
    t = theta_sum(ThetaSpec(2, 0), 26)
    assert t.offset == 0
    expect = {0: 1, 1: 2, 4: 2, 9: 2, 16: 2, 25: 2}
    for n in range(26):
        assert t.coeff_at(n) == expect.get(n, 0)


def test_theta_sum_collision_adds_coefficients():
    t = theta_sum(ThetaSpec(2, 2), 13)
    expect = {0: 2, 2: 2, 6: 2, 12: 2}
    for n in range(13):
        assert t.coeff_at(n) == expect.get(n, 0)


def test_theta_sum_alternating_pentagonal():
    t = theta_sum(ThetaSpec(3, -1, "alternating"), 16)
    assert first_mismatch(t, eta(1, 16) / QSeries.monomial(1, F(1, 24))) is None


@settings(max_examples=40, deadline=None)
@given(
    A=st.integers(min_value=1, max_value=6),
    B=st.integers(min_value=-6, max_value=6),
    N=st.integers(min_value=5, max_value=40),
)
def test_theta_sum_matches_brute_force(A, B, N):
    t = theta_sum(ThetaSpec(A, B), N)
    brute = {}
    for n in range(-200, 201):
        e = F(A * n * n + B * n, 2)
        if e < N:
            brute[e] = brute.get(e, 0) + 1
    for e, c in brute.items():
        assert t.coeff_at(e) == c
