from math import gcd

import pytest
from hypothesis import given, strategies as st

from raaggrowth.series import (
    NonIntegralCoefficient,
    PowerSeries,
    RationalFunction,
    euler_phi,
    neck,
    rat_eq,
    rho,
    rho_integral_form,
    series_mul,
    substitute_power,
)


def rf(num, den=(1,)):
    return RationalFunction.make(num, den)


ONE_OVER_1MZ = rf([1], [1, -1])
ZZ = rf([1, 1], [1, -1])  # (1+z)/(1-z)


def test_expand_geometric():
    assert ONE_OVER_1MZ.expand(5).coefficients == (1, 1, 1, 1, 1, 1)


def test_expand_zz():
    assert ZZ.expand(5).coefficients == (1, 2, 2, 2, 2, 2)


def test_expand_h1_argument():
    # 2z(1+3z)/((1+z)(1-3z)); counts cross-checked against the H_1 automaton
    # in the acceptance suite
    f = rf([0, 2, 6], [1, -2, -3])
    assert f.expand(4).coefficients == (0, 2, 10, 26, 82)


def test_expand_requires_nonzero_constant():
    with pytest.raises(ZeroDivisionError):
        rf([1], [0, 1]).expand(3)


def test_expand_surfaces_non_integrality():
    with pytest.raises(NonIntegralCoefficient):
        rf([1], [2, -1]).expand(3)


def test_rational_reduction_and_equality():
    a = rf([1, 2, 1], [1, 0, -1])  # (1+z)^2 / (1-z^2) = (1+z)/(1-z)
    assert a.num == (1, 1) and a.den == (1, -1)
    assert rat_eq(a, ZZ)
    assert not rat_eq(a, ONE_OVER_1MZ)


def test_rational_sign_normalization():
    a = rf([0, -2], [-1, 1])  # -2z/(z-1) = 2z/(1-z)
    assert a.den[0] == 1 and a.num == (0, 2)


def test_zz_squared_is_z2_growth():
    sq = ZZ * ZZ
    assert sq.expand(5).coefficients == (1, 4, 8, 12, 16, 20)


def test_mul_by_one_identity():
    f = rf([3, 1], [1, -2])
    assert rat_eq(f * rf([1]), f)


@given(
    st.lists(st.integers(-4, 4), min_size=1, max_size=4),
    st.lists(st.integers(-4, 4), min_size=1, max_size=4),
)
def test_add_commutes_with_expand(n1, n2):
    a = rf(n1, [1, -1])
    b = rf(n2, [1, -2])
    left = (a + b).expand(8)
    right_a = a.expand(8).coefficients
    right_b = b.expand(8).coefficients
    assert left.coefficients == tuple(x + y for x, y in zip(right_a, right_b))


def test_euler_phi_values():
    assert euler_phi(1) == 1
    assert euler_phi(6) == 2
    assert [euler_phi(k) for k in (2, 3, 4, 5, 12)] == [1, 2, 2, 4, 4]
    with pytest.raises(ValueError):
        euler_phi(0)


def test_totient_divisor_sum():
    for n in range(1, 101):
        assert sum(euler_phi(k) for k in range(1, n + 1) if n % k == 0) == n


def test_rho_fixed_point_on_reduced_words_of_z():
    f = rf([0, 2], [1, -1]).expand(12)
    assert rho(f).coefficients == f.coefficients


def test_rho_zero():
    assert rho(PowerSeries.zero(8)).coefficients == (0,) * 9


def test_rho_binary_necklaces():
    # a_m = 2^m counts binary strings; degree-3 rotation classes: 000, 111, 001, 011
    f = rf([0, 2], [1, -2]).expand(6)
    out = rho(f)
    assert out[3] == 4
    assert out[1] == 2 and out[2] == 3


def test_rho_requires_zero_constant():
    with pytest.raises(ValueError):
        rho(PowerSeries.from_list([1, 1, 1]))


def test_rho_surfaces_non_integrality():
    with pytest.raises(NonIntegralCoefficient):
        rho(PowerSeries.from_list([0, 0, 1]))  # one word of length 2, not rotation-closed


def _degree_lcm(n):
    lcm = 1
    for k in range(1, n + 1):
        lcm = lcm * k // gcd(lcm, k)
    return lcm


@given(st.lists(st.integers(-9, 9), min_size=1, max_size=10))
def test_rho_additivity(coeffs):
    f = PowerSeries.from_list([0] + coeffs)
    g = PowerSeries.from_list([0] + list(reversed(coeffs)))
    # rho is linear; feed inputs whose rho is integral by clearing denominators
    lcm = _degree_lcm(f.max_degree)
    f = f.scale(lcm)
    g = g.scale(lcm)
    left = rho(f + g)
    assert left.coefficients == (rho(f) + rho(g)).coefficients


@given(st.lists(st.integers(-6, 6), min_size=1, max_size=9))
def test_rho_matches_integral_form(coeffs):
    lcm = _degree_lcm(len(coeffs))
    f = PowerSeries.from_list([0] + [c * lcm for c in coeffs])
    assert rho(f).coefficients == rho_integral_form(f).coefficients


def test_neck_zero():
    assert neck(PowerSeries.zero(6)).coefficients == (0,) * 7


def test_neck_of_z():
    out = neck(PowerSeries.from_list([0, 1], 12))
    assert out.coefficients == (0,) + (1,) * 12


def test_neck_requires_zero_constant():
    with pytest.raises(ValueError):
        neck(PowerSeries.from_list([1, 0]))


def test_free_group_necklace_vs_rho_form():
    # sigma~(F_2) two ways: 1 + rho(cyclically reduced words series), and the
    # recursive splitting form (1+3z)/(1-z) + neck(4z^2/((1-z)(1-z)))
    degree = 12
    rivin = rf([1], [1, -3]) + ONE_OVER_1MZ + rf([2], [1, 0, -1]) + rf([-4])
    via_rho = rho(rivin.expand(degree)) + PowerSeries.one(degree)
    via_neck = rf([1, 3], [1, -1]).expand(degree) + neck(rf([0, 0, 4], [1, -2, 1]).expand(degree))
    assert via_rho.coefficients == via_neck.coefficients


def test_substitute_power():
    f = rf([0, 1], [1, -1]).expand(9)  # z/(1-z)
    g = substitute_power(f, 2)
    assert g.coefficients == (0, 0, 1, 0, 1, 0, 1, 0, 1, 0)
    assert substitute_power(f, 1).coefficients == f.coefficients
    with pytest.raises(ValueError):
        substitute_power(f, 0)


def test_substitute_power_counts_squares():
    # counts of {w^2 : w in L} for an explicit finite language
    lang = {(0,), (1,), (0, 1)}
    counts = [0] * 7
    for w in lang:
        counts[len(w)] += 1
    f = PowerSeries.from_list(counts)
    squares = {w + w for w in lang}
    expected = [0] * 5
    for w in squares:
        expected[len(w)] += 1
    assert substitute_power(f, 2).coefficients[:5] == tuple(expected)


def test_series_mul_truncates_to_min_degree():
    a = PowerSeries.from_list([1, 1, 1])
    b = PowerSeries.from_list([1, 2])
    assert series_mul(a, b).coefficients == (1, 3)
