from fractions import Fraction

import pytest

from coxcat.core import ValidationError
from coxcat.series import (
    Series,
    cross_check,
    nn_na_polynomial,
    poly_str,
    series,
    series_a,
    series_b,
    series_c,
    series_f_closed,
    series_f_factored,
    sqrt_one_minus_4z,
)

F = Fraction


def test_sqrt_squares_back():
    s = sqrt_one_minus_4z(12)
    got = (s * s).scalar_coefficients()
    assert got == (F(1), F(-4)) + (F(0),) * 11


def test_c_and_b_coefficients():
    assert series_c(5).scalar_coefficients() == tuple(map(F, (1, 1, 2, 5, 14, 42)))
    assert series_b(5).scalar_coefficients() == tuple(map(F, (0, 1, 1, 2, 5, 14)))


def test_component_identities():
    order = 10
    c = series_c(order)
    b = series_b(order)
    one = Series.constant(1, order)
    assert (c * (one - b)).coeffs == one.coeffs
    a = series_a(order)
    at_one = tuple(sum(p.values(), F(0)) for p in a.coeffs)
    assert at_one == c.scalar_coefficients()


def test_f_low_order_coefficients():
    f = series("F", 2)
    assert f.coeffs[0] == {(0, 0): F(1)}
    assert f.coeffs[1] == {(1, 1): F(1)}
    assert f.coeffs[2] == {(1, 1): F(1), (2, 2): F(1)}


def test_factored_and_closed_agree():
    assert series_f_factored(12).coeffs == series_f_closed(12).coeffs


def test_f_specializes_to_catalan():
    f = series_f_closed(10)
    cats = [int(sum(p.values(), F(0))) for p in f.coeffs]
    assert cats == [1, 1, 2, 5, 14, 42, 132, 429, 1430, 4862, 16796]


def test_cross_check_small():
    rep = cross_check(6)
    assert rep.ok
    assert rep.mismatches() == ()
    assert rep.entries[2].expected == {(1, 1): F(1), (2, 2): F(1)}


def test_coefficients_symmetric():
    f = series_f_closed(9)
    for p in f.coeffs:
        assert p == {(j, i): v for (i, j), v in p.items()}


def test_nn_na_polynomial_n3():
    assert nn_na_polynomial(3) == {
        (1, 1): F(1),
        (2, 2): F(1),
        (2, 1): F(1),
        (1, 2): F(1),
        (3, 3): F(1),
    }


def test_series_errors_and_dispatch():
    with pytest.raises(ValidationError):
        series("Q", 4)
    with pytest.raises(ValidationError):
        series("C", -1)
    with pytest.raises(ValidationError):
        Series.monomial(1, 1, 0, 1, 4).inverse()
    with pytest.raises(ValidationError):
        Series.constant(1, 4).shift_down()


def test_env_var_sets_default_order(monkeypatch):
    monkeypatch.setenv("COXCAT_TRUNC_ORDER", "3")
    assert series("C").order == 3


def test_poly_str():
    assert poly_str({}) == "0"
    assert poly_str({(1, 1): F(1), (2, 2): F(1)}) == "xy + x^2y^2"
    assert poly_str({(0, 0): F(3)}) == "3"
