import pytest

from app.core.exceptions import InvalidGroupError
from app.models.coxeter import Family
from app.services import recurrence
from app.services.classical_oracle import cycle_types, oracle_class_poly, oracle_lambda_poly
from app.services.polynomial import IntPoly, is_palindromic
from app.services.recurrence import (
    alpha_count,
    bd_class_sum,
    bd_companion_poly,
    beta_count,
    class_poly_A,
    class_poly_B,
    class_poly_D,
    class_sum,
    d_poly,
    delta_count,
    fpf_product_poly,
    involution_poly,
    make_key,
    RecurrenceFamily,
)


def t(*coeffs):
    return IntPoly(coeffs)


def test_worked_example():
    assert class_poly_A(5, 2) == t(0, 0, 3, 0, 4, 0, 4, 0, 3, 0, 1)
    assert class_poly_A(5, 2).coefficient(6) == 4
    assert alpha_count(5, 2, 6) == 4


@pytest.mark.parametrize("got, want", [
    (lambda: class_poly_A(2, 1), t(0, 1)),
    (lambda: class_poly_B(1, 0, 1), t(0, 1)),
    (lambda: class_poly_B(2, 1, 0), t(0, 1, 0, 1)),
    (lambda: class_poly_B(2, 0, 1), t(0, 1, 0, 1)),
    (lambda: class_poly_B(2, 0, 2), t(0, 0, 0, 0, 1)),
    (lambda: d_poly(1, 0, 1), t(1)),
    (lambda: d_poly(2, 1, 0), t(0, 2)),
    (lambda: d_poly(2, 0, 1), t(1, 0, 1)),
    (lambda: d_poly(2, 0, 2), t(0, 0, 1)),
    (lambda: involution_poly(Family.A, 2), t(1, 2, 0, 1)),
    (lambda: involution_poly(Family.B, 2), t(1, 2, 0, 2, 1)),
    (lambda: involution_poly(Family.D, 2), t(1, 2, 1)),
    (lambda: bd_companion_poly(2), t(1, 0, 1)),
])
def test_base_cases(got, want):
    assert got() == want


def test_d_class_with_odd_e():
    assert d_poly(3, 1, 1) == t(0, 1, 0, 2, 0, 3)
    assert class_poly_D(3, 1, 1).polynomial.is_zero()
    assert delta_count(3, 1, 1, 1) == 0


def test_d_split_class():
    d = class_poly_D(4, 2, 0)
    assert d.split
    assert d.polynomial == t(0, 0, 2, 0, 2, 0, 4, 0, 2, 0, 2)
    assert d.per_class == t(0, 0, 1, 0, 1, 0, 2, 0, 1, 0, 1)
    assert not class_poly_D(4, 1, 2).split


def test_out_of_range_classes_are_zero():
    assert class_poly_A(3, 2).is_zero()
    assert class_poly_B(3, 1, 2).is_zero()


@pytest.mark.parametrize("letters", [
    *range(1, 8),
    pytest.param(8, marks=pytest.mark.slow),
])
def test_type_a_matches_oracle(letters):
    for m in range(letters // 2 + 1):
        assert class_poly_A(letters, m) == oracle_class_poly(Family.A, letters, m, 0)


@pytest.mark.parametrize("n", [
    *range(1, 6),
    pytest.param(6, marks=pytest.mark.slow),
])
def test_type_b_and_lambda_match_oracle(n):
    for m, e in cycle_types(Family.B, n):
        assert class_poly_B(n, m, e) == oracle_class_poly(Family.B, n, m, e)
        assert d_poly(n, m, e) == oracle_lambda_poly(n, m, e)


@pytest.mark.parametrize("n", [
    *range(1, 6),
    pytest.param(6, marks=pytest.mark.slow),
    pytest.param(7, marks=pytest.mark.slow),
])
def test_type_d_matches_oracle(n):
    for m, e in cycle_types(Family.D, n):
        assert class_poly_D(n, m, e).polynomial == oracle_class_poly(Family.D, n, m, e)


@pytest.mark.parametrize("family", [Family.A, Family.B, Family.D])
def test_aggregate_equals_class_sum(family):
    for n in range(1, 10):
        assert involution_poly(family, n) == class_sum(family, n)
    for n in range(1, 10):
        assert bd_companion_poly(n) == bd_class_sum(n)


def test_involution_counts():
    counts = {1: 1}
    for n in range(2, 15):
        counts[n] = involution_poly(Family.A, n - 1)(1)
    assert counts[2] == 2
    assert counts[4] == 10
    for n in range(3, 15):
        assert counts[n] == counts[n - 1] + (n - 1) * counts[n - 2]


@pytest.mark.parametrize("n", range(1, 11))
def test_type_b_degree(n):
    poly = involution_poly(Family.B, n)
    assert poly.degree == n * n
    assert poly.coefficient(n * n) == 1


def test_fpf_products():
    assert fpf_product_poly(Family.A, 4) == t(0, 0, 1, 0, 1, 0, 1)
    assert fpf_product_poly(Family.D, 4) == t(0, 0, 2, 0, 2, 0, 4, 0, 2, 0, 2)
    for n in range(2, 11, 2):
        assert fpf_product_poly(Family.A, n) == class_poly_A(n, n // 2)
        assert fpf_product_poly(Family.B, n) == class_poly_B(n, n // 2, 0)
        assert fpf_product_poly(Family.D, n) == class_poly_D(n, n // 2, 0).polynomial
        assert is_palindromic(fpf_product_poly(Family.A, n))
        assert is_palindromic(fpf_product_poly(Family.B, n))
    with pytest.raises(InvalidGroupError):
        fpf_product_poly(Family.B, 5)


def test_scalar_forms_match_coefficients():
    for n in range(1, 7):
        for m in range(n // 2 + 1):
            a = class_poly_A(n, m)
            assert [alpha_count(n, m, l) for l in range(a.degree + 1)] == list(a.coeffs)
            for e in range(n - 2 * m + 1):
                b = class_poly_B(n, m, e)
                assert [beta_count(n, m, e, l) for l in range(b.degree + 1)] == list(b.coeffs)
                d = class_poly_D(n, m, e).polynomial
                assert [delta_count(n, m, e, l) for l in range(d.degree + 1)] == list(d.coeffs)


def test_large_rank_runs():
    poly = involution_poly(Family.B, 50)
    assert poly.degree == 2500


def test_rank_must_be_positive():
    with pytest.raises(InvalidGroupError):
        involution_poly(Family.B, 0)
    with pytest.raises(InvalidGroupError):
        involution_poly("X", 3)


def test_cache(fresh_cache):
    assert recurrence.cache_size() == 0
    class_poly_B(4, 1, 1)
    assert recurrence.cache_size() > 0
    recurrence.clear_cache()
    assert recurrence.cache_size() == 0


def test_keys_validate_fields():
    with pytest.raises(ValueError):
        make_key(RecurrenceFamily.A_CLASS, 4)
