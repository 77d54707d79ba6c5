import random

import pytest

from app.core.exceptions import InvalidReflectionBoundError
from app.models.polynomial import PolynomialOut
from app.services.polynomial import (
    IntPoly,
    direct_product,
    evaluate_at_one,
    even_geometric,
    format_poly,
    is_palindromic,
    mul,
    mul_odd_geometric,
    odd_geometric,
    reverse,
    shift,
)


def test_trailing_zeros_are_dropped():
    assert IntPoly([1, 2, 0, 0]).coeffs == (1, 2)
    assert IntPoly([0, 0]).is_zero()
    assert IntPoly().degree == -1
    assert IntPoly() == 0
    assert IntPoly([5]) == 5


def test_immutable():
    p = IntPoly([1, 1])
    with pytest.raises(AttributeError):
        p.foo = 1


def test_arithmetic():
    one_plus_t = IntPoly([1, 1])
    assert one_plus_t * one_plus_t == IntPoly([1, 2, 1])
    assert one_plus_t + IntPoly([0, 0, 3]) == IntPoly([1, 1, 3])
    assert one_plus_t - one_plus_t == IntPoly()
    assert 3 * one_plus_t == IntPoly([3, 3])
    assert mul(IntPoly(), one_plus_t).is_zero()


def test_shift():
    assert shift(IntPoly([1, 1]), 2) == IntPoly([0, 0, 1, 1])
    assert shift(IntPoly(), 5).is_zero()
    with pytest.raises(ValueError):
        shift(IntPoly([1]), -1)


def test_geometric_series():
    assert odd_geometric(3) == IntPoly([0, 1, 0, 1, 0, 1])
    assert even_geometric(1) == IntPoly([1])
    assert even_geometric(3) == IntPoly([1, 0, 1, 0, 1])
    with pytest.raises(ValueError):
        odd_geometric(0)


@pytest.mark.parametrize("k", range(1, 51))
def test_odd_geometric_times_t2_minus_1(k):
    t2_minus_1 = IntPoly([-1, 0, 1])
    assert odd_geometric(k) * t2_minus_1 == IntPoly.monomial(2 * k + 1) - IntPoly.monomial(1)


def _random_poly(rng):
    return IntPoly(rng.randint(-10**12, 10**12) for _ in range(rng.randint(0, 10)))


def test_ring_laws():
    rng = random.Random(20240607)
    for _ in range(300):
        a, b, c = _random_poly(rng), _random_poly(rng), _random_poly(rng)
        assert a + b == b + a
        assert (a + b) + c == a + (b + c)
        assert mul(a, b) == mul(b, a)
        assert mul(mul(a, b), c) == mul(a, mul(b, c))
        assert mul(a, b + c) == mul(a, b) + mul(a, c)
        assert a + IntPoly.zero() == a
        assert mul(a, IntPoly.one()) == a
        assert (a * b)(3) == a(3) * b(3)


def test_mul_odd_geometric_matches_plain_product():
    rng = random.Random(7)
    for _ in range(200):
        a = IntPoly(rng.randint(-5, 9) for _ in range(rng.randint(0, 12)))
        k = rng.randint(1, 8)
        assert mul_odd_geometric(a, k) == mul(a, odd_geometric(k))


def test_evaluation():
    p = IntPoly([1, 2, 0, 1])
    assert p(1) == evaluate_at_one(p) == 4
    assert p(2) == 13


def test_reverse():
    assert reverse(IntPoly([1, 2]), 3) == IntPoly([0, 0, 2, 1])
    assert reverse(IntPoly([1, 0, 1]), 2) == IntPoly([1, 0, 1])
    with pytest.raises(InvalidReflectionBoundError):
        reverse(IntPoly([1, 2, 3]), 1)


def test_direct_product():
    assert direct_product([]) == IntPoly.one()
    one_plus_t = IntPoly([1, 1])
    assert direct_product([one_plus_t, one_plus_t]) == IntPoly([1, 2, 1])


def test_palindromic_from_lowest_term():
    assert is_palindromic(IntPoly([0, 2, 2]))
    assert is_palindromic(IntPoly([0, 0, 1, 3, 1]))
    assert not is_palindromic(IntPoly([1, 2]))
    assert is_palindromic(IntPoly())


def test_format():
    assert format_poly(IntPoly([1, 2, 0, 1])) == "1 + 2t + t^3"
    assert format_poly(IntPoly()) == "0"
    assert format_poly(IntPoly([0, -1, 3])) == "-t + 3t^2"
    assert str(IntPoly([0, 0, 1])) == "t^2"


def test_big_coefficients_serialize_as_strings():
    big = 10 ** 30 + 7
    out = PolynomialOut.from_poly(IntPoly([1, big]))
    assert out.coeffs == ["1", str(big)]
    assert out.to_poly().coefficient(1) == big
