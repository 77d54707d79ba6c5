import random

import pytest

from app.models.analysis import Profile
from app.services.analysis import (
    full_profile,
    interleave,
    is_log_concave,
    is_unimodal,
    parity_profile,
    parity_profiles,
    published_failures,
    scan_counterexamples,
)
from app.services.polynomial import IntPoly
from app.services.recurrence import class_poly_A, fpf_product_poly, involution_poly


@pytest.mark.parametrize("values, unimodal", [
    ([], True),
    ([5], True),
    ([2, 2, 2], True),
    ([1, 3, 5, 5, 2], True),
    ([4, 3, 1], True),
    ([1, 3, 2, 4], False),
    ([1, 0, 1], False),
    ([2, 1, 2], False),
])
def test_is_unimodal(values, unimodal):
    assert is_unimodal(values) is unimodal


@pytest.mark.parametrize("values, log_concave", [
    ([], True),
    ([1, 2], True),
    ([1, 2, 1], True),
    ([1, 3, 3, 1], True),
    ([1, 1, 2], False),
    ([2, 2, 4, 2, 2], False),
])
def test_is_log_concave(values, log_concave):
    assert is_log_concave(values) is log_concave


def test_positive_log_concave_sequences_are_unimodal():
    rng = random.Random(7)
    checked = 0
    for _ in range(10_000):
        xs = [rng.randint(1, 20) for _ in range(rng.randint(3, 6))]
        if is_log_concave(xs):
            checked += 1
            assert is_unimodal(xs)
    assert checked > 100


def test_parity_profiles_trim_zeros():
    poly = IntPoly([1, 0, 2, 3])
    odd, even = parity_profiles(poly)
    assert even == Profile(start=0, step=2, values=[1, 2])
    assert odd == Profile(start=3, step=2, values=[3])


def test_parity_profile_of_single_parity_class():
    poly = class_poly_A(5, 2)
    assert parity_profile(poly, 0).values == [3, 4, 4, 3, 1]
    assert parity_profile(poly, 0).start == 2
    assert parity_profile(poly, 1).is_empty()


def test_interleave_restores_polynomial():
    poly = involution_poly("B", 4)
    odd, even = parity_profiles(poly)
    assert interleave(odd, even) == poly


def test_full_profile_keeps_parity_zeros():
    profile = full_profile(class_poly_A(5, 2))
    assert profile.start == 2
    assert profile.step == 1
    assert profile.values == [3, 0, 4, 0, 4, 0, 3, 0, 1]
    assert full_profile(IntPoly()).is_empty()


def test_b6_even_aggregate_is_not_unimodal():
    even = parity_profile(involution_poly("B", 6), 0)
    assert even.values == [1, 10, 20, 27, 35, 41, 49, 51, 55, 54, 55, 51, 49, 41, 35, 27, 20, 10, 1]
    assert even.start == 0
    assert not is_unimodal(even)


@pytest.mark.parametrize("family", ["A", "B"])
@pytest.mark.parametrize("n", [2, 4, 6, 8])
def test_fixed_point_free_products_log_concave(family, n):
    for profile in parity_profiles(fpf_product_poly(family, n)):
        assert is_log_concave(profile)
        assert is_unimodal(profile)


@pytest.mark.parametrize("n, log_concave", [(2, True), (4, False), (6, False), (8, True)])
def test_fixed_point_free_products_type_d(n, log_concave):
    profiles = [p for p in parity_profiles(fpf_product_poly("D", n)) if p.values]
    assert all(is_log_concave(p) for p in profiles) is log_concave


def test_published_failures_follow_dihedral_scope():
    keys = published_failures(dihedral_max=8)
    assert "I2(8) even aggregate" in keys
    assert "I2(10) even aggregate" not in keys
    assert keys == sorted(keys)


@pytest.fixture(scope="module")
def full_scan():
    return scan_counterexamples()


def test_scan_reproduces_published_list(full_scan):
    assert full_scan.matches
    assert full_scan.extra == []
    assert full_scan.missing == ["E8 even aggregate"]
    assert "e8-even-row" in full_scan.explained["E8 even aggregate"]


def test_scan_failures(full_scan):
    keys = {f.key for f in full_scan.failures}
    assert "B6 even aggregate" in keys
    assert "E7 class A1" not in keys
    assert keys == set(published_failures()) - {"E8 even aggregate"}
    d8 = [f for f in full_scan.failures if f.group == "D8"]
    assert {f.parity for f in d8} == {"odd"}


def test_type_a_aggregates_log_concave(full_scan):
    assert full_scan.type_a_aggregates_log_concave


def test_small_scope_scan():
    report = scan_counterexamples(max_rank=6, dihedral_max=6, include_exceptional=False)
    assert report.matches
    assert report.expected == ["B6 even aggregate", "I2(4) even aggregate", "I2(6) even aggregate"]
    assert report.scope["exceptional"] == "skipped"
