import itertools

import pytest

from app.core.exceptions import (
    BudgetExceededError,
    ElementOutsideGroupError,
    InvalidGroupError,
    NotAnInvolutionError,
)
from app.models.coxeter import Family
from app.services.classical_oracle import (
    SignedPerm,
    all_signed_perms,
    cayley_lengths_B,
    check_ngh,
    check_reduction,
    class_count,
    cycle_type,
    cycle_types,
    delta_count,
    enumerate_involutions,
    format_signed_cycles,
    involutions_of_type,
    lambda_size,
    length,
    oracle_class_poly,
    oracle_involution_poly,
    oracle_lambda_poly,
    parse_signed_cycles,
    rotation,
    sigma_size,
)
from app.services.polynomial import IntPoly


def test_cycle_notation():
    x = parse_signed_cycles("(-1)(-2)(+3 +4)", 4)
    assert x.images == (-1, -2, 4, 3)
    assert format_signed_cycles(x) == "(-1)(-2)(+3 +4)"
    assert parse_signed_cycles("(-1 -3)", 3).images == (-3, 2, -1)
    assert format_signed_cycles(SignedPerm.identity(3)) == "()"


def test_bad_cycle_notation():
    with pytest.raises(ValueError):
        parse_signed_cycles("(+1 +5)", 3)
    with pytest.raises(ValueError):
        SignedPerm([1, 1, 2])


def test_composition_applies_right_factor_first():
    g = SignedPerm([2, 1, 3])
    h = SignedPerm([-1, 2, 3])
    assert (g * h).images == (-2, 1, 3)
    assert g * g.inverse() == SignedPerm.identity(3)
    w = SignedPerm([3, -1, 2])
    assert w * w.inverse() == SignedPerm.identity(3)
    assert w(-1) == -3


def test_lengths():
    assert length(SignedPerm.identity(4), Family.B) == 0
    for n in range(1, 6):
        minus_one = SignedPerm([-k for k in range(1, n + 1)])
        assert lambda_size(minus_one) == n * (n - 1)
        assert sigma_size(minus_one) == n
        assert length(minus_one, Family.B) == n * n
    assert length(SignedPerm([2, 1, 3]), Family.A) == 1


def test_length_outside_group():
    with pytest.raises(ElementOutsideGroupError):
        length(SignedPerm([-1, 2]), Family.A)
    with pytest.raises(ElementOutsideGroupError):
        length(SignedPerm([-1, 2, 3]), Family.D)


@pytest.mark.parametrize("n", [1, 2, 3, 4])
def test_length_formula_matches_word_length(n):
    for w, d in cayley_lengths_B(n).items():
        assert length(w, Family.B) == d


def test_cycle_type():
    assert cycle_type(parse_signed_cycles("(-1)(-2)(+3 +4)", 4)) == (1, 2)
    assert cycle_type(parse_signed_cycles("(-1 -2)", 3)) == (1, 0)
    with pytest.raises(NotAnInvolutionError):
        cycle_type(SignedPerm([2, 3, 1]))


def test_class_counts_match_enumeration():
    for fam in (Family.A, Family.B, Family.D):
        for n in range(1, 6):
            for m, e in cycle_types(fam, n):
                found = sum(1 for _ in involutions_of_type(fam, n, m, e))
                assert found == class_count(fam, n, m, e)
    assert class_count(Family.B, 2, 1, 0) == 2
    assert class_count(Family.D, 3, 0, 1) == 0


def test_small_enumerations():
    assert len(list(enumerate_involutions(Family.A, 3))) == 4
    assert len(list(enumerate_involutions(Family.B, 2))) == 6
    # W(D_2) has four elements and all are involutions
    assert len(list(enumerate_involutions(Family.D, 2))) == 4
    assert all(x.is_involution() for x in enumerate_involutions(Family.B, 4))


def test_oracle_polynomials():
    assert oracle_class_poly(Family.A, 5, 2, 0).coefficient(6) == 4
    assert oracle_involution_poly(Family.A, 3) == IntPoly([1, 2, 0, 1])
    assert oracle_involution_poly(Family.B, 2) == IntPoly([1, 2, 0, 2, 1])
    assert oracle_involution_poly(Family.D, 2) == IntPoly([1, 2, 1])
    assert oracle_lambda_poly(1, 0, 1) == IntPoly([1])
    assert oracle_lambda_poly(2, 0, 1) == IntPoly([1, 0, 1])


def test_oracle_guard():
    with pytest.raises(BudgetExceededError) as info:
        list(enumerate_involutions(Family.B, 8))
    assert info.value.allow_override
    assert sum(1 for _ in enumerate_involutions(Family.B, 8, allow_large=True)) == sum(
        class_count(Family.B, 8, m, e) for m, e in cycle_types(Family.B, 8))


def test_rotation():
    assert rotation(4, 2).images == (1, 4, 2, 3)
    assert rotation(4, 4) == SignedPerm.identity(4)


def test_delta_count():
    # y = (-1 -3) in rank 3: only k = 3 with |y(3)| = 1 < 2 < 3
    y = parse_signed_cycles("(-1 -3)", 3)
    assert delta_count(y, 2) == 1


def test_reduction_example():
    x = parse_signed_cycles("(-1)(-2)(+3 +4)", 4)
    report = check_reduction(x)
    assert report.tau == "(+3 +4)"
    assert report.r == 3
    assert report.all_hold


@pytest.mark.parametrize("n", [2, 3, 4, 5])
def test_reduction_identities_hold_for_every_involution(n):
    for x in enumerate_involutions(Family.B, n):
        assert check_reduction(x).all_hold, str(x)


def test_reduction_requires_involution():
    with pytest.raises(NotAnInvolutionError):
        check_reduction(SignedPerm([2, 3, 1]))


def test_inversion_set_identity_all_pairs_rank_2():
    elements = list(all_signed_perms(2))
    assert len(elements) == 8
    for g, h in itertools.product(elements, repeat=2):
        assert check_ngh(g, h)


def test_inversion_set_identity_rank_mismatch():
    with pytest.raises(InvalidGroupError):
        check_ngh(SignedPerm.identity(2), SignedPerm.identity(3))
