import pytest

from app.core.exceptions import BudgetExceededError, InvalidGroupError
from app.services.coxeter_engine import (
    GROUP_ORDERS,
    build_root_system,
    cartan_matrix,
    census,
    degree_product,
    enumerate_group,
    involution_classes,
    longest_element_reflection,
    poincare_polynomial,
)
from app.services.exact_scalar import QSqrt5
from app.services.exceptional_data import get_class, get_table


@pytest.mark.parametrize("name, positive", [
    ("H3", 15), ("F4", 24), ("H4", 60), ("E6", 36), ("E7", 63), ("E8", 120),
])
def test_positive_root_counts(name, positive):
    rs = build_root_system(name)
    assert rs.positive_count == positive
    assert rs.root_count == 2 * positive


def test_f4_cartan_is_not_symmetric():
    A = cartan_matrix("F4")
    assert A[1][2] == QSqrt5(-1)
    assert A[2][1] == QSqrt5(-2)
    assert A[0][0] == QSqrt5(2)


def test_h3_cartan_uses_golden_ratio():
    A = cartan_matrix("H3")
    assert not A[0][1].is_rational()
    assert A[0][1] == A[1][0]


def test_only_exceptional_types_are_built():
    with pytest.raises(InvalidGroupError):
        build_root_system("B3")


def test_enumerate_h3():
    elements = list(enumerate_group(build_root_system("H3")))
    assert len(elements) == 120
    assert elements[0].length == 0
    assert max(e.length for e in elements) == 15
    assert len({e.simple_images for e in elements}) == 120


@pytest.mark.parametrize("name", ["H3", "F4"])
def test_poincare_polynomial_matches_degrees(name):
    rs = build_root_system(name)
    poly = poincare_polynomial(rs)
    assert poly == degree_product(name)
    assert poly(1) == GROUP_ORDERS[name]


@pytest.mark.parametrize("name", ["H3", "F4"])
def test_classes_reproduce_embedded_table(name):
    assert involution_classes(build_root_system(name)) == get_table(name).classes


@pytest.mark.slow
@pytest.mark.parametrize("name", ["H4", "E6"])
def test_classes_reproduce_embedded_table_slow(name):
    rs = build_root_system(name)
    assert poincare_polynomial(rs) == degree_product(name)
    assert involution_classes(rs) == get_table(name).classes


@pytest.mark.large
def test_e7_reproduction():
    rs = build_root_system("E7")
    assert involution_classes(rs, allow_large=True) == get_table("E7").classes


@pytest.mark.parametrize("name, length, central", [
    ("H3", 15, True), ("F4", 24, True), ("H4", 60, True),
    ("E6", 36, False), ("E7", 63, True), ("E8", 120, True),
])
def test_longest_element(name, length, central):
    rs = build_root_system(name)
    assert rs.longest_length == length
    assert rs.longest_is_central is central


def test_longest_element_pairs_h3_classes():
    rs = build_root_system("H3")
    classes = involution_classes(rs)
    partner = longest_element_reflection(rs, get_class("H3", "A1", 15), classes)
    assert partner.label == "A1^2"


def test_longest_element_reflection_needs_central_w0():
    rs = build_root_system("E6")
    rec = get_class("E6", "A1", 36)
    assert longest_element_reflection(rs, rec, get_table("E6").classes) is None


def test_e8_enumeration_is_refused():
    with pytest.raises(BudgetExceededError) as exc:
        census(build_root_system("E8"), allow_large=True)
    assert exc.value.allow_override is False


def test_e7_needs_allow_large():
    with pytest.raises(BudgetExceededError) as exc:
        census(build_root_system("E7"), allow_large=False)
    assert exc.value.allow_override is True
    assert exc.value.required == GROUP_ORDERS["E7"]


def test_explicit_budget_is_enforced():
    with pytest.raises(BudgetExceededError):
        list(enumerate_group(build_root_system("F4"), budget=100))
