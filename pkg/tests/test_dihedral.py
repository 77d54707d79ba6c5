import pytest

from app.core.exceptions import InvalidGroupError
from app.services.analysis import parity_profiles
from app.services.dihedral import (
    corrected_closed_form,
    dihedral_bfs_oracle,
    dihedral_classes,
    dihedral_involution_poly,
    literal_closed_form,
)
from app.services.polynomial import IntPoly


def test_order_six():
    classes = dihedral_classes(3).classes
    assert [c.label for c in classes] == ["reflections"]
    assert classes[0].polynomial == IntPoly([0, 2, 0, 1])
    assert dihedral_involution_poly(3) == IntPoly([1, 2, 0, 1])


def test_order_eight():
    poly = dihedral_involution_poly(4)
    assert poly == IntPoly([1, 2, 0, 2, 1])
    odd, even = parity_profiles(poly)
    assert odd.values == [2, 2]
    assert even.values == [1, 0, 1]
    assert [c.label for c in dihedral_classes(4).classes] == ["reflections s", "reflections t", "central"]


@pytest.mark.parametrize("n", list(range(3, 41)) + [99, 100, 200])
def test_closed_form_matches_search(n):
    assert dihedral_involution_poly(n) == dihedral_bfs_oracle(n)
    assert corrected_closed_form(n) == dihedral_bfs_oracle(n)


def test_quoted_form_only_for_even_n():
    assert literal_closed_form(5) is None
    assert literal_closed_form(6) == corrected_closed_form(6)
    # odd n: two reflections in each odd length below n, one of length n
    assert corrected_closed_form(5) == IntPoly([1, 2, 0, 2, 0, 1])


def test_small_n_rejected():
    with pytest.raises(InvalidGroupError):
        dihedral_classes(2)
