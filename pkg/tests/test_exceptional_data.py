import json

import pytest

from app.core.exceptions import InvalidGroupError, MissingDataError, TranscriptionError
from app.models.coxeter import EXCEPTIONAL_NAMES
from app.services.analysis import is_unimodal
from app.services.exceptional_data import (
    aggregate_profiles,
    check_table,
    class_to_polynomial,
    get_class,
    get_table,
    load_tables,
    parity_row,
    records_to_csv,
    records_to_json,
    reverse_partner,
    table_checksum,
    table_path,
)
from app.services.polynomial import IntPoly, is_palindromic

TABLE_SHA256 = "9bfb8cc3ff08d31afe5f43bfb5e150d3f83ca995cbf18eba0f27768ac9753a01"


def test_data_file_is_pinned():
    assert table_checksum() == TABLE_SHA256


def test_all_groups_load_and_are_consistent():
    tables = load_tables()
    assert sorted(tables) == sorted(EXCEPTIONAL_NAMES)
    for table in tables.values():
        assert check_table(table) == []


def test_profiles_sum_to_sizes():
    for table in load_tables().values():
        for rec in table.classes:
            assert sum(rec.profile) == rec.size


def test_class_polynomial_restores_parity_zeros():
    rec = get_class("H3", "A1", 15)
    assert class_to_polynomial(rec) == IntPoly([0, 3, 0, 3, 0, 3, 0, 2, 0, 2, 0, 1, 0, 1])
    assert parity_row(class_to_polynomial(rec), 1) == [3, 3, 3, 2, 2, 1, 1]


@pytest.mark.parametrize("group, label, size, partner", [
    ("E7", "A1", 63, "D6"),
    ("E7", "A1^2", 945, "D4xA1"),
    ("E7", "A1^3", 315, "D4"),
    ("E7", "A1^3", 3780, "A1^4"),
    ("E8", "A1", 120, "E7"),
    ("E8", "A1^2", 3780, "D6"),
    ("E8", "A1^3", 37800, "D4xA1"),
    ("E8", "A1^4", 113400, "A1^4"),
    ("E8", "D4", 3150, "D4"),
    ("F4", "A1", 12, "B3"),
    ("F4", "B2", 18, "B2"),
    ("H3", "A1", 15, "A1^2"),
    ("H4", "A1", 60, "H3"),
    ("H4", "A1^2", 450, "A1^2"),
])
def test_longest_element_pairs_classes(group, label, size, partner):
    table = get_table(group)
    rec = get_class(group, label, size)
    found = reverse_partner(rec, table.classes, table.longest_length)
    assert found is not None
    assert found.label == partner


def test_self_paired_classes_are_palindromic():
    for label, size in (("D4", 3150), ("A1^4", 113400)):
        assert is_palindromic(class_to_polynomial(get_class("E8", label, size)))


def test_h4_central_class():
    rec = get_class("H4", "H4", 1)
    assert rec.min_length == 60
    assert get_table("H4").longest_length == 60


def test_e8_even_row_is_the_corrected_one():
    table = get_table("E8")
    odd, even = aggregate_profiles("E8")
    assert parity_row(even, 0) == table.even_profile
    assert parity_row(odd, 1) == table.odd_profile
    assert table.quoted_even_profile != table.even_profile
    assert not is_unimodal(table.quoted_even_profile)
    assert is_unimodal(table.even_profile)


def test_involution_counts_from_tables():
    assert 1 + sum(r.size for r in get_table("E6").classes) == 892
    assert 1 + sum(r.size for r in get_table("H3").classes) == 32


def test_lookup_errors():
    with pytest.raises(MissingDataError):
        get_class("E6", "E8", 1)
    with pytest.raises(InvalidGroupError):
        get_table("B3")


def test_exports():
    records = get_table("H3").classes
    csv_text = records_to_csv(records)
    assert csv_text.splitlines()[0] == "class,size,min_length,profile"
    assert csv_text.splitlines()[1] == "A1,15,1,[3,3,3,2,2,1,1]"
    payload = json.loads(records_to_json("H3", records))
    assert payload["group"] == "H3"
    assert [c["label"] for c in payload["classes"]] == ["A1", "A1^2", "H3"]
    assert records_to_json("H3", records) == records_to_json("H3", records)


def test_corrupted_table_is_rejected(tmp_path):
    with open(table_path(), encoding="utf-8") as f:
        raw = json.load(f)
    h3 = next(g for g in raw["groups"] if g["group"] == "H3")
    h3["classes"][0]["profile"][-1] = 2
    broken = tmp_path / "tables.json"
    broken.write_text(json.dumps(raw), encoding="utf-8")
    with pytest.raises(TranscriptionError):
        load_tables(str(broken))
