"""
Embedded involution class tables for E6, E7, E8, F4, H3 and H4

The JSON file is the only source of E8 class data; everything else in it is
also reproducible by the Coxeter engine.
"""
import csv
import hashlib
import io
import json
import logging
import os
from functools import lru_cache
from typing import Dict, Iterable, List, Optional, Tuple, Union

from ..core.config import settings
from ..core.exceptions import InvalidGroupError, MissingDataError, TranscriptionError
from ..models.coxeter import (
    EXCEPTIONAL_NAMES,
    ClassRecord,
    CoxeterType,
    EmbeddedTable,
    GroupEntry,
    TableFile,
    parse_group,
)
from .polynomial import IntPoly, is_palindromic

logger = logging.getLogger(__name__)

TABLE_FILE = "exceptional_tables.json"

# groups whose longest element is -1 on the root system
CENTRAL_LONGEST = frozenset({"E7", "E8", "F4", "H3", "H4"})

CSV_COLUMNS = ["class", "size", "min_length", "profile"]


def table_path() -> str:
    return os.path.join(settings.DATA_DIR, TABLE_FILE)


def table_checksum(path: Optional[str] = None) -> str:
    with open(path or table_path(), "rb") as f:
        return hashlib.sha256(f.read()).hexdigest()


def class_to_polynomial(rec: ClassRecord) -> IntPoly:
    """Put the suppressed parity zeros back"""
    if not rec.profile:
        return IntPoly()
    coeffs = [0] * (rec.min_length + 2 * (len(rec.profile) - 1) + 1)
    for i, value in enumerate(rec.profile):
        coeffs[rec.min_length + 2 * i] = value
    return IntPoly(coeffs)


def parity_row(poly: IntPoly, parity: int) -> List[int]:
    """Coefficients of t^parity, t^(parity+2), ... up to the last nonzero one"""
    row = list(poly.coeffs[parity::2])
    while row and row[-1] == 0:
        row.pop()
    return row


def _resolve(entry: GroupEntry) -> EmbeddedTable:
    by_key: Dict[Tuple[str, int], List[int]] = {}
    for c in entry.classes:
        if c.profile is not None:
            by_key[(c.label, c.size)] = c.profile
    classes: List[ClassRecord] = []
    for c in entry.classes:
        if c.profile is not None:
            profile = c.profile
        elif c.reverse_of is not None:
            source = (c.reverse_of["label"], int(c.reverse_of["size"]))
            if source not in by_key:
                raise TranscriptionError(f"{entry.group} {c.label}: reverse of unknown class {source}")
            profile = list(reversed(by_key[source]))
        else:
            raise TranscriptionError(f"{entry.group} {c.label}: neither profile nor reverse_of")
        record = ClassRecord(label=c.label, size=c.size, min_length=c.min_length, profile=profile)
        classes.extend([record] * c.multiplicity)
    return EmbeddedTable(
        group=parse_group(entry.group),
        longest_length=entry.longest_length,
        classes=classes,
        odd_profile=entry.odd_profile,
        even_profile=entry.even_profile,
        quoted_even_profile=entry.quoted_even_profile,
        note=entry.note,
    )


def class_sum_polynomial(classes: Iterable[ClassRecord]) -> IntPoly:
    """Identity plus every class polynomial"""
    total = IntPoly.one()
    for rec in classes:
        total = total + class_to_polynomial(rec)
    return total


def reverse_partner(rec: ClassRecord, classes: List[ClassRecord],
                    longest_length: int) -> Optional[ClassRecord]:
    """The class x -> w0*x maps rec onto, when w0 is central"""
    target_min = longest_length - rec.max_length
    reversed_profile = list(reversed(rec.profile))
    for other in classes:
        if (other.size == rec.size and other.min_length == target_min
                and other.profile == reversed_profile):
            return other
    return None


def check_table(table: EmbeddedTable) -> List[str]:
    """Internal consistency problems of one table (empty when consistent)"""
    problems: List[str] = []
    name = table.group.name
    for rec in table.classes:
        if sum(rec.profile) != rec.size:
            problems.append(f"{name} {rec.label}: profile sums to {sum(rec.profile)}, size {rec.size}")
        if rec.max_length > table.longest_length:
            problems.append(f"{name} {rec.label}: lengths run past {table.longest_length}")
    if name in CENTRAL_LONGEST:
        for rec in table.classes:
            if rec.min_length == table.longest_length:
                continue  # w0 itself pairs with the identity
            partner = reverse_partner(rec, table.classes, table.longest_length)
            if partner is None:
                problems.append(f"{name} {rec.label} ({rec.size}): no reversed partner class")
            elif partner == rec and not is_palindromic(class_to_polynomial(rec)):
                problems.append(f"{name} {rec.label}: self-paired but not palindromic")
    total = class_sum_polynomial(table.classes)
    if parity_row(total, 1) != table.odd_profile:
        problems.append(f"{name}: odd row differs from the class sum")
    if parity_row(total, 0) != table.even_profile:
        problems.append(f"{name}: even row differs from the class sum")
    return problems


@lru_cache(maxsize=4)
def _load(path: str) -> Dict[str, EmbeddedTable]:
    with open(path, "r", encoding="utf-8") as f:
        raw = TableFile(**json.load(f))
    tables: Dict[str, EmbeddedTable] = {}
    for entry in raw.groups:
        table = _resolve(entry)
        problems = check_table(table)
        if problems:
            for p in problems:
                logger.error(f"❌ {p}")
            raise TranscriptionError("; ".join(problems))
        tables[table.group.name] = table
    logger.info(f"📚 Loaded {len(tables)} embedded tables from {path}")
    return tables


def load_tables(path: Optional[str] = None) -> Dict[str, EmbeddedTable]:
    return _load(path or table_path())


def _group_name(group: Union[str, CoxeterType]) -> str:
    name = group.name if isinstance(group, CoxeterType) else parse_group(group).name
    if name not in EXCEPTIONAL_NAMES:
        raise InvalidGroupError(f"no embedded table for {name}")
    return name


def get_table(group: Union[str, CoxeterType]) -> EmbeddedTable:
    return load_tables()[_group_name(group)]


def get_class(group: Union[str, CoxeterType], label: str, size: int) -> ClassRecord:
    """Resolved record for (group, label, size)"""
    table = get_table(group)
    for rec in table.classes:
        if rec.label == label and rec.size == size:
            return rec
    raise MissingDataError(f"no class {label} of size {size} in {table.group.name}")


def aggregate_profiles(group: Union[str, CoxeterType]) -> Tuple[IntPoly, IntPoly]:
    """(odd part, even part) of the whole involution polynomial, identity included"""
    table = get_table(group)
    total = class_sum_polynomial(table.classes)
    odd = IntPoly(c if i % 2 else 0 for i, c in enumerate(total.coeffs))
    even = IntPoly(0 if i % 2 else c for i, c in enumerate(total.coeffs))
    if parity_row(odd, 1) != table.odd_profile or parity_row(even, 0) != table.even_profile:
        raise TranscriptionError(f"{table.group.name}: class sum does not reproduce the aggregate rows")
    return odd, even


def records_to_csv(records: Iterable[ClassRecord]) -> str:
    out = io.StringIO()
    writer = csv.writer(out, lineterminator="\n")
    writer.writerow(CSV_COLUMNS)
    for rec in records:
        writer.writerow([rec.label, rec.size, rec.min_length,
                         "[" + ",".join(str(v) for v in rec.profile) + "]"])
    return out.getvalue()


def records_to_json(group: str, records: Iterable[ClassRecord]) -> str:
    payload = {"group": group, "classes": [rec.model_dump(mode="json") for rec in records]}
    return json.dumps(payload, sort_keys=True, indent=2)
