"""
Group descriptors and involution class records
"""
import re
from enum import Enum
from typing import List, Optional, Union

from pydantic import BaseModel, Field, model_validator

from ..core.exceptions import InvalidGroupError


class Family(str, Enum):
    A = "A"
    B = "B"
    D = "D"
    I2 = "I2"
    E = "E"
    F = "F"
    H = "H"


CLASSICAL_FAMILIES = (Family.A, Family.B, Family.D)
EXCEPTIONAL_NAMES = ("E6", "E7", "E8", "F4", "H3", "H4")

_RANK_RULES = {
    Family.A: (1, None),
    Family.B: (1, None),
    Family.D: (1, None),
    Family.I2: (3, None),  # rank field holds the dihedral parameter n
    Family.E: (6, 8),
    Family.F: (4, 4),
    Family.H: (3, 4),
}

_NAME_PATTERN = re.compile(r"^\s*(I2|[ABDEFH])\s*[\(_]?\s*(\d+)\s*\)?\s*$", re.IGNORECASE)


class CoxeterType(BaseModel):
    """Tagged finite Coxeter group: A(n), B(n), D(n), I2(n), E6-8, F4, H3, H4"""
    family: Family
    rank: int

    class Config:
        frozen = True

    @model_validator(mode="after")
    def _check_rank(self):
        low, high = _RANK_RULES[self.family]
        if self.rank < low or (high is not None and self.rank > high):
            raise ValueError(f"no Coxeter group {self.family.value}{self.rank}")
        return self

    @property
    def name(self) -> str:
        if self.family == Family.I2:
            return f"I2({self.rank})"
        return f"{self.family.value}{self.rank}"

    @property
    def is_classical(self) -> bool:
        return self.family in CLASSICAL_FAMILIES

    @property
    def is_dihedral(self) -> bool:
        return self.family == Family.I2

    @property
    def is_exceptional(self) -> bool:
        return self.name in EXCEPTIONAL_NAMES

    def __str__(self) -> str:
        return self.name


def make_type(family: str, n: int) -> CoxeterType:
    """Build a CoxeterType, turning validation failures into InvalidGroupError"""
    try:
        return CoxeterType(family=Family(family.upper()), rank=n)
    except ValueError as e:
        raise InvalidGroupError(f"invalid group {family}{n}: {e}") from e


def parse_group(name: str) -> CoxeterType:
    """Parse names such as 'B6', 'E8', 'I2(5)'"""
    match = _NAME_PATTERN.match(name or "")
    if not match:
        raise InvalidGroupError(f"unrecognized group name {name!r}")
    return make_type(match.group(1), int(match.group(2)))


class ClassEntry(BaseModel):
    """One row of the embedded data file, before reverse references are resolved"""
    label: str
    size: int
    min_length: int
    profile: Optional[List[int]] = None
    reverse_of: Optional[dict] = None
    multiplicity: int = 1
    note: Optional[str] = None


class GroupEntry(BaseModel):
    group: str
    longest_length: int
    classes: List[ClassEntry]
    odd_profile: List[int]
    even_profile: List[int]
    quoted_even_profile: Optional[List[int]] = None
    note: Optional[str] = None


class TableFile(BaseModel):
    format_version: int
    groups: List[GroupEntry]


class ClassRecord(BaseModel):
    """Involution conjugacy class: label, size, minimal length, parity-suppressed profile"""
    label: str
    size: int
    min_length: int
    profile: List[int] = Field(default_factory=list)

    class Config:
        frozen = True

    @property
    def max_length(self) -> int:
        return self.min_length + 2 * (len(self.profile) - 1)

    @property
    def key(self) -> tuple:
        return (self.size, self.min_length, tuple(self.profile))


class EmbeddedTable(BaseModel):
    group: CoxeterType
    longest_length: int
    classes: List[ClassRecord]
    odd_profile: List[int]
    even_profile: List[int]
    quoted_even_profile: Optional[List[int]] = None
    note: Optional[str] = None


def classical_family(family: Union[str, Family]) -> Family:
    """Normalize 'a'/'B'/Family.D into a classical Family"""
    try:
        fam = Family(family.upper() if isinstance(family, str) else family)
    except ValueError as e:
        raise InvalidGroupError(f"expected type A, B or D, got {family!r}") from e
    if fam not in CLASSICAL_FAMILIES:
        raise InvalidGroupError(f"expected type A, B or D, got {fam.value}")
    return fam
