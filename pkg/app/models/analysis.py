"""
Sequence profiles and conjecture scan reports
"""
from typing import Dict, List, Optional

from pydantic import BaseModel, Field


class Profile(BaseModel):
    """values[i] is the coefficient of t^(start + step*i)"""
    start: int = 0
    step: int = 2
    values: List[int] = Field(default_factory=list)

    class Config:
        frozen = True

    def is_empty(self) -> bool:
        return not self.values


class ScanFinding(BaseModel):
    key: str
    group: str
    subject: str  # "aggregate" or a class label / cycle type
    parity: str
    profile: List[int]
    is_unimodal: bool
    is_log_concave: bool


class ScanReport(BaseModel):
    scope: Dict[str, str]
    profiles_scanned: int
    failures: List[ScanFinding]
    expected: List[str]
    missing: List[str]
    extra: List[str]
    explained: Dict[str, str] = Field(default_factory=dict)
    type_a_aggregates_log_concave: bool
    matches: bool
    note: Optional[str] = None
