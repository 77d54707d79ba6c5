"""
Verification, reduction and benchmark records
"""
from typing import List, Optional

from pydantic import BaseModel, Field


class ReductionReport(BaseModel):
    """Decomposition of an involution x by the cycle containing its largest letter"""
    n: int
    x: List[int]
    tau: str
    r: Optional[int] = None
    y: List[int]
    z: Optional[List[int]] = None
    delta: Optional[int] = None
    lambda_x: int
    sigma_x: int
    lambda_y: int
    sigma_y: int
    lambda_z: Optional[int] = None
    sigma_z: Optional[int] = None
    lambda_branch_holds: bool
    sigma_branch_holds: bool
    conjugation_identity_holds: bool = True
    corollary_identity_holds: bool = True

    @property
    def all_hold(self) -> bool:
        return (self.lambda_branch_holds and self.sigma_branch_holds
                and self.conjugation_identity_holds and self.corollary_identity_holds)


class CaseResult(BaseModel):
    key: str
    passed: bool
    detail: Optional[str] = None


class SuiteReport(BaseModel):
    suite: str
    cases: List[CaseResult] = Field(default_factory=list)
    skipped: List[str] = Field(default_factory=list)

    @property
    def passed(self) -> bool:
        return all(c.passed for c in self.cases)

    @property
    def failures(self) -> List[CaseResult]:
        return [c for c in self.cases if not c.passed]


class BenchRow(BaseModel):
    group: str
    recurrence_seconds: float
    oracle_seconds: Optional[float] = None
    involutions: int
    agree: Optional[bool] = None


class Erratum(BaseModel):
    key: str
    quoted: str
    corrected: str
    evidence: str
