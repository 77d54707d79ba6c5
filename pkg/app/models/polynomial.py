"""
Wire schemas for polynomial results
"""
from typing import List, Optional

from pydantic import BaseModel

from ..services.polynomial import IntPoly, format_poly


class PolynomialOut(BaseModel):
    """IntPoly on the wire: coefficients as decimal strings, lowest degree first"""
    variable: str = "t"
    coeffs: List[str]

    @classmethod
    def from_poly(cls, poly: IntPoly) -> "PolynomialOut":
        return cls(coeffs=[str(c) for c in poly.coeffs])

    def to_poly(self) -> IntPoly:
        return IntPoly(int(c) for c in self.coeffs)


class ClassPolynomialOut(BaseModel):
    group: str
    m: int
    e: int
    polynomial: PolynomialOut
    text: str
    split: bool = False
    per_class: Optional[PolynomialOut] = None

    @classmethod
    def build(cls, group: str, m: int, e: int, poly: IntPoly,
              split: bool = False, per_class: Optional[IntPoly] = None) -> "ClassPolynomialOut":
        return cls(
            group=group, m=m, e=e,
            polynomial=PolynomialOut.from_poly(poly),
            text=format_poly(poly),
            split=split,
            per_class=PolynomialOut.from_poly(per_class) if per_class is not None else None,
        )


class InvolutionPolynomialOut(BaseModel):
    group: str
    polynomial: PolynomialOut
    text: str
    companion: Optional[PolynomialOut] = None
    companion_text: Optional[str] = None
