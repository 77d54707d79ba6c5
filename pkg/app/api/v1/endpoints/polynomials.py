"""
Class and involution polynomial endpoints
"""
from typing import Optional

from fastapi import APIRouter, HTTPException, Query

from ....models.analysis import Profile
from ....models.polynomial import ClassPolynomialOut, InvolutionPolynomialOut
from ....services import queries
from ..errors import to_http

router = APIRouter()


@router.get("/class", response_model=ClassPolynomialOut)
async def get_class_polynomial(
    type: str = Query(..., description="A, B, D, I2, E, F or H"),
    n: int = Query(..., description="letters for type A, rank otherwise"),
    m: Optional[int] = None,
    e: int = 0,
    label: Optional[str] = None,
    size: Optional[int] = None,
):
    """Length polynomial of one involution class"""
    try:
        return queries.class_polynomial(type, n, m=m, e=e, label=label, size=size)
    except HTTPException:
        raise
    except Exception as ex:
        raise to_http(ex)


@router.get("/involution", response_model=InvolutionPolynomialOut)
async def get_involution_polynomial(type: str, n: int):
    """Length polynomial of all involutions, with the B\\D companion for type D"""
    try:
        return queries.involution_polynomial(type, n)
    except HTTPException:
        raise
    except Exception as ex:
        raise to_http(ex)


@router.get("/profile", response_model=Profile)
async def get_profile(type: str, n: int, parity: str = "even", full: bool = False):
    try:
        return queries.involution_profile(type, n, parity=parity, full=full)
    except HTTPException:
        raise
    except Exception as ex:
        raise to_http(ex)
