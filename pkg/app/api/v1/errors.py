"""
Domain exception to HTTP status mapping
"""
import logging

from fastapi import HTTPException

from ...core.exceptions import (
    BudgetExceededError,
    CoxinvError,
    ElementOutsideGroupError,
    InvalidGroupError,
    MissingDataError,
    NotAnInvolutionError,
)

logger = logging.getLogger(__name__)


def to_http(e: Exception) -> HTTPException:
    if isinstance(e, MissingDataError):
        return HTTPException(status_code=404, detail=str(e))
    if isinstance(e, (InvalidGroupError, NotAnInvolutionError, ElementOutsideGroupError)):
        return HTTPException(status_code=400, detail=str(e))
    if isinstance(e, BudgetExceededError):
        return HTTPException(status_code=413, detail=str(e))
    if isinstance(e, CoxinvError):
        logger.error(f"❌ {type(e).__name__}: {e}")
        return HTTPException(status_code=500, detail=f"{type(e).__name__}: {e}")
    logger.error(f"❌ Unexpected error: {e}")
    return HTTPException(status_code=500, detail=f"Internal error: {str(e)}")
