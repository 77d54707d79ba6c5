"""
Verification suite endpoint
"""
from typing import Any, Dict

from fastapi import APIRouter, HTTPException

from ....core.config import settings
from ....services.verification import SUITES, run_suite
from ..errors import to_http

router = APIRouter()


@router.get("/{suite}")
def get_suite(suite: str) -> Dict[str, Any]:
    """Run one suite (or 'all') and report every case"""
    if suite != "all" and suite not in SUITES:
        raise HTTPException(status_code=404, detail=f"Unknown suite: {suite}")
    try:
        reports = run_suite(suite, allow_large=settings.ALLOW_LARGE)
        return {
            "passed": all(r.passed for r in reports),
            "suites": [r.model_dump(mode="json") for r in reports],
        }
    except HTTPException:
        raise
    except Exception as ex:
        raise to_http(ex)
