"""
Unimodality scan endpoint
"""
from fastapi import APIRouter, HTTPException

from ....models.analysis import ScanReport
from ....services.analysis import scan_counterexamples
from ..errors import to_http

router = APIRouter()


@router.get("/scan", response_model=ScanReport)
def get_scan() -> ScanReport:
    """Run the counterexample scan over the configured scope"""
    try:
        return scan_counterexamples()
    except HTTPException:
        raise
    except Exception as ex:
        raise to_http(ex)
