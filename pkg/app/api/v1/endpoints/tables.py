"""
Exceptional class table endpoints
"""
from typing import Any, Dict

from fastapi import APIRouter, HTTPException

from ....core.config import settings
from ....services import queries
from ....services.exceptional_data import get_table
from ..errors import to_http

router = APIRouter()


@router.get("/{group}")
def get_class_table(group: str, source: str = "embedded") -> Dict[str, Any]:
    """Involution classes of E6, E7, E8, F4, H3 or H4"""
    try:
        records = queries.class_table(group, source, allow_large=settings.ALLOW_LARGE)
        table = get_table(group)
        return {
            "group": table.group.name,
            "source": source,
            "longest_length": table.longest_length,
            "classes": [r.model_dump(mode="json") for r in records],
        }
    except HTTPException:
        raise
    except Exception as ex:
        raise to_http(ex)
