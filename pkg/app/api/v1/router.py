"""
Main API router
"""
from fastapi import APIRouter

from .endpoints import analysis, polynomials, tables, verify

api_router = APIRouter()

# Include all endpoint routers
api_router.include_router(polynomials.router, prefix="/polynomials", tags=["polynomials"])
api_router.include_router(tables.router, prefix="/tables", tags=["tables"])
api_router.include_router(analysis.router, prefix="/analysis", tags=["analysis"])
api_router.include_router(verify.router, prefix="/verify", tags=["verify"])
