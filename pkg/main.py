"""
coxinv HTTP API
FastAPI application serving involution length polynomials
"""
import logging
from contextlib import asynccontextmanager

import uvicorn
from fastapi import FastAPI

from app.api.v1.router import api_router
from app.core.config import settings
from app.core.logging_config import configure_logging
from app.services.exceptional_data import load_tables, table_checksum

configure_logging()
logger = logging.getLogger(__name__)


@asynccontextmanager
async def lifespan(app: FastAPI):
    """Application lifespan management"""
    # Startup
    logger.info(f"🚀 Starting {settings.APP_NAME} {settings.APP_VERSION}...")
    logger.debug(f"Debug mode: {settings.DEBUG}")
    logger.debug(f"Log level: {settings.LOG_LEVEL}")

    tables = load_tables()
    logger.info(f"✅ Embedded tables ready: {', '.join(tables)} (sha256 {table_checksum()[:12]})")

    yield

    # Shutdown
    logger.info(f"🛑 Shutting down {settings.APP_NAME}...")


# Create FastAPI app
app = FastAPI(
    title="coxinv API",
    description="Involution length polynomials in finite Coxeter groups",
    version=settings.APP_VERSION,
    docs_url="/docs",
    redoc_url="/redoc",
    lifespan=lifespan
)

# API routes
app.include_router(api_router, prefix="/api/v1")


# Health check
@app.get("/health")
async def health_check():
    return {"status": "healthy", "message": f"{settings.APP_NAME} is running"}


if __name__ == "__main__":
    uvicorn.run(
        "main:app",
        host=settings.HOST,
        port=settings.PORT,
        reload=settings.DEBUG,
        log_level="info",
        access_log=True,
        log_config=None  # Use our custom logging config
    )
