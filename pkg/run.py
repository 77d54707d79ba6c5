#!/usr/bin/env python3
"""
Development server for the coxinv API
"""
import logging

import uvicorn

from app.core.config import settings
from app.core.logging_config import configure_logging

logger = logging.getLogger("coxinv.run")

if __name__ == "__main__":
    configure_logging()
    if settings.ALLOW_LARGE:
        logger.warning("⚠️ ALLOW_LARGE is set: /tables/E7?source=engine will enumerate 2.9M elements")
    uvicorn.run(
        "main:app",
        host=settings.HOST,
        port=settings.PORT,
        reload=settings.DEBUG,
        log_level=settings.LOG_LEVEL.lower(),
        log_config=None,
    )
