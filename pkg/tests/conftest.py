"""
Shared fixtures and marker gating
"""
import os

import pytest

from app.services import recurrence


def pytest_collection_modifyitems(config, items):
    if os.environ.get("COXINV_RUN_LARGE") == "1":
        return
    skip_large = pytest.mark.skip(reason="set COXINV_RUN_LARGE=1 to enumerate E7")
    for item in items:
        if "large" in item.keywords:
            item.add_marker(skip_large)


@pytest.fixture
def fresh_cache():
    """Recurrence memo emptied before and after the test"""
    recurrence.clear_cache()
    yield
    recurrence.clear_cache()
