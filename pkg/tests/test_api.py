import inspect

import pytest
from fastapi.testclient import TestClient

from main import app
from app.api.v1.endpoints.analysis import get_scan
from app.api.v1.endpoints.tables import get_class_table
from app.api.v1.endpoints.verify import get_suite
from app.services.verification import B6_EVEN_PROFILE


@pytest.fixture(scope="module")
def client():
    with TestClient(app) as c:
        yield c


def test_health(client):
    response = client.get("/health")
    assert response.status_code == 200
    assert response.json()["status"] == "healthy"


def test_class_polynomial(client):
    response = client.get("/api/v1/polynomials/class", params={"type": "A", "n": 5, "m": 2})
    assert response.status_code == 200
    body = response.json()
    assert body["group"] == "S5"
    assert body["polynomial"]["coeffs"][6] == "4"


def test_class_polynomial_bad_selector(client):
    response = client.get("/api/v1/polynomials/class", params={"type": "A", "n": 3, "m": 2})
    assert response.status_code == 400


def test_involution_polynomial_d2(client):
    response = client.get("/api/v1/polynomials/involution", params={"type": "D", "n": 2})
    assert response.status_code == 200
    body = response.json()
    assert body["polynomial"]["coeffs"] == ["1", "2", "1"]
    assert body["companion"]["coeffs"] == ["1", "0", "1"]


def test_profile_b6(client):
    response = client.get("/api/v1/polynomials/profile", params={"type": "B", "n": 6})
    assert response.status_code == 200
    assert response.json()["values"] == B6_EVEN_PROFILE


def test_table_h3(client):
    response = client.get("/api/v1/tables/H3")
    assert response.status_code == 200
    body = response.json()
    assert body["longest_length"] == 15
    assert [c["label"] for c in body["classes"]] == ["A1", "A1^2", "H3"]


def test_table_for_classical_group(client):
    assert client.get("/api/v1/tables/B3").status_code == 400


def test_table_e8_engine_refused(client):
    response = client.get("/api/v1/tables/E8", params={"source": "engine"})
    assert response.status_code == 413


def test_unknown_suite(client):
    assert client.get("/api/v1/verify/nope").status_code == 404


def test_verify_dihedral(client):
    response = client.get("/api/v1/verify/dihedral")
    assert response.status_code == 200
    body = response.json()
    assert body["passed"] is True
    assert body["suites"][0]["suite"] == "dihedral"


@pytest.mark.parametrize("handler", [get_class_table, get_scan, get_suite])
def test_long_running_handlers_use_the_threadpool(handler):
    # sync handlers are run off the event loop
    assert not inspect.iscoroutinefunction(handler)

