"""HTTP surface."""
import pytest
from fastapi.testclient import TestClient

from photonic_tmm.main import app


@pytest.fixture
def client():
    return TestClient(app)


def test_health(client):
    response = client.get("/health")
    assert response.status_code == 200
    assert response.json()["status"] == "healthy"


def test_spectrum(client):
    response = client.post("/api/spectrum", json={"sweep": {"samples": 5}})
    assert response.status_code == 200
    body = response.json()
    assert len(body["T"]) == 5
    assert body["omega_over_omega0"][0] == pytest.approx(0.1)
    assert body["max_oracle_deviation"] < 1e-9


def test_profile(client):
    response = client.post("/api/profile", json={"profile": {"samples": 10}})
    assert response.status_code == 200
    body = response.json()
    assert len(body["x_nm"]) == len(body["rho"]) == len(body["J_over_c"]) == 10
    assert body["J_over_c"][0] == pytest.approx(body["T"], abs=1e-10)


def test_bandgap(client):
    response = client.post("/api/bandgap", json={"sweep": {"samples": 201}, "profile": {"samples": 400}})
    assert response.status_code == 200
    body = response.json()
    assert body["count"] == len(body["gaps"]) >= 1
    assert all(gap["omega_lo"] < gap["omega_hi"] for gap in body["gaps"])


def test_invalid_body_is_rejected(client):
    assert client.post("/api/spectrum", json={"stack": {"a_nm": -5}}).status_code == 422


def test_empty_stack_profile_is_rejected(client):
    response = client.post("/api/profile", json={"stack": {"periods": 0}})
    assert response.status_code == 422
    assert "stack" in response.json()["detail"]
