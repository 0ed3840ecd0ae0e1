"""HTTP service surface, exercised through the ASGI test client."""

import json

import pytest
from fastapi.testclient import TestClient

from hitchin_prym.service import app


@pytest.fixture(scope="module")
def client():
    with TestClient(app) as c:
        yield c


def test_healthz(client):
    body = client.get("/healthz").json()
    assert body["status"] == "ok"


def test_presets_listing(client):
    body = client.get("/v1/presets").json()
    assert set(body["presets"]) >= {"smoke", "acceptance", "exceptional"}


def test_report_sl2(client):
    response = client.post("/v1/report", json={"group": "A1", "genus": 2})
    assert response.status_code == 200
    body = response.json()
    assert body["dimension"]["prym_dim"] == 3
    assert body["dimension"]["moduli_dim"] == 3
    assert body["fiber"]["injective"] is True
    assert body["fiber"]["bound"] == "1"


def test_report_pgl2_big_integers_are_strings(client):
    response = client.post(
        "/v1/report", json={"group": "A1", "lattice": "adjoint", "genus": 4}
    )
    assert response.status_code == 200
    fiber = response.json()["fiber"]
    assert fiber["bound"] == str(2 ** (4 * 4 - 5))
    assert fiber["pgl2"]["per_component_fiber"] == str(2 ** (4 * 4 - 6))


def test_report_custom_basis(client):
    response = client.post(
        "/v1/report",
        json={
            "group": "A1",
            "lattice": "custom",
            "custom_basis": [[1, 1], [-1, 1]],
            "central_rank": 1,
            "genus": 2,
        },
    )
    assert response.status_code == 200
    assert response.json()["datum"]["derived_simply_connected"] is True


def test_report_rejects_bad_genus(client):
    assert client.post("/v1/report", json={"group": "A1", "genus": 1}).status_code == 422


def test_report_rejects_bad_type(client):
    response = client.post("/v1/report", json={"group": "Z1", "genus": 2})
    assert response.status_code == 422
    assert "Z" in response.json()["detail"]


def test_report_rejects_unknown_field(client):
    response = client.post(
        "/v1/report", json={"group": "A1", "genus": 2, "bogus": 1}
    )
    assert response.status_code == 422


def test_report_matches_in_process_run(client):
    from hitchin_prym.pipeline import run
    from hitchin_prym.schemas import RunSpec

    spec = RunSpec(group="G2", genus=2)
    local = run(spec).model_dump()
    remote = client.post("/v1/report", json={"group": "G2", "genus": 2}).json()
    local.pop("timing_ms")
    remote.pop("timing_ms")
    assert json.dumps(local, sort_keys=True) == json.dumps(remote, sort_keys=True)


def test_sweep_endpoint(client):
    response = client.get("/v1/sweep/smoke")
    assert response.status_code == 200
    assert len(response.json()) == 5
    assert client.get("/v1/sweep/nope").status_code == 404
