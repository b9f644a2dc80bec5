"""HTTP service tests via the in-process test client, plus one real
round trip of the CLI's remote mode against a live server."""

import socket
import threading
import time

import pytest
from fastapi.testclient import TestClient

from polyavg.service import app


@pytest.fixture(scope="module")
def client():
    return TestClient(app)


def test_health(client):
    doc = client.get("/health").json()
    assert doc["status"] == "ok"


def test_compute_endpoint(client):
    resp = client.post("/compute", json={"set": "{-1,1}", "n": 2, "alpha": 3})
    assert resp.status_code == 200
    doc = resp.json()
    assert doc["value"] == {"re": "93", "im": "0", "text": "93"}
    assert doc["set"] == "{-1,1}" and doc["alpha"] == 3 and doc["m"] == 0


def test_compute_endpoint_all_methods(client):
    resp = client.post(
        "/compute", json={"set": "{1,2}", "n": 1, "alpha": 2, "method": "all"}
    )
    doc = resp.json()
    assert doc["verdict"] == "AGREE"
    assert {r["method"] for r in doc["results"]} == {
        "oracle", "recursion", "multinomial", "closedform",
    }


def test_compute_endpoint_general_key(client):
    resp = client.post("/compute", json={"set": "{1,2}", "n": 1, "s": 1, "t": 1, "m": 1})
    assert resp.json()["value"]["text"] == "9/4"


def test_compute_endpoint_imaginary_value(client):
    resp = client.post("/compute", json={"set": "{0,i}", "n": 1, "s": 2, "t": 1, "m": 0})
    doc = resp.json()
    assert doc["value"]["im"] != "0" or doc["value"]["re"] != "0"


def test_compute_validation_errors(client):
    assert client.post("/compute", json={"set": "{-1,1}", "n": 2}).status_code == 422
    assert (
        client.post("/compute", json={"set": "{-1,1}", "n": -1, "alpha": 1}).status_code
        == 422
    )
    resp = client.post("/compute", json={"set": "{-1,1", "n": 1, "alpha": 1})
    assert resp.status_code == 400
    assert "braces" in resp.json()["detail"]


def test_table_endpoint_paper_style(client):
    resp = client.post(
        "/table",
        json={"set": "{-1,0,1}", "n_max": 2, "alpha_max": 5, "paper_style": True},
    )
    doc = resp.json()
    assert doc["rows"][0]["cells"] == ["1", "2/3", "6/9", "6/9", "6/9", "18/27"]
    assert doc["rows"][2]["cells"][5] == "42334/27"


def test_table_endpoint_rejects_uncovered_paper_style(client):
    resp = client.post(
        "/table", json={"set": "{0,1}", "n_max": 11, "alpha_max": 3, "paper_style": True}
    )
    assert resp.status_code == 400


def test_fit_endpoint(client):
    resp = client.post("/fit", json={"set": "{-1,1}", "alpha": 4})
    doc = resp.json()
    assert doc["formula"] == "24n^4+30n^3+4n^2+5n+4 + (-1)^n*(-3)"
    assert doc["character"]["period2"] == ["-3"]
    assert doc["period"] == 2 and doc["degree"] == 4


def test_catalog_endpoint(client):
    doc = client.get("/catalog").json()
    ids = [e["id"] for e in doc["entries"]]
    assert "littlewood_mu10" in ids and "weighted_s2t1" in ids


def test_verify_endpoint_quick(client):
    resp = client.post("/verify", json={"quick": True})
    doc = resp.json()
    assert doc["passed"] is True and doc["quick"] is True
    assert len(doc["checks"]) == 6


def _free_port() -> int:
    with socket.socket() as sock:
        sock.bind(("127.0.0.1", 0))
        return sock.getsockname()[1]


def test_cli_remote_round_trip(capsys):
    import uvicorn

    from polyavg.cli import main

    port = _free_port()
    config = uvicorn.Config(app, host="127.0.0.1", port=port, log_level="error")
    server = uvicorn.Server(config)
    thread = threading.Thread(target=server.run, daemon=True)
    thread.start()
    try:
        deadline = time.time() + 15
        while not server.started:
            if time.time() > deadline:
                pytest.fail("server did not start")
            time.sleep(0.05)
        code = main(
            [
                "compute", "--set", "{-1,1}", "--alpha", "3", "--n", "2",
                "--server", f"http://127.0.0.1:{port}",
            ]
        )
        out = capsys.readouterr().out
        assert code == 0 and out == "93\n"
        code = main(["catalog", "--server", f"http://127.0.0.1:{port}"])
        out = capsys.readouterr().out
        assert code == 0 and "littlewood_mu8" in out
    finally:
        server.should_exit = True
        thread.join(timeout=10)
