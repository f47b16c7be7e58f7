"""
API tests for the root endpoints
"""

import pytest
from fastapi.testclient import TestClient

pytestmark = pytest.mark.api


def data_of(response):
    body = response.json()
    assert body["success"] is True
    assert "timestamp" in body
    return body["data"]


def test_isqrt(client: TestClient):
    response = client.get("/api/v1/isqrt/54756")
    assert response.status_code == 200
    data = data_of(response)
    assert (data["root"], data["remainder"]) == ("234", "0")
    assert data["perfect_square"] is True


def test_isqrt_big_number_travels_as_string(client: TestClient):
    n = 10 ** 40 + 1
    data = data_of(client.get(f"/api/v1/isqrt/{n}"))
    assert data["root"] == str(10 ** 20)
    assert data["remainder"] == "1"


def test_isqrt_shortcut(client: TestClient):
    data = data_of(client.get("/api/v1/isqrt/5290000", params={"shortcut": True}))
    assert data["root"] == "2300"
    assert data["shortcut_zeros"] == 2


def test_trace(client: TestClient):
    data = data_of(client.get("/api/v1/trace/54756", params={"paper_layout": True}))
    assert [board["residual"] for board in data["trace"]] == ["14756", "1856", "0"]
    assert data["halved_root"] == "234"
    assert data["table"].splitlines()[0] == "5 4 7 5 6"


def test_approx_default_and_override(client: TestClient):
    auto = data_of(client.get("/api/v1/approx/10"))
    assert auto["rule"] == "khwarizmi"
    assert auto["value"] == "19/6"
    conventional = data_of(client.get("/api/v1/approx/155", params={"rule": "conventional"}))
    assert conventional["mixed"] == "12 + 11/25"
    assert conventional["selected_by"] == "user"


def test_compare(client: TestClient):
    data = data_of(client.get("/api/v1/compare/10"))
    assert data["khwarizmi"]["square"] == "361/36"
    assert data["conventional"]["square"] == "484/49"
    assert data["measured_winner"] == "khwarizmi"
    assert data["historical_claim_holds"] is False


def test_scale(client: TestClient):
    data = data_of(client.get("/api/v1/scale/4", params={"base": 15, "pairs": 1}))
    assert data["scaled_n"] == "900"
    assert data["value"] == "2"


def test_sexagesimal(client: TestClient):
    data = data_of(client.get("/api/v1/sexagesimal/5", params={"places": 3}))
    assert data["text"] == "2;14,9,36"
    assert [step["product"] for step in data["chain"]] == ["14160", "9600", "36000"]


def test_verify(client: TestClient):
    passed = data_of(client.get("/api/v1/verify/3721", params={"root": "61"}))
    assert passed["passed"] is True
    assert passed["semantics"] == "necessary-only"
    refuted = data_of(client.get("/api/v1/verify/249", params={"root": "16", "remainder": "24"}))
    assert refuted["passed"] is False
    assert refuted["outcome"] == "refuted"
    witness = data_of(client.get("/api/v1/verify/1000"))
    assert witness["possible"] is True


def test_newton(client: TestClient):
    data = data_of(client.get("/api/v1/newton/2", params={"u0": "1"}))
    assert data["converged"] is True
    assert data["iterates"][3]["value"] == "577/408"
    comparison = data_of(client.get("/api/v1/newton/5/compare", params={"places": 3, "steps": 4}))
    assert comparison["takht_value"] == "2.236"
    assert comparison["winner"] == "newton"


def test_parse_error_is_400(client: TestClient):
    response = client.get("/api/v1/isqrt/007")
    assert response.status_code == 400
    body = response.json()
    assert body["error_code"] == "PARSE_ERROR"
    assert "detail" in body


def test_precondition_error_is_422(client: TestClient):
    response = client.get("/api/v1/approx/0", params={"rule": "khwarizmi"})
    assert response.status_code == 422
    assert response.json()["error_code"] == "PRECONDITION_ERROR"

    response = client.get("/api/v1/scale/4", params={"base": 1})
    assert response.status_code == 422


def test_newton_compare_steps_above_cap_is_422(client: TestClient):
    response = client.get("/api/v1/newton/2/compare", params={"places": 3, "steps": 40})
    assert response.status_code == 422
    assert response.json()["error_code"] == "PRECONDITION_ERROR"
