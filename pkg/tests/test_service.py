import pytest
from fastapi.testclient import TestClient

from helpers import quartic_point_count
from legendre_hgf.service.app import create_app
from legendre_hgf.survey import CSV_COLUMNS


@pytest.fixture(scope="module")
def client():
    return TestClient(create_app())


def test_health(client):
    body = client.get("/health").json()
    assert body["status"] == "ok"
    assert body["max_p"] >= 100_003


def test_count_both(client):
    resp = client.post("/count", json={"p": 5, "lambda": 2, "method": "both"})
    assert resp.status_code == 200
    body = resp.json()
    assert body["brute_count"] == body["formula_count"] == 8
    assert body["agree"] is True
    assert body["formula_residual"] < 1e-6 * 5


def test_count_brute_only(client):
    # brute force has no residue restriction on p
    body = client.post("/count", json={"p": 7, "lambda": 3, "method": "brute"}).json()
    assert body["brute_count"] == quartic_point_count(7, 3)
    assert body["formula_count"] is None
    assert body["agree"] is None


def test_count_formula_rejects_bad_residue(client):
    resp = client.post("/count", json={"p": 7, "lambda": 3, "method": "formula"})
    assert resp.status_code == 400
    assert resp.json()["error"]["code"] == "BadFieldResidue"


def test_count_rejects_singular_curve(client):
    resp = client.post("/count", json={"p": 5, "lambda": 1})
    assert resp.status_code == 400
    assert resp.json()["error"]["code"] == "SingularCurve"


def test_count_rejects_composite(client):
    resp = client.post("/count", json={"p": 9, "lambda": 2})
    assert resp.status_code == 400
    assert resp.json()["error"]["code"] == "NotPrime"


def test_count_validates_method(client):
    resp = client.post("/count", json={"p": 5, "lambda": 2, "method": "guess"})
    assert resp.status_code == 422


def test_periods(client):
    body = client.post("/periods", json={"lambda": "1/4", "terms": 2}).json()
    by_index = {row["index"]: row for row in body["periods"]}
    assert by_index[2]["partial_sum"] == "17/16"
    assert by_index[1]["partial_sum"] == "35/32"
    assert all(row["recurrence_ok"] for row in body["periods"])
    assert body["inside_unit_disk"] is True


def test_periods_outside_unit_disk_flagged(client):
    body = client.post("/periods", json={"lambda": "3/2", "terms": 4}).json()
    assert body["inside_unit_disk"] is False


def test_periods_bad_rational(client):
    resp = client.post("/periods", json={"lambda": "one quarter", "terms": 2})
    assert resp.status_code == 400
    assert resp.json()["error"]["code"] == "PreconditionViolation"


def test_periods_bad_terms(client):
    resp = client.post("/periods", json={"lambda": "1/4", "terms": 0})
    assert resp.status_code == 400


def test_congruence_sweep(client):
    body = client.post(
        "/congruence", json={"m": 1, "d": 2, "p": 13, "all_x": True}
    ).json()
    assert body["all_hold"] is True
    assert len(body["cases"]) == 12


def test_congruence_single_x(client):
    body = client.post("/congruence", json={"m": 1, "d": 4, "p": 13, "x": 4}).json()
    assert body["cases"][0]["holds"] is True


def test_congruence_needs_exactly_one_mode(client):
    assert client.post("/congruence", json={"m": 1, "d": 2, "p": 13}).status_code == 400
    assert (
        client.post(
            "/congruence", json={"m": 1, "d": 2, "p": 13, "x": 1, "all_x": True}
        ).status_code
        == 400
    )


def test_hasse_witt(client):
    body = client.post("/hasse-witt", json={"p": 5, "lambda": 2}).json()
    assert body["matrix"] == [[1, 0, 1], [0, 3, 0], [3, 0, 4]]
    assert body["trace_mod_p"] == 3
    assert body["trace_frobenius"] == -2
    assert body["congruent"] is True


def test_transform(client):
    body = client.post(
        "/transform", json={"p": 13, "a_exp": 3, "b_exp": 9, "c_exp": 6, "x": 3}
    ).json()
    assert body["ok"] is True
    assert body["residual"] < 1e-9


def test_transform_zero_argument(client):
    resp = client.post(
        "/transform", json={"p": 13, "a_exp": 3, "b_exp": 9, "c_exp": 6, "x": 0}
    )
    assert resp.status_code == 400
    assert resp.json()["error"]["code"] == "ZeroArgument"


def test_match(client):
    body = client.post("/match", json={"p": 13, "lambda": 2}).json()
    assert body["quadratic_row_holds"] is True
    assert [row["period_index"] for row in body["rows"]] == [1, 2, 3]


def test_survey(client):
    body = client.post("/survey", json={"pmax": 13}).json()
    assert body["ok"] is True
    assert len(body["rows"]) == 3 + 11
    assert set(body["rows"][0].keys()) == set(CSV_COLUMNS)


def test_survey_fault_hook(client, monkeypatch):
    monkeypatch.setenv("LEGENDRE_HGF_FAULT", "1")
    body = client.post("/survey", json={"pmax": 5}).json()
    assert body["ok"] is False
    assert body["failures"]
