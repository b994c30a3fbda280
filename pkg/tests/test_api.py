from fastapi import status

from app.services.laurent import LaurentPoly, NotDivisible


def test_potential_of_hopf_link(client):
    response = client.post("/api/potential", json={"braid": "-1 -1", "colors": "1,2"})
    assert response.status_code == status.HTTP_200_OK
    payload = response.json()
    assert payload["kind"] == "polynomial"
    assert payload["components"] == 2
    assert payload["text"] == "1"
    assert payload["denominator"] == "1"
    assert payload["braid"]["components"] == [{"strands": [1], "color": 1}, {"strands": [2], "color": 2}]


def test_potential_of_chain(client):
    response = client.post("/api/potential", json={"braid": "-1 -1 -2 -2", "colors": "1,2,3"})
    assert response.status_code == status.HTTP_200_OK
    payload = response.json()
    t2 = LaurentPoly.variable(3, 2)
    assert LaurentPoly.from_json(payload["value"]) == t2 - t2 ** -1
    assert payload["latex"] == r"\nabla = -t_{2}^{-1} + t_{2}"


def test_potential_of_trefoil_is_a_knot_fraction(client):
    response = client.post("/api/potential", json={"braid": "1 1 1", "colors": "1,1"})
    payload = response.json()
    assert payload["kind"] == "knot_fraction"
    assert payload["denominator"] == "t1 - t1^-1"
    assert payload["text"] == "(1*t1^-2 - 1 + 1*t1^2) / (t1 - t1^-1)"


def test_potential_rejects_malformed_braid(client):
    response = client.post("/api/potential", json={"braid": "1 z", "colors": "1,1"})
    assert response.status_code == status.HTTP_400_BAD_REQUEST
    assert "'z'" in response.json()["detail"]


def test_potential_rejects_open_braid(client):
    response = client.post("/api/potential", json={"braid": "1", "colors": "1,2"})
    assert response.status_code == status.HTTP_400_BAD_REQUEST
    assert "not closed-colourable" in response.json()["detail"]


def test_potential_requires_colors(client):
    response = client.post("/api/potential", json={"braid": "1"})
    assert response.status_code == status.HTTP_422_UNPROCESSABLE_ENTITY


def test_potential_enforces_size_limits(client, monkeypatch):
    monkeypatch.setenv("API_MAX_STRANDS", "2")
    response = client.post("/api/potential", json={"braid": "", "colors": "1,1,1"})
    assert response.status_code == status.HTTP_400_BAD_REQUEST
    assert "limit is 2" in response.json()["detail"]

    monkeypatch.setenv("API_MAX_WORD_LENGTH", "3")
    response = client.post("/api/potential", json={"braid": "1 1 1 1", "colors": "1,1"})
    assert response.status_code == status.HTTP_400_BAD_REQUEST
    assert "limit is 3" in response.json()["detail"]


def test_potential_division_failure_is_a_server_error(client, mocker):
    mocker.patch("app.api.potential.potential_function", side_effect=NotDivisible("remainder"))
    response = client.post("/api/potential", json={"braid": "-1 -1", "colors": "1,2"})
    assert response.status_code == status.HTTP_500_INTERNAL_SERVER_ERROR


def test_axis_endpoint(client):
    response = client.post("/api/potential/axis", json={"braid": "", "colors": "1,1"})
    assert response.status_code == status.HTTP_200_OK
    payload = response.json()
    assert payload["variables"] == ["t1", "x"]
    assert payload["text"] == "-1*x^-1 + 1*x"
    assert payload["latex"] == "-x^{-1} + x"


def test_verify_endpoint(client):
    response = client.post(
        "/api/verify",
        json={"checks": ["symmetry", "jiang"], "trials": 4, "max_strands": 3, "max_length": 4, "seed": 5},
    )
    assert response.status_code == status.HTTP_200_OK
    payload = response.json()
    assert payload["passed"] is True
    assert [report["name"] for report in payload["reports"]] == ["symmetry", "jiang"]
    assert all(report["trials"] == 4 for report in payload["reports"])


def test_verify_rejects_unknown_check(client):
    response = client.post("/api/verify", json={"checks": ["markov", "bogus"], "trials": 1})
    assert response.status_code == status.HTTP_400_BAD_REQUEST
    assert "bogus" in response.json()["detail"]


def test_verify_enforces_trial_limit(client, monkeypatch):
    monkeypatch.setenv("API_MAX_TRIALS", "10")
    response = client.post("/api/verify", json={"checks": ["routes"], "trials": 11})
    assert response.status_code == status.HTTP_400_BAD_REQUEST


def test_verify_enforces_word_length_limit(client, monkeypatch, mocker):
    monkeypatch.setenv("API_MAX_WORD_LENGTH", "20")
    run_suite = mocker.patch("app.api.verify.run_suite")
    response = client.post("/api/verify", json={"checks": ["routes"], "trials": 1, "max_length": 100000})
    assert response.status_code == status.HTTP_400_BAD_REQUEST
    assert "20" in response.json()["detail"]
    run_suite.assert_not_called()


def test_verify_enforces_colour_limit(client, monkeypatch, mocker):
    monkeypatch.setenv("API_MAX_STRANDS", "5")
    run_suite = mocker.patch("app.api.verify.run_suite")
    response = client.post("/api/verify", json={"checks": ["routes"], "trials": 1, "max_strands": 4, "max_colors": 50})
    assert response.status_code == status.HTTP_400_BAD_REQUEST
    assert "max_colors" in response.json()["detail"]
    run_suite.assert_not_called()


def test_verify_length_default_is_checked_against_limit(client, monkeypatch):
    monkeypatch.setenv("VERIFY_MAX_LENGTH", "50")
    monkeypatch.setenv("API_MAX_WORD_LENGTH", "10")
    response = client.post("/api/verify", json={"checks": ["routes"], "trials": 1})
    assert response.status_code == status.HTTP_400_BAD_REQUEST


def test_verify_validates_request(client):
    response = client.post("/api/verify", json={"trials": 0})
    assert response.status_code == status.HTTP_422_UNPROCESSABLE_ENTITY
