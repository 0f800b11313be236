import pytest
from fastapi.testclient import TestClient

from ultrametric.service import create_app

MATRIX = {"p": 3, "entries": [["1", "3"], ["3", "1"]]}


@pytest.fixture(scope="module")
def client():
    return TestClient(create_app())


class TestHealth:
    def test_health(self, client):
        response = client.get("/health")
        assert response.status_code == 200
        assert response.json() == {"status": "ok"}


class TestRegionEndpoints:
    def test_gershgorin(self, client):
        response = client.post(
            "/regions/gershgorin", json={"matrix": MATRIX, "axis": "rows"}
        )
        assert response.status_code == 200
        body = response.json()
        assert body["kind"] == "gershgorin"
        assert body["disks"] == [
            {"j": 1, "c": "1", "r": 1},
            {"j": 2, "c": "1", "r": 1},
        ]
        assert "ovals" not in body

    def test_brauer_then_contains(self, client):
        region = client.post("/regions/brauer", json={"matrix": MATRIX}).json()
        response = client.post(
            "/regions/contains", json={"region": region, "lambda": "1"}
        )
        assert response.status_code == 200
        assert response.json()["member"] is True
        response = client.post(
            "/regions/contains", json={"region": region, "lambda": "0"}
        )
        assert response.json() == {"member": False, "witnesses": []}

    def test_tri_oval_dimension_precondition(self, client):
        response = client.post("/regions/tri-oval", json={"matrix": MATRIX})
        assert response.status_code == 422

    def test_axis_defaults_to_rows(self, client):
        explicit = client.post(
            "/regions/gershgorin", json={"matrix": MATRIX, "axis": "rows"}
        ).json()
        default = client.post("/regions/gershgorin", json={"matrix": MATRIX}).json()
        assert explicit == default


class TestMatrixEndpoints:
    def test_certify(self, client):
        response = client.post("/matrix/certify", json={"matrix": MATRIX})
        assert response.status_code == 200
        body = response.json()
        assert body["verdict"] == "RowDominance"
        assert body["detail"]["row_dominance"] == [True, True]

    def test_spectral_bound(self, client):
        response = client.post("/matrix/spectral-bound", json={"matrix": MATRIX})
        assert response.json() == {"bound": 0}

    def test_det_bound(self, client):
        response = client.post("/matrix/det-bound", json={"matrix": MATRIX})
        assert response.json() == {"bound": 0, "det_abs": 0, "holds": True}

    def test_char_poly(self, client):
        response = client.post("/matrix/char-poly", json={"matrix": MATRIX})
        assert response.json() == {"p": 3, "coeffs": ["-8", "-2"]}

    def test_non_prime_p_is_bad_request(self, client):
        bad = {"p": 6, "entries": [["1"]]}
        response = client.post("/matrix/certify", json={"matrix": bad})
        assert response.status_code == 400
        assert "prime" in response.json()["detail"]

    def test_non_reduced_rational_is_bad_request(self, client):
        bad = {"p": 3, "entries": [["2/4"]]}
        response = client.post("/matrix/certify", json={"matrix": bad})
        assert response.status_code == 400


class TestPolyEndpoints:
    def test_companion(self, client):
        response = client.post(
            "/poly/companion", json={"poly": {"p": 3, "coeffs": ["4", "-7"]}}
        )
        assert response.json() == {"p": 3, "entries": [["0", "1"], ["-4", "7"]]}

    def test_reciprocal(self, client):
        response = client.post(
            "/poly/reciprocal", json={"poly": {"p": 3, "coeffs": ["2", "-3"]}}
        )
        assert response.json() == {"p": 3, "coeffs": ["1/2", "-3/2"]}

    def test_reciprocal_zero_constant_precondition(self, client):
        response = client.post(
            "/poly/reciprocal", json={"poly": {"p": 3, "coeffs": ["0", "1"]}}
        )
        assert response.status_code == 422

    def test_bounds(self, client):
        response = client.post(
            "/poly/bounds", json={"poly": {"p": 3, "coeffs": ["1", "-1/3"]}}
        )
        assert response.json() == {"upper": -1, "lower": 1}

    def test_newton(self, client):
        response = client.post(
            "/poly/newton", json={"poly": {"p": 2, "coeffs": ["8", "2"]}}
        )
        assert response.json() == {
            "vertices": [[0, 3], [1, 1], [2, 0]],
            "segments": [
                {"slope": "-2", "length": 1},
                {"slope": "-1", "length": 1},
            ],
            "zero_root_multiplicity": 0,
        }

    def test_verify(self, client):
        response = client.post(
            "/poly/verify", json={"poly": {"p": 3, "coeffs": ["1", "-1/3"]}}
        )
        assert response.json() == {
            "min_root_val": "-1",
            "max_root_val": "1",
            "upper_ok": True,
            "lower_ok": True,
        }

    def test_root_cases(self, client):
        response = client.post(
            "/poly/root-cases",
            json={"poly": {"p": 3, "coeffs": ["3", "-4"]}, "lambda": "1"},
        )
        assert response.status_code == 200
        body = response.json()
        assert "row.b1" in body["gershgorin"]["satisfied"]
        assert body["brauer"]["satisfied"]
        assert body["reciprocal"]["satisfied"]

    def test_root_cases_non_root_precondition(self, client):
        response = client.post(
            "/poly/root-cases",
            json={"poly": {"p": 3, "coeffs": ["3", "-4"]}, "lambda": "7"},
        )
        assert response.status_code == 422


class TestFixtureEndpoint:
    def test_counterexample(self, client):
        response = client.get("/fixture/counterexample", params={"p": 5})
        assert response.status_code == 200
        body = response.json()
        assert body["p"] == 5
        assert body["memberships"]["tri_oval"] == {
            "0": False, "1": True, "2": False,
        }
        assert body["tri_oval_misses_spectrum"] is True

    def test_composite_p_rejected(self, client):
        response = client.get("/fixture/counterexample", params={"p": 9})
        assert response.status_code == 400
