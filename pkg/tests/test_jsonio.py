import json
import random
from fractions import Fraction

import pytest

from helpers import PRIMES
from ultrametric.certificates import certify
from ultrametric.generate import random_matrix
from ultrametric.jsonio import (
    InputError,
    canonical_dumps,
    certificate_to_json,
    matrix_to_json,
    parse_matrix,
    parse_poly,
    parse_region,
    poly_to_json,
    region_to_json,
)
from ultrametric.regions import brauer, gershgorin, tri_oval
from ultrametric.valuation import padic, trivial


class TestMatrixFormat:
    def test_parse_example(self):
        a = parse_matrix({"p": 3, "entries": [["1", "1/2"], ["0", "3"]]})
        assert a.n == 2
        assert a.entry(1, 2) == Fraction(1, 2)
        assert a.ctx == padic(3)

    def test_round_trip(self):
        rng = random.Random(17)
        for _ in range(20):
            a = random_matrix(rng, rng.randint(1, 5), padic(rng.choice(PRIMES)))
            assert parse_matrix(matrix_to_json(a)) == a

    def test_null_p_is_trivial_valuation(self):
        a = parse_matrix({"p": None, "entries": [["2"]]})
        assert a.ctx == trivial()
        assert parse_matrix({"entries": [["2"]]}).ctx == trivial()

    def test_integer_entries_accepted(self):
        a = parse_matrix({"p": 2, "entries": [[1, 0], [0, 1]]})
        assert a.entry(1, 1) == 1

    @pytest.mark.parametrize(
        "payload",
        [
            {"p": 4, "entries": [["1"]]},
            {"p": "3", "entries": [["1"]]},
            {"p": 3},
            {"p": 3, "entries": []},
            {"p": 3, "entries": [["1", "2"]]},
            {"p": 3, "entries": [["2/4"]]},
            {"p": 3, "entries": [["1.5"]]},
            {"p": 3, "entries": [[True]]},
            "not an object",
        ],
    )
    def test_rejects_bad_payloads(self, payload):
        with pytest.raises(InputError):
            parse_matrix(payload)


class TestPolyFormat:
    def test_parse_and_round_trip(self):
        obj = {"p": 5, "coeffs": ["1/5", "-2", "0"]}
        p = parse_poly(obj)
        assert p.degree == 3
        assert poly_to_json(p) == obj

    def test_rejects_empty_and_invalid(self):
        with pytest.raises(InputError):
            parse_poly({"p": 5, "coeffs": []})
        with pytest.raises(InputError):
            parse_poly({"p": 5, "coeffs": ["3/-2"]})


class TestRegionFormat:
    def test_round_trips_preserve_membership(self):
        rng = random.Random(19)
        for build in (gershgorin, brauer, tri_oval):
            a = random_matrix(rng, 4, padic(3))
            union = build(a, "columns")
            recovered = parse_region(json.loads(canonical_dumps(region_to_json(union))))
            assert recovered == union
            for z in (Fraction(0), Fraction(1), a.entry(2, 2)):
                assert recovered.contains(z) == union.contains(z)

    def test_rejects_unknown_kind(self):
        with pytest.raises(InputError):
            parse_region({"p": 3, "kind": "square", "axis": "rows", "disks": []})

    def test_rejects_bad_axis(self):
        with pytest.raises(InputError):
            parse_region({"p": 3, "kind": "gershgorin", "axis": "diag", "disks": []})


class TestCanonicalOutput:
    def test_no_floats_anywhere(self):
        rng = random.Random(23)
        a = random_matrix(rng, 4, padic(5))
        blobs = [
            canonical_dumps(region_to_json(brauer(a, "rows"))),
            canonical_dumps(certificate_to_json(certify(a))),
            canonical_dumps(matrix_to_json(a)),
        ]

        def contains_float(value):
            if isinstance(value, float):
                return True
            if isinstance(value, dict):
                return any(contains_float(v) for v in value.values())
            if isinstance(value, list):
                return any(contains_float(v) for v in value)
            return False

        for blob in blobs:
            assert not contains_float(json.loads(blob))

    def test_keys_are_sorted(self):
        text = canonical_dumps({"b": 1, "a": {"d": 2, "c": 3}})
        assert text == '{"a":{"c":3,"d":2},"b":1}'
