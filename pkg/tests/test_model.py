import json
from fractions import Fraction

import pytest

from semimod.corpus import FIXTURES, fixture_text, load_fixture
from semimod.model import ModelError, canonical_json, load_model, parse_model
from semimod.rational import RationalMatrix2, check_decompositions, in_E1, in_N1, rational_witness_check


def base_model():
    return json.loads(fixture_text("b31.json"))


class TestFixtures:
    def test_b31_contents(self):
        m = load_fixture()
        assert set(m.semimodules) >= {"B31", "Z2", "L02"}
        assert m.morphism("iota").table == (0, 2)
        assert m.morphism("pi").table == (0, 1, 0)
        assert m.morphism("f").table == (0, 1, 1)
        assert [f.table for f in m.sequence("ses").maps] == [(0, 2), (0, 1, 0)]

    @pytest.mark.parametrize("name", FIXTURES)
    def test_round_trip(self, name):
        text = fixture_text(name)
        assert load_model(json.loads(text)).dumps() == text

    def test_parse_from_path(self, tmp_path):
        p = tmp_path / "m.json"
        p.write_text(fixture_text("b31.json"))
        assert parse_model(p).module("B31").size == 3


class TestErrors:
    def test_out_of_range(self):
        obj = base_model()
        obj["morphisms"]["pi"]["map"] = [0, 1, 5]
        with pytest.raises(ModelError) as e:
            load_model(obj)
        assert e.value.problems[0][0] == "/morphisms/pi/map/2"

    def test_scalar_mismatch(self):
        obj = base_model()
        obj["morphisms"]["bad"] = {"dom": "B31r", "cod": "Z2", "map": [0, 1, 0]}
        with pytest.raises(ModelError) as e:
            load_model(obj)
        assert e.value.problems[0][0] == "/morphisms/bad"

    def test_dangling(self):
        obj = base_model()
        obj["sequences"]["s2"] = ["iota", "nope"]
        with pytest.raises(ModelError) as e:
            load_model(obj)
        assert e.value.as_list() == [{"pointer": "/sequences/s2/1", "message": "dangling reference 'nope'"}]

    def test_errors_are_aggregated(self):
        obj = base_model()
        obj["semimodules"]["Bad"] = {"scalars": "naturals", "size": 2, "add": [[0, 1], [0, 1]]}
        obj["morphisms"]["pi"]["map"] = [0, 1]
        with pytest.raises(ModelError) as e:
            load_model(obj)
        pointers = [p for p, _ in e.value.problems]
        assert "/semimodules/Bad" in pointers and "/morphisms/pi/map" in pointers

    def test_non_linear_map(self):
        obj = base_model()
        obj["morphisms"]["pi"]["map"] = [0, 1, 1]
        with pytest.raises(ModelError):
            load_model(obj)

    def test_parse_error(self, tmp_path):
        p = tmp_path / "bad.json"
        p.write_text("{")
        with pytest.raises(ModelError) as e:
            parse_model(p)
        assert "parse error" in str(e.value)

    def test_canonical_json(self):
        assert canonical_json({"b": [1, 2], "a": {"d": 1, "c": 2}}) == '{"a":{"c":2,"d":1},"b":[1,2]}'


class TestRational:
    def test_displayed_identity(self):
        r = rational_witness_check()
        assert r["passed"]
        assert r["displayed"]["equal"] and r["displayed"]["components_differ"]
        assert all(r["displayed"]["membership"].values())

    def test_zero_control(self):
        z = rational_witness_check()["control_zero"]
        assert z["equal"] and not z["components_differ"]

    def test_perturbed_control(self):
        assert rational_witness_check()["control_perturbed"]["equal"] is False

    def test_override_detects_mismatch(self):
        e = RationalMatrix2.of(((1, 0), (0, 0)))
        n = RationalMatrix2.of(((0, 2), (0, 0)))
        zero = RationalMatrix2.of(((0, 0), (0, 0)))
        n2 = RationalMatrix2.of(((1, 1), (0, 0)))
        assert not rational_witness_check(((e, n), (zero, n2)))["passed"]

    def test_exact_arithmetic(self):
        a = RationalMatrix2.of(((Fraction(1, 3), 0), (0, Fraction(2, 3))))
        assert (a + a).rows == ((Fraction(2, 3), 0), (0, Fraction(4, 3)))
        assert (a * a).entries[0] == Fraction(1, 9)

    def test_negative_rejected(self):
        with pytest.raises(ValueError):
            RationalMatrix2((0, -1, 0, 0))

    def test_membership(self):
        assert in_E1(RationalMatrix2.of(((5, 0), (1, 0))))
        assert in_N1(RationalMatrix2.of(((1, 2), (0, 0))))
        assert not in_N1(RationalMatrix2.of(((2, 1), (0, 0))))

    def test_membership_reported(self):
        bad = RationalMatrix2.of(((0, 1), (0, 0)))
        r = check_decompositions((bad, bad), (bad, bad))
        assert r["membership"]["first_E1"] is False and not r["witnesses_non_direct"]
