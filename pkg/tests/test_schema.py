import json

import pytest
from hypothesis import given
from hypothesis import strategies as st

from cxone import fixtures, schema
from cxone.cones import Cone
from cxone.localmodel import LocalModel
from strategies import nonzero_xi, rationals


@pytest.mark.parametrize("name", fixtures.NAMES)
def test_golden_files_match_definitions(name):
    assert fixtures.render(name) == fixtures.golden_files(name)


@pytest.mark.parametrize("name", fixtures.NAMES)
def test_complex_round_trip(name):
    text = fixtures.golden_files(name)["complex.json"]
    oc = schema.parse_orbit_complex(json.loads(text))
    assert schema.dumps(schema.dump_orbit_complex(oc)) == text
    sk_text = fixtures.golden_files(name)["skeleton.json"]
    assert schema.dumps(schema.dump_skeleton(schema.parse_skeleton(json.loads(sk_text)))) == sk_text


def test_rationals_are_strings():
    doc = schema.dump_local_model(LocalModel(1, (2, -1), ("1/2",), (("-1",), ("-2",)), (("1",),)))
    assert doc["moment_value"] == ["1/2"] and doc["weights"] == [["-1"], ["-2"]] and doc["xi"] == [2, -1]


def test_integers_accepted():
    m = schema.parse_local_model({"dim_T": 1, "xi": [1, 1], "moment_value": [0], "weights": [[1], [-1]]})
    assert m.weights == ((1,), (-1,))


@pytest.mark.parametrize("doc, path", [
    ({"xi": [1, 1], "moment_value": ["0"]}, "missing field 'dim_T'"),
    ({"dim_T": 1, "xi": [1, 1], "moment_value": [0.5]}, ".moment_value[0]"),
    ({"dim_T": 1, "xi": [1, "a"], "moment_value": ["0"]}, ".xi[1]"),
    ({"dim_T": 1, "xi": [1, 1], "moment_value": ["x/y"]}, ".moment_value[0]"),
    ({"dim_T": 1, "xi": [1, 1], "moment_value": ["0"], "weights": [["1"], ["1"]]}, "xi_i"),
    ([1, 2], "expected an object"),
])
def test_model_errors(doc, path):
    with pytest.raises(schema.SchemaError) as e:
        schema.parse_local_model(doc)
    assert path in str(e.value)


def test_complex_error_paths():
    doc = json.loads(fixtures.golden_files("cp2")["complex.json"])
    doc["orbits"][3]["moment_image"][0]["vertices"][1] = [0.25]
    with pytest.raises(schema.SchemaError, match=r"\.orbits\[3\]\.moment_image\[0\]\.vertices\[1\]\[0\]"):
        schema.parse_orbit_complex(doc)
    doc = json.loads(fixtures.golden_files("cp2")["complex.json"])
    doc["closure"][0] = ["p1"]
    with pytest.raises(schema.SchemaError, match=r"\.closure\[0\]"):
        schema.parse_orbit_complex(doc)


def test_skeleton_error_paths():
    with pytest.raises(schema.SchemaError, match=r"components\[0\]"):
        schema.parse_skeleton({"components": [{"id": "S", "vertices": [{"id": "a", "image": ["0"]}], "edges": [["a", "b"]]}]})


def test_json_syntax_error_has_line():
    with pytest.raises(schema.SchemaError, match="line 2"):
        schema.loads('{\n  "a": ,\n}')


cones = st.integers(1, 3).flatmap(lambda d: st.builds(
    lambda apex, rays, opens: Cone(d, tuple(apex), (), tuple(map(tuple, rays)), frozenset(i for i in opens if i < len(rays))),
    st.lists(rationals, min_size=d, max_size=d),
    st.lists(st.lists(rationals, min_size=d, max_size=d), max_size=4),
    st.sets(st.integers(0, 3)),
))


@given(cones)
def test_cone_round_trip(c):
    assert schema.parse_cone(json.loads(schema.dumps(schema.dump_cone(c)))) == c


@given(nonzero_xi, st.data())
def test_model_round_trip(xi, data):
    mv = tuple(data.draw(st.lists(rationals, min_size=2, max_size=2)))
    m = LocalModel(2, xi, mv)
    assert schema.parse_local_model(json.loads(schema.dumps(schema.dump_local_model(m)))) == m
