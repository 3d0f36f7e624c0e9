import json
from fractions import Fraction as F

import pytest
from hypothesis import given, settings, strategies as st

from tropicaust.domain import EMPTY, from_vertices, half_plane, line_locus, point_locus, strip
from tropicaust.jsonio import (MalformedInput, domain_from_obj, domain_to_obj, dumps,
                               locus_from_obj, locus_to_obj, loads, trace_from_obj, trace_to_obj)
from tropicaust.randomgen import any_domain, rng_for
from tropicaust.wavefront import simulate


def test_bounded_schema():
    d = domain_from_obj({"kind": "bounded", "vertices": [["0", "0"], ["4", "0"], ["4", "1"],
                                                        ["2", "3"], ["0", "1"]]})
    assert domain_to_obj(d) == {"kind": "bounded", "vertices": [["0", "0"], ["4", "0"], ["4", "1"],
                                                                ["2", "3"], ["0", "1"]]}


def test_other_schemas():
    q = {"kind": "tworays", "vertices": [["0", "0"]], "rayFirst": [0, 1], "rayLast": [1, 0]}
    assert domain_to_obj(domain_from_obj(q)) == q
    h = {"kind": "halfplane", "lambda": [1, 2], "c": "-1/3"}
    assert domain_to_obj(domain_from_obj(h)) == h
    s = {"kind": "strip", "lambda": [0, 1], "cLow": "0", "cHigh": "3"}
    assert domain_to_obj(domain_from_obj(s)) == s


def test_rationals_are_strings():
    d = from_vertices([(F(-1, 2), 0), (3, 0), (0, F(7, 3))])
    text = dumps(domain_to_obj(d))
    assert '"-1/2"' in text and '"7/3"' in text and "." not in text


def test_loci():
    for loc in (EMPTY, point_locus((F(1), F(1, 2))), line_locus((1, 1), F(3, 2))):
        assert locus_from_obj(locus_to_obj(loc)) == loc


def test_trace_round_trip(pentagon, quadrant):
    obj = trace_to_obj(simulate(pentagon))
    assert obj["finalTime"] == "3/2"
    assert obj["finalLocus"] == {"kind": "point", "points": [["2", "3/2"]]}
    assert trace_to_obj(trace_from_obj(json.loads(dumps(obj)))) == obj
    q = trace_to_obj(simulate(quadrant))
    assert q["finalTime"] == "inf" and q["finalLocus"] is None


@pytest.mark.parametrize("text", ["{", '{"kind": "blob"}', '{"kind": "bounded"}',
                                  '{"kind": "bounded", "vertices": [[0.5, 1], [2, 0], [0, 2]]}',
                                  '{"kind": "halfplane", "lambda": [1], "c": "0"}'])
def test_malformed(text):
    with pytest.raises(ValueError):
        domain_from_obj(loads(text))


@settings(max_examples=60, deadline=None)
@given(st.integers(0, 10 ** 6))
def test_round_trip_random(seed):
    d = any_domain(rng_for(seed))
    obj = json.loads(dumps(domain_to_obj(d)))
    d2 = domain_from_obj(obj)
    assert d2 == d
    assert domain_to_obj(d2) == obj
    tobj = trace_to_obj(simulate(d))
    assert trace_to_obj(trace_from_obj(json.loads(dumps(tobj)))) == tobj
