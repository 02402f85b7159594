"""Tests for the JSON spec readers and the canonical writers."""

import json
from pathlib import Path

import pytest

from corado.core import direct_sum, dual, uniform
from corado.errors import GroundSetMismatch, JsonSyntax, UnknownType, ValidationFailed
from corado.formats import (
    load_text,
    parse_graph,
    parse_matroid,
    parse_monomial,
    parse_subset,
    parse_system,
    render_matroid,
    render_system,
)

SAMPLE_DIR = Path(__file__).parent / "sample_data"


def test_parse_uniform():
    m = parse_matroid('{"type":"uniform","k":1,"ground":["1","2"]}')
    assert m == uniform(1, ["1", "2"])


def test_parse_example_graphic_spec():
    m = parse_matroid((SAMPLE_DIR / "example_M.json").read_text())
    assert m.rank == 4
    assert m.ground.labels == ("1", "2", "3", "4", "5", "6", "7")


def test_integer_labels_are_read_as_strings():
    m = parse_matroid('{"type":"bases","ground":[1,2,3],"bases":[[1,2],[1,3]]}')
    assert m.ground.labels == ("1", "2", "3")
    assert m.rank == 2


def test_composite_specs():
    spec = {
        "type": "sum",
        "summands": [
            {"type": "dual", "of": {"type": "uniform", "k": 1, "ground": ["a", "b", "c"]}},
            {"type": "relabel", "of": {"type": "free", "ground": ["x"]}, "mapping": {"x": "d"}},
        ],
    }
    expected = direct_sum(dual(uniform(1, ["a", "b", "c"])), uniform(1, ["d"]))
    assert parse_matroid(json.dumps(spec)) == expected


def test_unequal_bases_fail_validation():
    with pytest.raises(ValidationFailed) as info:
        parse_matroid('{"type":"bases","ground":["1","2","3"],"bases":[["1","2"],["3"]]}')
    assert "UnequalCardinalities" in str(info.value)


def test_unknown_type():
    with pytest.raises(UnknownType):
        parse_matroid('{"type":"vector","ground":[]}')


def test_json_syntax_error_reports_position():
    with pytest.raises(JsonSyntax) as info:
        parse_matroid('{"type": "uniform",\n "k": }')
    assert "line 2" in str(info.value)


def test_reserved_marker_in_label():
    with pytest.raises(ValidationFailed) as info:
        parse_matroid('{"type":"free","ground":["1^"]}')
    assert "ReservedLabel" in str(info.value)


def test_missing_field():
    with pytest.raises(ValidationFailed):
        parse_matroid('{"type":"uniform","ground":["1"]}')


def test_render_matroid_is_canonical():
    m = parse_matroid((SAMPLE_DIR / "example_M.json").read_text())
    text = render_matroid(m)
    assert text == render_matroid(parse_matroid(text))
    assert parse_matroid(text) == m
    lines = text.splitlines()
    assert lines[1] == '  "type": "bases",'
    assert lines[4] == '    ["1", "2", "3", "7"],'


# ---------------------------------------------------------------------------
# Set systems, subsets, graphs, monomials
# ---------------------------------------------------------------------------


def test_parse_system_as_array():
    ground = uniform(3, ["1", "2", "3"]).ground
    system = parse_system("[[1,2],[1,3]]", ground)
    assert system.members == (0b011, 0b101)


def test_parse_system_object_form():
    ground = uniform(3, ["1", "2", "3"]).ground
    system = parse_system('{"members":[[2,3]]}', ground)
    assert system.members == (0b110,)


def test_standalone_system_needs_ground():
    with pytest.raises(ValidationFailed):
        parse_system("[[1]]")
    system = parse_system('{"ground":["a","b"],"members":[["a"],["a","b"]]}')
    assert system.ground.labels == ("a", "b")
    assert render_system(system) == '{"ground": ["a", "b"], "members": [["a"], ["a", "b"]]}\n'


def test_declared_ground_must_match():
    ground = uniform(1, ["1", "2"]).ground
    with pytest.raises(ValidationFailed) as info:
        parse_system('{"ground":["1","3"],"members":[["1"]]}', ground)
    assert isinstance(info.value.inner, GroundSetMismatch)


def test_empty_member_rejected():
    ground = uniform(1, ["1", "2"]).ground
    with pytest.raises(ValidationFailed):
        parse_system("[[]]", ground)


def test_parse_subset_forms():
    ground = uniform(1, ["1", "2", "3"]).ground
    assert parse_subset("1,3", ground) == 0b101
    assert parse_subset("[2, 3]", ground) == 0b110
    with pytest.raises(ValidationFailed):
        parse_subset("4", ground)


def test_parse_graph_file():
    graph = parse_graph((SAMPLE_DIR / "figure_graph.json").read_text())
    assert graph.left == ("x1", "x2", "x3")
    assert ("x3", "y2") in graph.edges


def test_graph_rejects_reserved_marker():
    text = '{"left":["1"],"right":["1^"],"edges":[["1","1^"]]}'
    with pytest.raises(ValidationFailed) as info:
        parse_graph(text)
    assert "ReservedLabel" in str(info.value)


def test_parse_monomial():
    m = uniform(3, ["1", "2", "3"])
    mono = parse_monomial('{"flats":[["1","2"],["1","2","3"]],"exponents":[1,1]}', m)
    assert mono.flats == (0b011, 0b111)
    assert mono.exponents == (1, 1)


def test_load_text_sources(tmp_path):
    assert load_text('{"type":"free"}') == '{"type":"free"}'
    path = tmp_path / "m.json"
    path.write_text("[1]")
    assert load_text(str(path)) == "[1]"
