import pytest
from hypothesis import given

from fbounded.io import (
    ParseError,
    dump_kv,
    format_groups,
    format_instance,
    load_kv,
    parse_groups,
    parse_instance,
    read_instance,
    write_instance,
)

from conftest import instances

TRIANGLE = """\
# a triangle
p fbg 3 3
w 0 1
w 1 1

w 2 1
e 0 1
e 1 2
e 0 2
"""


def test_parse_triangle():
    G, f = parse_instance(TRIANGLE)
    assert G.n == 3 and G.edges == ((0, 1), (1, 2), (0, 2))
    assert f == (1, 1, 1)


@pytest.mark.parametrize(
    "text, lineno, cause",
    [
        ("p fbg 2 0\nw 0 1\nw 0 1\n", 3, "duplicate weight"),
        ("p fbg 2 1\nw 0 1\nw 1 1\ne 1 1\n", 4, "loop edge"),
        ("p fbg 2 1\nw 0 1\nw 1 1\ne 0 5\n", 4, "out of range"),
        ("p fbg 2 2\nw 0 1\nw 1 1\ne 0 1\n", 1, "count mismatch"),
        ("p fbg 3 0\nw 0 1\nw 1 1\n", 1, "count mismatch"),
        ("p fbg 2 0\nw 1 1\nw 0 1\n", 2, "ascending"),
        ("q fbg 2 0\n", 1, "header"),
        ("p fbg 1 0\nw 0 -2\n", 2, "negative"),
        ("p fbg 2 0\nw 0 1\nx 1 1\n", 3, "unknown"),
        ("p fbg 2 1\nw 0 1\nw 1 1\ne 0 1\ne 0 1\n", 5, "more edge lines"),
        ("p fbg 2 0\nw 0 a\n", 2, "non-integer"),
    ],
)
def test_parse_errors_carry_line_and_cause(text, lineno, cause):
    with pytest.raises(ParseError) as info:
        parse_instance(text)
    assert info.value.lineno == lineno
    assert cause in str(info.value)
    assert str(info.value).startswith(f"line {lineno}:")


@given(instances(max_n=8, max_m=15))
def test_round_trip_preserves_edge_indices(data):
    G, f = data
    text = format_instance(G, f)
    G2, f2 = parse_instance(text)
    assert (G2, f2) == (G, f)
    assert format_instance(G2, f2) == text


def test_file_round_trip(tmp_path):
    G, f = parse_instance(TRIANGLE)
    path = tmp_path / "t.fbg"
    write_instance(path, G, f)
    assert read_instance(path) == (G, f)


def test_kv_documents():
    doc = {"gamma": 2, "S": "0", "T": "", "bad_components": format_groups([0b110, 0b1000])}
    text = dump_kv(doc)
    assert text.splitlines()[0] == "gamma = 2"
    back = load_kv(text)
    assert back["T"] == ""
    assert parse_groups(back["bad_components"]) == [0b110, 0b1000]
    with pytest.raises(ParseError):
        load_kv("no equals sign here")
