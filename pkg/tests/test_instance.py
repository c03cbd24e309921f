import pytest

from wuec.errors import ParseError
from wuec.graph import WeightedGraph
from wuec.instance import Instance, emit_instance, parse_instance, read_instance, write_instance

FIG1 = """# weighted P4, epsilon = 0.5
p wuec 4 3 2
e 1 2 1
e 2 3 1.5
e 3 4 1
"""


def test_fig1_scaled():
    inst = parse_instance(FIG1)
    assert inst.tag == "wuec" and inst.scale == 2
    assert inst.graph.edges == ((0, 1, 2), (1, 2, 3), (2, 3, 2))


def test_single_vertex():
    inst = parse_instance("p wuec 1 0 1\n")
    assert inst.graph == WeightedGraph(1)


def test_order_and_forced():
    inst = parse_instance("p extwssf 3 2 1\ne 1 2 4\ne 2 3 5\no 2 1 3\nf 1 2\n")
    assert inst.order == (1, 0, 2)
    assert inst.forced == {0}
    assert inst.forced_packing().edges == {0}


def test_fraction_weights():
    inst = parse_instance("p wssf 2 1 3\ne 1 2 2/3\n")
    assert inst.graph.edges == ((0, 1, 2),)
    assert emit_instance(inst) == "p wssf 2 1 3\ne 1 2 2/3\n"


def test_roundtrip_exact():
    canon = emit_instance(parse_instance(FIG1))
    assert canon == "p wuec 4 3 2\ne 1 2 1\ne 2 3 1.5\ne 3 4 1\n"
    assert emit_instance(parse_instance(canon)) == canon


def test_roundtrip_decimals():
    inst = Instance("wuec", WeightedGraph(3, [(0, 1, 1), (1, 2, 37)]), 40)
    text = emit_instance(inst)
    assert "0.025" in text and "0.925" in text
    assert parse_instance(text) == inst


@pytest.mark.parametrize("text,line,fragment", [
    ("p wuec 2 1 1\ne 1 1 3\n", 2, "self-loop"),
    ("p wuec 3 2 1\ne 1 2 1\ne 2 1 4\n", 3, "duplicate"),
    ("p wuec 2 1 1\ne 1 2 -1\n", 2, "negative"),
    ("p wuec 2 1 1\ne 1 2 0.5\n", 2, "not an integer"),
    ("p wuec 2 1 1\ne 1 3 1\n", 2, "out of range"),
    ("p wuec 2 1 1\ne 1 2 x\n", 2, "bad weight"),
    ("p foo 2 1 1\n", 1, "unknown problem tag"),
    ("p wuec 2 1\n", 1, "header"),
    ("e 1 2 1\n", 1, "before"),
    ("p wuec 2 1 1\nq 1\n", 2, "unknown line"),
    ("p wuec 3 0 1\no 1 2\n", 2, "order"),
    ("p wuec 3 1 1\ne 1 2 1\nf 2 3\n", 3, "not an edge"),
    ("p wuec 2 1 0\n", 1, "scale"),
])
def test_errors_carry_line_numbers(text, line, fragment):
    with pytest.raises(ParseError) as info:
        parse_instance(text)
    assert info.value.line == line
    assert f"line {line}:" in str(info.value)
    assert fragment in str(info.value)


def test_edge_count_mismatch():
    with pytest.raises(ParseError, match="announces 2 edges"):
        parse_instance("p wuec 3 2 1\ne 1 2 1\n")


def test_forced_must_be_packing():
    with pytest.raises(ParseError):
        parse_instance("p extwssf 4 3 1\ne 1 2 1\ne 2 3 1\ne 3 4 1\nf 1 2\nf 2 3\nf 3 4\n")


def test_file_roundtrip(tmp_path):
    inst = parse_instance(FIG1)
    f = tmp_path / "fig1.g"
    write_instance(f, inst)
    assert read_instance(f) == inst
