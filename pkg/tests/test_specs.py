from __future__ import annotations

import pytest

from mutvis import Graph, SpecError, build, graph_of, parse_graph_file, write_graph_file
from mutvis.generators import cycle, g_m, petersen, theta
from mutvis.products import ProductGraph


def test_build_simple_families():
    assert graph_of(build("cycle:7")) == cycle(7)
    assert graph_of(build("petersen")) == petersen()
    assert graph_of(build(" path:3 ")).order == 3
    assert graph_of(build("gm:2")) == g_m(2)
    assert graph_of(build("randomtree:6,4")).num_edges == 5


def test_build_products():
    p = build("cp(complete:3,complete:5)")
    assert isinstance(p, ProductGraph)
    assert p.graph.order == 15
    assert p.factor_orders == (3, 5)
    q = build("cp(path:2,path:2,path:2)")
    assert q.graph.order == 8
    assert len(q.factors) == 3


def test_product_grammar_keeps_factor_parameters_together():
    p = build("cp(theta:2,2,4,theta:2,2,4)")
    assert p.factor_orders == (7, 7)
    assert p.factors[0] == theta((2, 2, 4))
    q = build("cp(gencomplete:1,1,complete:3)")
    assert q.factor_orders == (3, 3)
    r = build("cp(theta:2,2,4,cp(path:2,star:2))")
    assert r.factor_orders == (7, 2, 3)


def test_build_rejects_malformed_expressions():
    for text in (
        "",
        "unknown:3",
        "petersen:2",
        "path",
        "path:two",
        "path:3,4",
        "cp(path:3)",
        "cp(path:2,path:2,path:2,path:2)",
        "cp(path:2,)",
        "cp(path:2",
        "cp(2,2,path:2)",
    ):
        with pytest.raises(SpecError):
            build(text)


def test_build_limits_product_depth():
    deep = "cp(cp(cp(cp(path:2,path:2),path:2),path:2),path:2)"
    with pytest.raises(SpecError):
        build(deep)
    ok = "cp(cp(cp(path:2,path:2),path:2),path:2)"
    assert build(ok).graph.order == 16


def test_parse_graph_file(tmp_path):
    f = tmp_path / "square.txt"
    f.write_text("# graph: my square\n\n4\n0 1\n1 2\n2 3\n3 0\n1 0\n")
    g = parse_graph_file(f)
    assert g == cycle(4)
    assert g.name == "my square"


def test_parse_graph_file_defaults_name_to_basename(tmp_path):
    f = tmp_path / "plain.txt"
    f.write_text("2\n0 1\n")
    assert parse_graph_file(f).name == "plain.txt"


def test_parse_graph_file_errors(tmp_path):
    cases = [
        ("3\n0 3\n", "out of range"),
        ("3\n1 1\n", "self-loop"),
        ("3\n0 1 2\n", ""),
        ("zero\n0 1\n", ""),
        ("", ""),
        ("# only a comment\n", ""),
    ]
    for i, (content, fragment) in enumerate(cases):
        f = tmp_path / f"bad{i}.txt"
        f.write_text(content)
        with pytest.raises(SpecError) as err:
            parse_graph_file(f)
        assert fragment in str(err.value)


def test_parse_error_reports_line_numbers(tmp_path):
    f = tmp_path / "late.txt"
    f.write_text("# header\n4\n0 1\n0 9\n")
    with pytest.raises(SpecError) as err:
        parse_graph_file(f)
    assert ":4:" in str(err.value)


def test_round_trip_each_family(tmp_path):
    specs = [
        "path:6", "cycle:5", "complete:4", "biclique:2,3", "star:4",
        "theta:2,2,4", "gencomplete:1,2", "gm:5", "petersen", "fig1",
        "fig2", "randomtree:7,3", "cp(complete:2,complete:2)",
    ]
    for i, spec in enumerate(specs):
        g = graph_of(build(spec))
        f = tmp_path / f"g{i}.txt"
        write_graph_file(g, f, label=spec)
        back = parse_graph_file(f)
        assert back == g
        assert back.name == spec


def test_export_header_is_optional(tmp_path):
    g = Graph(2, [(0, 1)])
    f = tmp_path / "anon.txt"
    write_graph_file(g, f)
    assert not f.read_text().startswith("#")
    assert parse_graph_file(f) == g
