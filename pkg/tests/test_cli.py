import json

import pytest

from uniwiener.formats import (
    format_dot,
    format_edge_list,
    parse_edge_list,
    parse_edge_list_stream,
)
from uniwiener.graph import Graph, build_unicyclic


def test_wiener_subcommand(cli):
    code, out = cli(["wiener"], stdin="5 5\n0 1\n0 4\n1 2\n2 3\n3 4\n")
    assert code == 0 and out.strip() == "15"


def test_construct_cycle_round_trip(cli):
    code, out = cli(["construct", "cycle", "--girth", "5"])
    assert code == 0
    n, edges = parse_edge_list(out)
    g = Graph.from_edges(n, edges)
    assert format_edge_list(g) == out  # byte-exact round trip


def test_construct_theorem2_family(cli):
    code, out = cli(["construct", "theorem2", "--n", "6", "--r", "4"])
    assert code == 0
    blocks = parse_edge_list_stream(out)
    assert len(blocks) == 2


def test_construct_out_of_range_exit_2(cli):
    code, _ = cli(["construct", "theorem2", "--n", "8", "--r", "6"])
    assert code == 2


def test_dot_statement_counts(cli):
    code, out = cli(["construct", "cycle", "--girth", "4", "--format", "dot"])
    assert code == 0
    assert out.count(";") == 8  # 4 node statements + 4 edge statements
    assert out.startswith("graph G {")


def test_unknown_flag_exits_1(cli):
    code, _ = cli(["enumerate", "--n", "5", "--bogus"])
    assert code == 1


def test_missing_command_exits_1(cli):
    code, _ = cli([])
    assert code == 1


def test_wiener_disconnected_exits_2(cli):
    code, _ = cli(["wiener"], stdin="3 1\n0 1\n")
    assert code == 2


def test_transform_bridge(cli):
    code, out = cli(
        ["transform", "--op", "bridge", "--edge", "1,2"],
        stdin="4 3\n0 1\n1 2\n2 3\n",
    )
    assert code == 0
    lines = out.strip().splitlines()
    assert lines[-1] == "10 9 1"  # W_before W_after delta
    n, edges = parse_edge_list_stream("\n".join(lines[:-1]))[0]
    assert n == 4 and len(edges) == 3


def test_transform_contract(cli):
    code, out = cli(
        ["transform", "--op", "contract"],
        stdin="5 5\n0 1\n1 2\n2 3\n0 3\n1 4\n",
    )
    assert code == 0
    assert out.strip().splitlines()[-1] == "16 15 1"


def test_transform_opa(cli):
    g = "11 11\n" + "".join(
        f"{u} {v}\n" for u, v in sorted([(i, (i + 1) % 7) for i in range(7)] +
                                        [(0, 7), (0, 8), (0, 9), (0, 10)])
    )
    code, out = cli(["transform", "--op", "opA"], stdin=g)
    assert code == 0
    assert out.strip().splitlines()[-1] == "130 130 0"


def test_transform_shift(cli):
    code, out = cli(
        ["transform", "--op", "shift", "--u", "1", "--v", "2",
         "--x-side", "0,1", "--y-side", "2,3"],
        stdin="4 3\n0 1\n1 2\n2 3\n",
    )
    assert code == 0
    assert out.strip().splitlines()[-1].startswith("10 9")


def test_transform_rebalance(cli):
    stdin = "7 7\n0 1\n0 2\n0 3\n0 6\n1 2\n3 4\n4 5\n"
    code, out = cli(
        ["transform", "--op", "rebalance", "--center", "0", "--long", "3",
         "--short", "6"],
        stdin=stdin,
    )
    assert code == 0
    w_before, w_after, delta = map(int, out.strip().splitlines()[-1].split())
    assert w_before - w_after == delta > 0


def test_transform_precondition_exit_2(cli):
    code, _ = cli(["transform", "--op", "contract"], stdin="3 3\n0 1\n0 2\n1 2\n")
    assert code == 2


def test_enumerate_count_mode(cli):
    code, out = cli(["enumerate", "--n", "5", "--format", "count"])
    assert code == 0
    assert out.splitlines() == ["5 1 1 16", "5 3 3 15", "5 5 1 15"]


def test_enumerate_filter_by_r(cli):
    code, out = cli(["enumerate", "--n", "5", "--r", "3"])
    assert code == 0
    assert len(parse_edge_list_stream(out)) == 3


def test_enumerate_emits_parseable_stream(cli):
    code, out = cli(["enumerate", "--n", "6"])
    assert code == 0
    blocks = parse_edge_list_stream(out)
    assert len(blocks) == 13
    for n, edges in blocks:
        build_unicyclic(n, edges)


def test_minimize_output(cli):
    code, out = cli(["minimize", "--n", "5", "--r", "3"])
    assert code == 0
    assert out.startswith("minW=15")
    assert len(parse_edge_list_stream(out.split("\n", 1)[1])) == 1


def test_minimize_json(cli):
    code, out = cli(["minimize", "--n", "6", "--r", "4", "--json"])
    assert code == 0
    data = json.loads(out)
    assert data["min_wiener"] == 26 and len(data["minimizers"]) == 2


def test_minimize_empty_class_exit_2(cli):
    code, _ = cli(["minimize", "--n", "4", "--r", "3"])
    assert code == 2


def test_verify_pass_exit_0(cli):
    code, out = cli(["verify", "--n-max", "5", "--check", "theorem2"])
    assert code == 0
    assert "0 failed" in out


def test_verify_json_and_report(cli, tmp_path):
    path = tmp_path / "report.json"
    code, out = cli(
        ["verify", "--n-max", "4", "--check", "claims", "--json",
         "--report", str(path)]
    )
    assert code == 0
    records = json.loads(out)
    assert records == json.loads(path.read_text())
    assert all(
        set(rec) == {"check", "params", "status", "counterexamples", "runtime", "detail"}
        for rec in records
    )


def test_dot_format_content():
    g = Graph.from_edges(3, [(0, 1), (1, 2), (0, 2)])
    dot = format_dot(g)
    assert dot.splitlines()[0] == "graph G {"
    assert "  0 -- 1;" in dot


def test_parse_edge_list_errors():
    with pytest.raises(ValueError):
        parse_edge_list("3 2\n0 1\n")  # truncated
    with pytest.raises(ValueError):
        parse_edge_list("")
