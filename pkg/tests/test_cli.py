"""Command-line behaviour and the exit-code contract.

Every subcommand is a thin adapter: these tests pin the mapping from
library results to standard streams and exit codes.
"""

import json

import pytest

import critigraph as cg
from critigraph.cli import main


@pytest.fixture()
def graph_file(tmp_path):
    def write(name, text):
        path = tmp_path / name
        path.write_text(text)
        return str(path)

    return write


def run(capsys, argv):
    code = main(argv)
    captured = capsys.readouterr()
    return code, captured.out, captured.err


class TestConstruct:
    def test_edgelist_n5(self, capsys):
        code, out, _ = run(capsys, ["construct", "--n", "5"])
        assert code == 0
        lines = out.splitlines()
        assert lines[0] == "5"
        assert len(lines) == 1 + 9  # s(5) edges

    def test_matrix(self, capsys):
        code, out, _ = run(capsys, ["construct", "--n", "4", "--format", "matrix"])
        assert code == 0
        assert out == cg.serialize_matrix(cg.extremal_digraph(4))

    def test_dot(self, capsys):
        code, out, _ = run(capsys, ["construct", "--n", "4", "--format", "dot"])
        assert code == 0
        assert out.startswith("digraph {")

    def test_below_scope_is_usage_error(self, capsys):
        code, _, err = run(capsys, ["construct", "--n", "3"])
        assert code == 2
        assert "error" in err


class TestCheck:
    def test_critical_graph(self, capsys, graph_file):
        path = graph_file("g.txt", cg.serialize_edge_list(cg.extremal_digraph(4)))
        code, out, _ = run(capsys, ["check", path, "--critical"])
        assert code == 0
        assert "vertex_critical: true" in out

    def test_non_critical_exit_1_with_witness(self, capsys, graph_file):
        k3 = cg.digraph_from_edges(
            3, [(0, 1), (1, 0), (0, 2), (2, 0), (1, 2), (2, 1)]
        )
        path = graph_file("k3.txt", cg.serialize_edge_list(k3))
        code, out, _ = run(capsys, ["check", path, "--critical"])
        assert code == 1
        assert "non_critical_witness: 0" in out

    def test_sc_assert_fails(self, capsys, graph_file):
        path = graph_file("g.txt", "2\n0 1\n")
        code, out, _ = run(capsys, ["check", path, "--sc"])
        assert code == 1
        assert "strongly_connected: false" in out

    def test_no_asserts_exit_0(self, capsys, graph_file):
        path = graph_file("g.txt", "2\n0 1\n")
        code, out, _ = run(capsys, ["check", path])
        assert code == 0

    def test_degrees_table(self, capsys, graph_file):
        path = graph_file("g.txt", cg.serialize_edge_list(cg.extremal_digraph(4)))
        code, out, _ = run(capsys, ["check", path, "--degrees"])
        assert code == 0
        assert "0: out 1 in 2 degree 3" in out

    def test_parse_error_exit_2(self, capsys, graph_file):
        path = graph_file("bad.txt", "2\n0 0\n")
        code, _, err = run(capsys, ["check", path])
        assert code == 2
        assert "loop" in err

    def test_missing_file_exit_2(self, capsys):
        code, _, err = run(capsys, ["check", "/nonexistent/graph.txt"])
        assert code == 2


class TestRemovableAndCycle:
    def test_removable(self, capsys, graph_file):
        k3 = cg.digraph_from_edges(
            3, [(0, 1), (1, 0), (0, 2), (2, 0), (1, 2), (2, 1)]
        )
        path = graph_file("k3.txt", cg.serialize_edge_list(k3))
        code, out, _ = run(capsys, ["removable", path, "--vertex", "0"])
        assert code == 0
        assert out.strip() == "1"

    def test_removable_precondition_exit_2(self, capsys, graph_file):
        path = graph_file("c4.txt", "4\n0 1\n1 2\n2 3\n3 0\n")
        code, _, err = run(capsys, ["removable", path, "--vertex", "0"])
        assert code == 2
        assert "degree" in err

    def test_cycle(self, capsys, graph_file):
        path = graph_file("g.txt", cg.serialize_edge_list(cg.extremal_digraph(5)))
        code, out, _ = run(capsys, ["cycle", path])
        assert code == 0
        assert out.strip() == "0 1"


class TestContractAndConvert:
    def test_contract(self, capsys, graph_file):
        path = graph_file("g.txt", cg.serialize_edge_list(cg.extremal_digraph(5)))
        code, out, _ = run(capsys, ["contract", path, "--set", "0,1"])
        assert code == 0
        assert "# merged_vertex 0" in out
        assert "# map 1 0" in out
        # the emitted document parses back to the contracted graph
        contracted = cg.contract(cg.extremal_digraph(5), 0b11).graph
        assert cg.parse_edge_list(out) == contracted

    def test_contract_bad_set(self, capsys, graph_file):
        path = graph_file("g.txt", "2\n0 1\n1 0\n")
        code, _, err = run(capsys, ["contract", path, "--set", "0,x"])
        assert code == 2

    def test_convert_matrix(self, capsys, graph_file):
        path = graph_file("g.txt", "2\n0 1\n1 0\n")
        code, out, _ = run(capsys, ["convert", path, "--to", "matrix"])
        assert code == 0
        assert out == "01\n10\n"

    def test_convert_stdin(self, capsys, monkeypatch):
        import io

        monkeypatch.setattr("sys.stdin", io.StringIO("2\n0 1\n1 0\n"))
        code, out, _ = run(capsys, ["convert", "-", "--to", "edgelist"])
        assert code == 0
        assert out == "2\n0 1\n1 0\n"


class TestSearchAndVerify:
    def test_search_n4(self, capsys):
        code, out, _ = run(capsys, ["search", "--n", "4", "--no-timing"])
        assert code == 0
        doc = json.loads(out)
        assert doc["max_edges"] == 6
        assert doc["graphs_scanned"] == 4096

    def test_search_n6_needs_long_run(self, capsys):
        code, _, err = run(capsys, ["search", "--n", "6"])
        assert code == 2
        assert "long-run" in err

    def test_verify_theorem_n4(self, capsys):
        code, out, _ = run(capsys, ["verify", "--property", "theorem", "--n", "4"])
        assert code == 0
        assert json.loads(out)["violations"] == []

    def test_verify_lemma2_n4(self, capsys):
        code, out, _ = run(capsys, ["verify", "--property", "lemma2", "--n", "4"])
        assert code == 0
        doc = json.loads(out)
        assert doc["instances_checked"] == 48

    def test_verify_out_of_range_exit_2(self, capsys):
        code, _, err = run(capsys, ["verify", "--property", "theorem", "--n", "3"])
        assert code == 2

    def test_jobs_env_default(self, capsys, monkeypatch):
        monkeypatch.setenv("CRITIGRAPH_JOBS", "2")
        code, out, _ = run(
            capsys, ["search", "--n", "4", "--no-timing", "--chunk-bits", "2"]
        )
        assert code == 0
        assert json.loads(out)["max_edges"] == 6

    def test_jobs_env_invalid(self, capsys, monkeypatch):
        monkeypatch.setenv("CRITIGRAPH_JOBS", "many")
        code, _, err = run(capsys, ["search", "--n", "4"])
        assert code == 2


class TestUsageErrors:
    def test_unknown_subcommand(self, capsys):
        assert main(["frobnicate"]) == 2

    def test_unknown_flag(self, capsys):
        assert main(["search", "--n", "4", "--frobnicate"]) == 2

    def test_missing_required(self, capsys):
        assert main(["search"]) == 2

    def test_help_exits_0(self, capsys):
        assert main(["--help"]) == 0
