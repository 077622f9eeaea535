import io
import json
import subprocess
import sys

import pytest

from totalgraph.catalog import figure1_fixtures
from totalgraph.cli import EXIT_DISCREPANCY, EXIT_OK, EXIT_USAGE, read_graph_file, run
from totalgraph.graph import to_edge_list


def call(*argv, threads=1):
    out, err = io.StringIO(), io.StringIO()
    code = run(["--threads", str(threads), *argv], out, err)
    return code, out.getvalue(), err.getvalue()


def test_ring_info():
    code, out, _ = call("ring", "info", "Z2xZ4")
    assert code == EXIT_OK
    assert "order: 8" in out and "|Z(R)|: 6" in out and "local: no" in out


def test_ring_info_json():
    code, out, _ = call("ring", "info", "Z9", "--format", "json")
    doc = json.loads(out)
    assert code == EXIT_OK and list(doc) == sorted(doc)
    assert doc["z_size"] == 3 and doc["local"] and doc["maximal_ideal"] == ["0", "3", "6"]


@pytest.mark.parametrize("fmt", ["text", "json", "dot", "edges"])
def test_total_graph_formats(fmt):
    code, out, _ = call("total-graph", "Z6", "--format", fmt)
    assert code == EXIT_OK and out
    if fmt == "json":
        doc = json.loads(out)
        assert len(doc["vertices"]) == 6 and len(doc["edges"]) == 9
    if fmt == "dot":
        assert out.count("--") == 9


def test_genus_ring():
    code, out, _ = call("genus", "Z9")
    assert code == EXIT_OK
    assert out.splitlines()[0] == "genus = 1 (exact)"
    assert "components: K_3 (0) + K_{3,3} (1)" in out
    assert "rotation system:" in out


def test_genus_graph_file(tmp_path):
    fixture = figure1_fixtures()[0][0]
    path = tmp_path / "a.edges"
    path.write_text(to_edge_list(fixture.graph()))
    assert read_graph_file(str(path)) == fixture.graph()
    code, out, _ = call("genus", "--graph", str(path), "--format", "json")
    doc = json.loads(out)
    assert code == EXIT_OK and doc["verdict"] == "exact" and doc["lower"] == doc["upper"] == 1


def test_genus_budget_exhausted():
    # only the Euler bound (V=16, E=48 gives 1) survives a tiny budget
    code, out, _ = call("genus", "F4xF4", "--budget", "10")
    assert code == EXIT_OK and out.startswith("genus >= 1 (undecided")


def test_classify_text_and_json():
    code, out, _ = call("classify", "Z3xF4")
    assert code == EXIT_OK and "genus >= 2 (machine-verified" in out and "K5,4" in out
    code, out, _ = call("classify", "Z2xZ5")
    assert "[trusted-formula]" in out
    code, out, _ = call("classify", "Z2xZ2xZ2", "--format", "json")
    doc = json.loads(out)
    assert doc["genus_class"] == "toroidal" and doc["structure"] == "K_{2,2,2,2}"
    kinds = {e["kind"] for e in doc["evidence"]}
    assert "embedding" in kinds


def test_catalog_list():
    code, out, _ = call("catalog", "list")
    assert code == EXIT_OK and len(out.splitlines()) == 28
    code, out, _ = call("catalog", "list", "--format", "json")
    assert len(json.loads(out)) == 28


def test_verify_paper():
    code, out, _ = call("verify", "paper")
    assert code == EXIT_OK
    lines = out.splitlines()
    assert sum(line.startswith("[PASS]") for line in lines) == 4
    assert lines[-1] == "discrepancies: 0"


def test_verify_paper_json_is_deterministic():
    first = call("verify", "paper", "--toroidal", "--report", "json")
    second = call("verify", "paper", "--toroidal", "--report", "json")
    assert first == second
    doc = json.loads(first[1])
    assert doc["passed"] and doc["toroidal"]["rejected"] == ["F4xF4", "Z2xZ5", "Z3xF4"]


def test_threads_give_identical_output():
    out1 = call("verify", "paper", "--planar", "--report", "json")[1]
    code, out2, _ = call("verify", "paper", "--planar", "--report", "json", threads=2)
    assert code == EXIT_OK and out1 == out2


def test_discrepancy_exit_code(monkeypatch):
    from totalgraph import cli
    from totalgraph.classify import Check, SuiteReport

    monkeypatch.setattr(cli, "verify_figures", lambda: SuiteReport("figures", [Check("broken", False, "bad")]))
    code, out, _ = call("verify", "paper", "--figures")
    assert code == EXIT_DISCREPANCY and "[FAIL] figures" in out and "discrepancies: 1" in out


@pytest.mark.parametrize(
    "argv",
    [
        ("ring", "info", "Z1"),
        ("ring", "info", "Z4[x"),
        ("genus",),
        ("genus", "Z4", "--graph", "x.edges"),
        ("genus", "--graph", "/nonexistent/file"),
        ("classify", "Z4", "--budget", "0"),
        ("frobnicate",),
        ("total-graph", "Z2[x]/(2)"),
    ],
)
def test_usage_errors(argv):
    code, _, _ = call(*argv)
    assert code == EXIT_USAGE


def test_usage_error_message():
    code, _, err = call("ring", "info", "Q7")
    assert code == EXIT_USAGE and err.startswith("error:")


def test_bad_graph_file(tmp_path):
    path = tmp_path / "bad.edges"
    path.write_text("0 1\nfoo bar\n")
    code, _, err = call("genus", "--graph", str(path))
    assert code == EXIT_USAGE and "line 2" in err


def test_console_entry_point():
    proc = subprocess.run(
        [sys.executable, "-m", "totalgraph.cli", "ring", "info", "F4"], capture_output=True, text=True, check=False
    )
    assert proc.returncode == 0 and "order: 4" in proc.stdout
