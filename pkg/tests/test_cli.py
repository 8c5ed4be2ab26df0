import io
import json
import subprocess
import sys

import jsonschema
import pytest

from distbal import balance as bal
from distbal.cli import main
from distbal.formats import parse_edge_list, parse_graph6
from distbal.reports import load_schema


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


@pytest.fixture
def k23(tmp_path):
    p = tmp_path / "k23.g6"
    p.write_text("D]o\n")
    return str(p)


def test_generate_star_edges(capsys):
    code, out, _ = run(capsys, "generate", "star", "3", "--format", "edges")
    assert code == 0
    assert out.rstrip("\n") == "4 3\n0 1\n0 2\n0 3"


def test_generate_g6(capsys):
    code, out, _ = run(capsys, "generate", "complete_bipartite", "2", "3")
    assert code == 0 and out == "D]o\n"


def test_generate_bad_params(capsys):
    assert run(capsys, "generate", "cycle", "2")[0] == 2
    assert run(capsys, "generate", "wheel")[0] == 2
    assert run(capsys, "generate", "hypercube", "3")[0] == 2


def test_analyze_json_k23(capsys, k23):
    code, out, _ = run(capsys, "analyze", k23, "--json", "--pairs")
    assert code == 0
    doc = json.loads(out)
    jsonschema.validate(doc, load_schema())
    (rep,) = doc["reports"]
    assert rep["balance"]["by_distance"]["2"]["edb"]["holds"] is True
    assert rep["balance"]["edb"]["holds"] is False
    # the witness decodes against the input graph
    G = parse_graph6(rep["graph6"])
    w = rep["balance"]["edb"]["witness"]
    cls = bal.classify_edges_for_pair(G, None, w["g"], w["h"])
    assert G.edges[w["edge"]] == (w["g"], w["h"])
    assert (cls.m_gh, cls.m_hg) == (w["left"], w["right"])
    assert all(r["m_gh"] + r["m_hg"] + r["m_0"] == G.m for r in rep["pairs"])


def test_analyze_text_and_stdin(capsys, monkeypatch):
    monkeypatch.setattr(sys, "stdin", io.StringIO("4 3\n0 1\n1 2\n2 3\n"))
    code, out, _ = run(capsys, "analyze", "-", "--k", "2")
    assert code == 0
    assert "2-edb: no (pair 0,2: 1 vs 2)" in out
    assert "total distances: [3, 1, 1, 3]" in out


def test_analyze_multiple_and_disconnected(capsys, tmp_path):
    p = tmp_path / "many.g6"
    p.write_text("A_\nC?\nCF\n")
    code, out, _ = run(capsys, "analyze", str(p), "--json", "--k", "2,4")
    doc = json.loads(out)
    jsonschema.validate(doc, load_schema())
    assert [r["connected"] for r in doc["reports"]] == [True, False, True]
    assert doc["reports"][1]["balance"] is None
    assert set(doc["reports"][2]["balance"]["by_distance"]) == {"2", "3", "4"}


def test_analyze_input_errors(capsys, tmp_path):
    assert run(capsys, "analyze", str(tmp_path / "missing.g6"))[0] == 3
    bad = tmp_path / "bad.txt"
    bad.write_text("3 1\n0 0\n")
    code, _, err = run(capsys, "analyze", str(bad))
    assert code == 3 and "line 2" in err
    bad.write_text("D?\n")
    assert run(capsys, "analyze", str(bad), "--format", "g6")[0] == 3
    bad.write_text("")
    assert run(capsys, "analyze", str(bad))[0] == 3


def test_usage_errors(capsys, k23):
    assert run(capsys)[0] == 2
    assert run(capsys, "frobnicate")[0] == 2
    assert run(capsys, "analyze", k23, "--k", "two")[0] == 2
    assert run(capsys, "analyze", k23, "--k", "0")[0] == 2
    assert run(capsys, "verify", "T9")[0] == 2
    assert run(capsys, "--help")[0] == 0


def test_product_and_check(capsys, tmp_path):
    a = tmp_path / "p3.txt"
    a.write_text("3 2\n0 1\n1 2\n")
    b = tmp_path / "k2.g6"
    b.write_text("A_\n")
    code, out, err = run(capsys, "product", "cartesian", str(a), str(b), "--check-distances", "--out-format", "edges")
    assert code == 0 and "36/36" in err
    P = parse_edge_list(out)
    assert (P.n, P.m) == (6, 7)
    code, out, err = run(capsys, "product", "lex", str(a), str(b), "--check-distances")
    assert code == 0
    assert parse_graph6(out.strip()).m == 2 * 4 + 3 * 1


def test_product_check_needs_connected(capsys, tmp_path):
    a = tmp_path / "two.g6"
    a.write_text("C?\n")
    b = tmp_path / "k2.g6"
    b.write_text("A_\n")
    assert run(capsys, "product", "cartesian", str(a), str(b), "--check-distances")[0] == 3
    many = tmp_path / "many.g6"
    many.write_text("A_\nA_\n")
    assert run(capsys, "product", "cartesian", str(many), str(b))[0] == 3


def test_transform(capsys, tmp_path):
    p = tmp_path / "p3.g6"
    p.write_text("BW\n")
    code, out, _ = run(capsys, "transform", "r", str(p), "--out-format", "edges")
    R = parse_edge_list(out)
    assert code == 0 and (R.n, R.m) == (5, 6)
    code, out, _ = run(capsys, "transform", "s", str(p))
    assert parse_graph6(out.strip()).n == 5


def test_verify_exit_codes(capsys):
    code, out, err = run(capsys, "verify", "T1i", "--max-n", "5")
    assert code == 0 and out.startswith("T1i: holds")
    assert "T1i:" in err  # timing goes to the diagnostic stream
    code, out, _ = run(capsys, "verify", "T5", "--max-n", "5")
    assert code == 1 and "anomaly A_" in out


def test_verify_anomalies_do_not_fail(capsys):
    code, out, _ = run(capsys, "verify", "T6", "--max-n", "5")
    assert code == 0 and "anomaly" in out


def test_verify_json_deterministic(capsys):
    first = run(capsys, "verify", "all", "--max-n", "5", "--json")
    second = run(capsys, "verify", "all", "--max-n", "5", "--json")
    assert first[1] == second[1]
    doc = json.loads(first[1])
    assert len(doc["reports"]) == 12
    assert first[0] == 1
    timed = json.loads(run(capsys, "verify", "EX22", "--json", "--timing")[1])
    assert "elapsed_seconds" in timed["reports"][0]


def test_verify_external_corpus(capsys, tmp_path):
    p = tmp_path / "corpus.g6"
    p.write_text("BW\nCF\nC^\n")
    code, out, _ = run(capsys, "verify", "C25", "--corpus", str(p))
    assert code == 1 and "examined=3" in out


def test_verify_delta_reading(capsys):
    code, out, _ = run(capsys, "verify", "T2", "--delta-reading", "every")
    assert code == 0
    code, out, _ = run(capsys, "verify", "T2")
    assert code == 1 and "F?C^G" in out


def test_console_script():
    res = subprocess.run(
        [sys.executable, "-m", "distbal.cli", "generate", "path", "3", "--format", "edges"],
        capture_output=True,
        text=True,
    )
    assert res.returncode == 0 and res.stdout == "3 2\n0 1\n1 2\n"
