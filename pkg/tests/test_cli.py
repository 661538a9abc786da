"""CLI behavior: output formats, exit codes, budgets."""

import csv
import io
import json

import pytest

from tableaux.cli import BUDGET_ENV, main


def run(capsys, *argv):
    rc = main(list(argv))
    captured = capsys.readouterr()
    return rc, captured.out, captured.err


def test_count_plain(capsys):
    rc, out, _ = run(capsys, "count", "--graph", "young", "--k", "2",
                     "--to-partition", "2,1", "--method", "all")
    assert rc == 0
    assert out.strip() == "2"


def test_count_single_method(capsys):
    rc, out, _ = run(capsys, "count", "--graph", "pascal", "--k", "3",
                     "--from", "0,0,0", "--to", "1,2,1", "--method", "formula")
    assert rc == 0
    assert out.strip() == "12"


def test_count_json(capsys):
    rc, out, _ = run(capsys, "count", "--graph", "strict", "--k", "2",
                     "--to-partition", "3,1", "--method", "all",
                     "--format", "json")
    assert rc == 0
    payload = json.loads(out)
    assert payload["graph"] == "strict"
    assert payload["from"] == "0,0"
    assert payload["to"] == "1,3"
    assert set(payload["counts"]) == {"formula", "oracle", "phi"}
    assert set(payload["counts"].values()) == {"2"}


def test_count_csv(capsys):
    rc, out, _ = run(capsys, "count", "--graph", "young", "--k", "2",
                     "--from", "0,2", "--to", "1,3", "--method", "all",
                     "--format", "csv")
    assert rc == 0
    rows = list(csv.reader(io.StringIO(out)))
    assert rows[0] == ["method", "count"]
    assert [r[1] for r in rows[1:]] == ["2", "2", "2"]


def test_count_custom_graph(capsys):
    rc, out, _ = run(capsys, "count", "--graph", "custom",
                     "--vertices", "0,0;1,0;0,1;1,1;2,1",
                     "--from", "0,0", "--to", "2,1", "--method", "all")
    assert rc == 0
    # the two routes go through (1,0) and (0,1); (2,0) is outside the box
    assert out.strip() == "2"


def test_count_rejects_vertex_outside_graph(capsys):
    rc, _, err = run(capsys, "count", "--graph", "young", "--k", "2",
                     "--from", "3,1", "--to", "4,2")
    assert rc == 2
    assert "not a vertex" in err


def test_count_rejects_partition_for_pascal(capsys):
    rc, _, err = run(capsys, "count", "--graph", "pascal", "--k", "2",
                     "--to-partition", "2,1")
    assert rc == 2
    assert "partition input" in err


def test_verify_emits_json_lines(capsys):
    rc, out, _ = run(capsys, "verify", "vandermonde", "--k", "2", "--n", "3")
    assert rc == 0
    lines = out.strip().splitlines()
    assert len(lines) == 1
    rep = json.loads(lines[0])
    assert rep["identity"] == "vandermonde_convolution"
    assert rep["status"] == "pass"
    assert "params" in rep


def test_verify_controls(capsys):
    rc, out, _ = run(capsys, "verify", "controls")
    assert rc == 0
    for line in out.strip().splitlines():
        assert json.loads(line)["status"] == "pass"


def test_verify_pairs_seeded(capsys):
    rc, out, _ = run(capsys, "verify", "pairs", "--graph", "young", "--k", "2",
                     "--deg", "6", "--pairs", "5", "--seed", "11")
    assert rc == 0
    rep = json.loads(out)
    assert rep["seed"] == "11"


def test_budget_rejects_oversized_request(capsys):
    rc, _, err = run(capsys, "verify", "hook", "--k", "9", "--n", "99")
    assert rc == 2
    assert "budget" in err


def test_budget_env_override(capsys, monkeypatch):
    partition = "9,8,7,6,5,4,3,2,1"
    rc, _, err = run(capsys, "hooks", "--partition", partition)
    assert rc == 2 and "budget" in err
    monkeypatch.setenv(BUDGET_ENV, "max_k=12, max_degree=60")
    rc, out, _ = run(capsys, "hooks", "--partition", partition)
    assert rc == 0
    assert out.splitlines()[0].startswith("17 ")


def test_budget_env_rejects_unknown_key(capsys, monkeypatch):
    monkeypatch.setenv(BUDGET_ENV, "max_q=3")
    rc, _, err = run(capsys, "count", "--graph", "pascal", "--k", "2",
                     "--to", "1,1")
    assert rc == 2
    assert "known keys" in err


def test_hooks_plain(capsys):
    rc, out, _ = run(capsys, "hooks", "--partition", "3,2,1")
    assert rc == 0
    assert out == "5 3 1\n3 1\n1\nproduct 45\ncount 16\n"


def test_hooks_json(capsys):
    rc, out, _ = run(capsys, "hooks", "--partition", "2,1", "--format", "json")
    assert rc == 0
    payload = json.loads(out)
    assert payload["hooks"] == [[3, 1], [1]]
    assert payload["product"] == "3"
    assert payload["count"] == "2"


def test_hooks_csv(capsys):
    rc, out, _ = run(capsys, "hooks", "--partition", "2,1", "--format", "csv")
    assert rc == 0
    rows = list(csv.reader(io.StringIO(out)))
    assert rows == [["row", "col", "hook"],
                    ["0", "0", "3"], ["0", "1", "1"], ["1", "0", "1"]]


def test_phi_lattice_base(capsys):
    rc, out, _ = run(capsys, "phi", "--graph", "young", "--k", "2", "--deg", "3")
    assert rc == 0
    lines = out.strip().splitlines()
    assert lines[0] == "0,1 1"
    assert lines[-1] == "conditions pass"


def test_phi_custom_box_passes(capsys):
    rc, out, _ = run(capsys, "phi", "--graph", "custom",
                     "--vertices", "0,0;1,0;1,1;2,1", "--deg", "2")
    assert rc == 0
    assert out.strip().splitlines()[-1] == "conditions pass"


def test_phi_custom_box_without_minimum_fails(capsys):
    rc, _, err = run(capsys, "phi", "--graph", "custom",
                     "--vertices", "1,0;0,1;1,1", "--deg", "2")
    assert rc == 1
    assert "construction failed" in err


def test_table_csv_quotes_vertices(capsys):
    rc, out, _ = run(capsys, "table", "--graph", "pascal", "--k", "2",
                     "--deg", "2", "--format", "csv")
    assert rc == 0
    rows = list(csv.reader(io.StringIO(out)))
    assert rows[0] == ["vertex", "count"]
    assert ["1,1", "2"] in rows
    assert all(len(r) == 2 for r in rows)


def test_table_json(capsys):
    rc, out, _ = run(capsys, "table", "--graph", "young", "--k", "2",
                     "--deg", "3", "--format", "json")
    assert rc == 0
    payload = json.loads(out)
    assert payload["from"] == "0,1"
    assert payload["counts"]["1,3"] == "2"


def test_usage_errors():
    with pytest.raises(SystemExit) as exc:
        main([])
    assert exc.value.code == 2
    with pytest.raises(SystemExit):
        main(["count", "--graph", "nonsense"])


def test_count_requires_k_for_lattice(capsys):
    rc, _, err = run(capsys, "count", "--graph", "young", "--to", "1,3")
    assert rc == 2
    assert "--k is required" in err
