from __future__ import annotations

import csv
import io
import json

import mutvis.verify
from mutvis import parse_graph_file
from mutvis.cli import main
from mutvis.verify import VerificationRecord


def run_cli(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


def test_compute_json_stable(capsys):
    code, out, err = run_cli(
        capsys, "compute", "--graph", "theta:2,2,4", "--invariant", "mut",
        "--witness", "--stable",
    )
    assert code == 0 and not err
    payload = json.loads(out)
    assert payload["value"] == 1
    assert payload["witness"] == [2]
    assert payload["kind"] == "mut"
    assert payload["order"] == 7
    assert "timestamp" not in payload


def test_compute_json_timestamp_by_default(capsys):
    code, out, _ = run_cli(capsys, "compute", "--graph", "path:4", "--invariant", "bp")
    payload = json.loads(out)
    assert code == 0
    assert payload["value"] == 2
    assert "timestamp" in payload


def test_stable_runs_are_byte_identical(capsys):
    args = ("compute", "--graph", "cycle:9", "--invariant", "mut", "--stable")
    _, first, _ = run_cli(capsys, *args)
    _, second, _ = run_cli(capsys, *args)
    assert first == second


def test_compute_text_decodes_product_witnesses(capsys):
    code, out, _ = run_cli(
        capsys, "compute", "--graph", "cp(complete:3,complete:5)",
        "--invariant", "mut", "--witness", "--format", "text",
    )
    assert code == 0
    lines = out.splitlines()
    assert lines[0] == "mut(cp(complete:3,complete:5)) = 5"
    assert lines[1].startswith("witness:")
    assert "(0,4)" in lines[2]


def test_compute_csv(capsys):
    code, out, _ = run_cli(
        capsys, "compute", "--graph", "cp(cycle:6,complete:4)",
        "--invariant", "mut", "--format", "csv",
    )
    assert code == 0
    rows = list(csv.reader(io.StringIO(out)))
    assert rows[0] == ["graph", "invariant", "value", "method", "witness"]
    assert rows[1][0] == "cp(cycle:6,complete:4)"
    assert rows[1][2:5] == ["0", "pruned-search", ""]


def test_compute_girth_handles_acyclic(capsys):
    code, out, _ = run_cli(
        capsys, "compute", "--graph", "path:6", "--invariant", "girth",
        "--format", "text",
    )
    assert code == 0
    assert out.strip() == "girth(path:6) = none"


def test_compute_cap_exit(capsys):
    code, _, err = run_cli(capsys, "compute", "--graph", "path:25", "--invariant", "mu")
    assert code == 1
    assert "--cap-n" in err
    code, out, _ = run_cli(
        capsys, "compute", "--graph", "path:25", "--invariant", "mu", "--cap-n", "25",
        "--stable",
    )
    assert code == 0
    assert json.loads(out)["value"] == 2


def test_compute_parse_errors_exit_2(capsys):
    code, _, err = run_cli(capsys, "compute", "--graph", "wat:3", "--invariant", "mu")
    assert code == 2 and "wat" in err
    code, _, err = run_cli(
        capsys, "compute", "--graph", "@/no/such/file.txt", "--invariant", "mu"
    )
    assert code == 2


def test_compute_disconnected_exit_1(tmp_path, capsys):
    f = tmp_path / "disc.txt"
    f.write_text("4\n0 1\n2 3\n")
    code, _, err = run_cli(capsys, "compute", "--graph", f"@{f}", "--invariant", "mut")
    assert code == 1
    assert "connected" in err


def test_threads_must_be_positive(capsys):
    code, _, err = run_cli(
        capsys, "compute", "--graph", "path:3", "--invariant", "mu", "--threads", "0"
    )
    assert code == 2
    assert "--threads" in err


def test_verify_single_suite(capsys):
    code, out, _ = run_cli(
        capsys, "verify", "--theorem", "fam:gm", "--format", "text", "--stable"
    )
    assert code == 0
    assert "4 pass, 0 fail, 0 skipped-cap" in out


def test_verify_json_summary(capsys):
    code, out, _ = run_cli(
        capsys, "verify", "--theorem", "prop:cp-complete-by-complete",
        "--format", "json", "--stable",
    )
    assert code == 0
    payload = json.loads(out)
    assert payload["summary"]["fail"] == 0
    assert payload["summary"]["pass"] == len(payload["records"]) == 16
    assert all(r["status"] == "pass" for r in payload["records"])


def test_verify_csv_shape(capsys):
    code, out, _ = run_cli(
        capsys, "verify", "--theorem", "fam:sporadic", "--format", "csv", "--stable"
    )
    assert code == 0
    lines = out.splitlines()
    assert lines[0] == "theorem_id,instance,expected,observed,status"
    assert all(line.endswith("pass") for line in lines[1:])


def test_verify_unknown_id(capsys):
    code, _, err = run_cli(capsys, "verify", "--theorem", "thm:bogus")
    assert code == 2
    assert "known suites" in err


def test_verify_list(capsys):
    code, out, _ = run_cli(capsys, "verify", "--theorem", "list")
    assert code == 0
    assert "cor:theta" in out.split()


def test_verify_failure_exit_code(monkeypatch, capsys):
    def broken(opts):
        return [VerificationRecord("test:broken", "k1", "1", "2", "fail")]

    monkeypatch.setitem(mutvis.verify._SUITES, "test:broken", ("a failing stub", broken))
    code, out, _ = run_cli(capsys, "verify", "--theorem", "test:broken", "--format", "text")
    assert code == 1
    assert "0 pass, 1 fail" in out


def test_verify_cap_skips_do_not_fail_the_run(capsys):
    code, out, _ = run_cli(
        capsys, "verify", "--theorem", "fam:gm", "--cap-bp", "4", "--format", "text"
    )
    assert code == 0
    assert "[skipped-cap]" in out
    assert "0 fail" in out


def test_export_round_trip(tmp_path, capsys):
    out_file = tmp_path / "gm5.txt"
    code, _, _ = run_cli(capsys, "export", "--graph", "gm:5", "--out", str(out_file))
    assert code == 0
    g = parse_graph_file(out_file)
    assert g.order == 18
    assert g.name == "gm:5"
    assert out_file.read_text().startswith("# graph: gm:5\n18\n")


def test_export_bad_path_exit_2(tmp_path, capsys):
    code, _, err = run_cli(
        capsys, "export", "--graph", "path:3", "--out", str(tmp_path / "no" / "dir.txt")
    )
    assert code == 2 and err


def test_info_text(capsys):
    code, out, _ = run_cli(capsys, "info", "--graph", "petersen")
    assert code == 0
    assert "order: 10" in out
    assert "girth: 5" in out
    assert "bp: 0" in out


def test_info_json_disconnected(tmp_path, capsys):
    f = tmp_path / "disc.txt"
    f.write_text("4\n0 1\n2 3\n")
    code, out, _ = run_cli(capsys, "info", "--graph", f"@{f}", "--format", "json")
    assert code == 0
    payload = json.loads(out)
    assert payload["connected"] is False
    assert payload["girth"] is None
    assert "bp" not in payload
