import csv
import io
import json

import pytest

from classpoly.cli import main


def run_cli(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


def test_classes_sl2(capsys):
    code, out, _ = run_cli(capsys, "classes", "-p", "SL2", "--max-len", "2",
                           "--format", "csv")
    assert code == 0
    rows = list(csv.DictReader(io.StringIO(out)))
    assert len(rows) == 4
    assert {r["straight"] for r in rows} == {"True", "False"}


def test_classes_pgl2_window_one(capsys):
    code, out, _ = run_cli(capsys, "classes", "-p", "PGL2", "--max-len", "1")
    assert code == 0
    rows = json.loads(out)
    assert len(rows) == 4  # identity, tau, merged reflections, t^{+-w}


def test_classes_max_len_zero(capsys):
    code, out, _ = run_cli(capsys, "classes", "-p", "PGL2", "--max-len", "0")
    rows = json.loads(out)
    assert code == 0 and len(rows) == 2
    assert all(r["min_length"] == 0 for r in rows)


def test_classpoly_example(capsys):
    code, out, _ = run_cli(capsys, "classpoly", "-p", "PGL2", "s0 s1 s0")
    assert code == 0
    rows = json.loads(out)
    assert len(rows) == 2
    by_len = {r["len_O"]: r for r in rows}
    assert by_len[1]["f"] == [[0, 1]]
    assert by_len[2]["f"] == [[-1, -1], [1, 1]]


def test_adlv_report(capsys):
    code, out, _ = run_cli(capsys, "adlv", "-p", "PGL2", "s0 s1 s0",
                           "kappa=[0] nu=[0]")
    assert code == 0
    doc = json.loads(out)
    assert doc["nonempty"] is True and doc["dim"] == 2
    assert doc["agreement"] is True


def test_adlv_kappa_mismatch_empty(capsys):
    code, out, _ = run_cli(capsys, "adlv", "-p", "PGL2", "s0 s1 s0",
                           "kappa=[1] nu=[0]")
    assert code == 0
    doc = json.loads(out)
    assert doc["nonempty"] is False and doc["dim"] == "-inf" and doc["terms"] == []


def test_adlv_class_of_element(capsys):
    code, out, _ = run_cli(capsys, "adlv", "-p", "PGL2", "s0 s1 s0", "of t[2]")
    assert code == 0
    assert json.loads(out)["dim"] == 1


def test_adlv_csv_flattening(capsys):
    code, out, _ = run_cli(capsys, "adlv", "-p", "PGL2", "s0 s1 s0",
                           "kappa=[0] nu=[0]", "--format", "csv")
    rows = list(csv.DictReader(io.StringIO(out)))
    assert len(rows) == 1
    assert rows[0]["dim"] == "2" and rows[0]["len_O"] == "1"


def test_scan_determinism_and_jobs(capsys):
    args = ("scan", "-p", "SL2", "--max-len", "4", "--nu-bound", "4",
            "--format", "csv")
    code1, out1, _ = run_cli(capsys, *args)
    code2, out2, _ = run_cli(capsys, *args)
    code3, out3, _ = run_cli(capsys, *args, "--jobs", "3")
    assert code1 == code2 == code3 == 0
    assert out1 == out2 == out3


def test_scan_cold_vs_warm_cache(capsys, tmp_path):
    cache = str(tmp_path / "scan.jsonl")
    args = ("scan", "-p", "PGL2", "--max-len", "4", "--nu-bound", "4",
            "--format", "csv", "--cache", cache)
    code1, cold, _ = run_cli(capsys, *args)
    assert code1 == 0
    assert (tmp_path / "scan.jsonl").exists()
    code2, warm, _ = run_cli(capsys, *args)
    assert code2 == 0
    assert cold == warm


def test_pivot_flag_changes_nothing(capsys):
    outs = []
    for pivot in ("canonical", "reversed", "seeded:7"):
        code, out, _ = run_cli(capsys, "classpoly", "-p", "SL3", "t[2,1] s1 s2",
                               "--pivot", pivot)
        assert code == 0
        outs.append(out)
    assert outs[0] == outs[1] == outs[2]


def test_input_errors_exit_2(capsys):
    code, _, err = run_cli(capsys, "classes", "-p", "NOPE")
    assert code == 2 and "error" in err
    code, _, err = run_cli(capsys, "classpoly", "-p", "SL2", "s7")
    assert code == 2
    code, _, err = run_cli(capsys, "classes")
    assert code == 2  # no datum given
    code, _, err = run_cli(capsys, "adlv", "-p", "SL2", "s0", "kappa=[0]")
    assert code == 2  # malformed class spec


def test_resource_limit_exit_3(capsys):
    code, _, err = run_cli(capsys, "classpoly", "-p", "SL3", "t[3,3] s1",
                           "--limit-nodes", "2")
    assert code == 3 and "resource" in err


def test_svg_rank_restriction(capsys, tmp_path):
    code, _, err = run_cli(capsys, "svg", "-p", "SL2", "kappa=[] nu=[0]",
                           "-o", str(tmp_path / "x.svg"))
    assert code == 2
    code, _, err = run_cli(capsys, "svg", "-p", "GL2", "kappa=[0] nu=[0,0]",
                           "-o", str(tmp_path / "y.svg"))
    assert code == 2


def test_svg_writes_figure_and_companion_csv(capsys, tmp_path):
    out = tmp_path / "sl3.svg"
    code, stdout, _ = run_cli(capsys, "svg", "-p", "SL3", "kappa=[] nu=[0,0]",
                              "--max-len", "4", "-o", str(out))
    assert code == 0
    assert out.exists() and out.stat().st_size > 0
    companion = tmp_path / "sl3.csv"
    assert companion.exists()
    rows = list(csv.DictReader(companion.open()))
    assert rows and {"w", "length", "shrunken", "nonempty", "dim"} == set(rows[0])
    assert out.read_bytes().lstrip().startswith(b"<?xml")
    # byte-identical across reruns
    first = out.read_bytes()
    code, _, _ = run_cli(capsys, "svg", "-p", "SL3", "kappa=[] nu=[0,0]",
                         "--max-len", "4", "-o", str(out))
    assert code == 0 and out.read_bytes() == first


def test_gl_commands_use_kappa_window(capsys):
    code, out, _ = run_cli(capsys, "classes", "-p", "GL2", "--max-len", "1",
                           "--kappa-window", "1")
    assert code == 0
    rows = json.loads(out)
    kappas = {tuple(r["kappa"]) for r in rows}
    assert {(-1,), (0,), (1,)} <= kappas
    code, out, _ = run_cli(capsys, "scan", "-p", "GL2", "--max-len", "2",
                           "--nu-bound", "2", "--kappa-window", "1")
    assert code == 0 and json.loads(out)


def test_selfcheck_subset(capsys):
    code, out, _ = run_cli(capsys, "selfcheck", "--quick", "--only", "C5,C8,C10")
    assert code == 0
    assert "C5" in out and "C8" in out and "C10" in out
    assert "FAIL" not in out


def test_output_file_flag(capsys, tmp_path):
    target = tmp_path / "classes.json"
    code, out, _ = run_cli(capsys, "classes", "-p", "SL2", "--max-len", "1",
                           "-o", str(target))
    assert code == 0 and out == ""
    assert json.loads(target.read_text())
