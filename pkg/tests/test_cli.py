import json

import pytest

from qxopt.bench import bench_directory, render_csv, render_markdown
from qxopt.circuit import Circuit, cnot
from qxopt.cli import main
from qxopt.fixtures import data_text
from qxopt.qasm import emit, parse

ROUTING = data_text("routing_example.qasm")


@pytest.fixture()
def routing_file(tmp_path):
    path = tmp_path / "routing_example.qasm"
    path.write_text(ROUTING)
    return path


def test_unknown_flag_exits_one(capsys):
    assert main(["optimize", "--bogus"]) == 1
    assert "error" in capsys.readouterr().err


def test_unknown_subcommand_exits_one():
    assert main(["frobnicate"]) == 1


def test_no_subcommand_prints_help_and_exits_one(capsys):
    assert main([]) == 1
    assert "usage" in capsys.readouterr().out.lower()


def test_help_exits_zero():
    assert main(["--help"]) == 0


def test_optimize_json_report(routing_file, tmp_path, capsys):
    out = tmp_path / "mapped.qasm"
    code = main(
        ["optimize", "--arch", "qx2", "--in", str(routing_file), "--out", str(out), "--report", "json"]
    )
    assert code == 0
    report = json.loads(capsys.readouterr().out)
    assert report["placement"] == [0, 1, 2]
    assert report["final"] == {"gates": 2, "levels": 2}
    mapped = parse(out.read_text())
    assert mapped.num_qubits == 5


def test_optimize_csv_report(routing_file, capsys):
    assert main(["optimize", "--arch", "qx4", "--in", str(routing_file), "--report", "csv"]) == 0
    lines = capsys.readouterr().out.strip().splitlines()
    assert lines[0].startswith("input,arch,placement")
    assert len(lines) == 2


def test_optimize_with_coupling_file(routing_file, tmp_path, capsys):
    arch = tmp_path / "line.graph"
    arch.write_text("qubits 3\n0 1\n1 2\n")
    assert main(["optimize", "--arch", f"@{arch}", "--in", str(routing_file)]) == 0
    report = json.loads(capsys.readouterr().out)
    assert report["arch"] == "line"
    assert report["final"]["gates"] == 2


def test_optimize_missing_file_exits_one(capsys):
    assert main(["optimize", "--arch", "qx2", "--in", "/nonexistent.qasm"]) == 1


def test_optimize_unknown_arch_exits_one(capsys):
    assert main(["optimize", "--arch", "qx9", "--in", "x.qasm"]) == 1
    assert "qx9" in capsys.readouterr().err


def test_simplify_command(tmp_path, capsys):
    src = tmp_path / "c.qasm"
    src.write_text("qreg q[1];\nh q[0];\nh q[0];\nt q[0];\n")
    out = tmp_path / "out.qasm"
    assert main(["simplify", "--in", str(src), "--out", str(out), "--trace"]) == 0
    assert "cancel-hh" in capsys.readouterr().out
    assert parse(out.read_text()).gates == parse("qreg q[1]; t q[0];").gates


def test_verify_reflexive_through_pipeline(routing_file, tmp_path, capsys):
    mapped = tmp_path / "mapped.qasm"
    assert main(["optimize", "--arch", "qx2", "--in", str(routing_file), "--out", str(mapped)]) == 0
    report = json.loads(capsys.readouterr().out)
    placement = ",".join(str(p) for p in report["placement"])
    code = main(["verify", str(routing_file), str(mapped), "--placement", placement])
    assert code == 0
    assert "equivalent" in capsys.readouterr().out


def test_verify_detects_mismatch(tmp_path, capsys):
    a = tmp_path / "a.qasm"
    b = tmp_path / "b.qasm"
    a.write_text("qreg q[1]; h q[0];")
    b.write_text("qreg q[1]; x q[0];")
    assert main(["verify", str(a), str(b)]) == 2
    assert "NOT equivalent" in capsys.readouterr().out


def test_verify_random_self_check(capsys):
    code = main(
        ["verify", "--random", "5", "--arch", "qx4", "--qubits", "3", "--gates", "10", "--seed", "1"]
    )
    assert code == 0
    assert "5/5" in capsys.readouterr().out


def test_verify_needs_two_files(capsys):
    assert main(["verify", "one.qasm"]) == 1


def test_mermin_command(tmp_path, capsys):
    xxy = tmp_path / "xxy.probs"
    yyy = tmp_path / "yyy.probs"
    xxy.write_text(data_text("xxy_optimized_8192.probs"))
    yyy.write_text(data_text("yyy_optimized_8192.probs"))
    assert main(["mermin", "--xxy", str(xxy), "--yyy", str(yyy)]) == 0
    out = capsys.readouterr().out
    assert "m3 = 3.126" in out
    assert "classical bound = 2" in out
    assert "quantum bound = 4" in out


def test_fidelity_command(tmp_path, capsys):
    a = tmp_path / "a.dm"
    b = tmp_path / "b.dm"
    a.write_text(data_text("xxy_ideal.dm"))
    b.write_text(data_text("xxy_optimized_tomo.dm"))
    assert main(["fidelity", "--a", str(a), "--b", str(b)]) == 0
    out = capsys.readouterr().out
    assert out.startswith("fidelity = ")
    assert float(out.split("=")[1]) == pytest.approx(0.90, abs=0.03)


def test_table_dump(capsys):
    assert main(["table", "dump", "--arch", "qx4"]) == 0
    out = capsys.readouterr().out
    assert out.count("cnot q[") == 20
    assert "gates=1" in out


def test_table_without_action_exits_one():
    assert main(["table"]) == 1


def _write_bench_dir(tmp_path):
    d = tmp_path / "bench"
    d.mkdir()
    (d / "routing_example.qasm").write_text(ROUTING)
    (d / "pair.qasm").write_text(emit(Circuit(2, (cnot(0, 1), cnot(0, 1)))))
    return d


def test_bench_csv_output(tmp_path, capsys):
    d = _write_bench_dir(tmp_path)
    assert main(["bench", str(d), "--arch", "qx2", "--format", "csv"]) == 0
    lines = capsys.readouterr().out.strip().splitlines()
    assert lines[0].startswith("name,qubits,gates_in")
    assert len(lines) == 3
    # Sorted by descending gate reduction: the canceling pair tops the list.
    assert lines[1].startswith("pair,")
    assert lines[1].endswith("true")


def test_bench_markdown_output(tmp_path, capsys):
    d = _write_bench_dir(tmp_path)
    assert main(["bench", str(d), "--arch", "qx4", "--format", "markdown"]) == 0
    out = capsys.readouterr().out
    assert out.startswith("| Name |")
    assert "| yes |" in out


def test_bench_empty_directory_errors(tmp_path, capsys):
    d = tmp_path / "empty"
    d.mkdir()
    assert main(["bench", str(d), "--arch", "qx2"]) == 1


def test_bench_keep_going_with_bad_file(tmp_path, capsys):
    d = _write_bench_dir(tmp_path)
    (d / "broken.qasm").write_text("qreg q[2]; rx q[0];")
    assert main(["bench", str(d), "--arch", "qx2"]) == 1
    capsys.readouterr()
    assert main(["bench", str(d), "--arch", "qx2", "--keep-going"]) == 0
    out = capsys.readouterr().out
    assert "broken,error" in out


def test_bench_rows_reparse_and_reverify(tmp_path, qx2_table):
    d = _write_bench_dir(tmp_path)
    rows = bench_directory(d, qx2_table)
    assert all(r.verified for r in rows)
    csv = render_csv(rows)
    md = render_markdown(rows)
    assert csv.count("\n") == len(rows) + 1
    assert md.count("\n") == len(rows) + 2
