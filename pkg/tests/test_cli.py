"""CLI dispatch: golden outputs, exit codes, and determinism."""

import importlib.util
import pathlib

import pytest

from lcgraph import Report, parse_graph
from lcgraph import cli

ROOT = pathlib.Path(__file__).resolve().parent.parent
FIXTURES = ROOT / "fixtures"
GOLDEN = ROOT / "tests" / "golden"

# the golden files and the commands that produce them live in the
# regeneration script; replay the same table here
_spec = importlib.util.spec_from_file_location(
    "make_goldens", ROOT / "scripts" / "make_goldens.py")
_make_goldens = importlib.util.module_from_spec(_spec)
_spec.loader.exec_module(_make_goldens)
CASES = _make_goldens.CASES


def run_cli(argv, capsys):
    code = cli.main([str(FIXTURES / a) if a.endswith((".ofg", ".fn")) else a
                     for a in argv])
    out = capsys.readouterr()
    return code, out.out, out.err


@pytest.mark.parametrize("name", sorted(CASES))
def test_golden_output(name, capsys):
    code, out, err = run_cli(CASES[name], capsys)
    assert code == 0
    assert err == ""
    assert out == (GOLDEN / name).read_text()


def test_output_is_deterministic(capsys):
    first = run_cli(["spectrum", "--mode", "numeric", "fig1.ofg"], capsys)
    second = run_cli(["spectrum", "--mode", "numeric", "fig1.ofg"], capsys)
    assert first == second


def test_verify_graph_block_round_trips(capsys):
    for fixture in ("fig1.ofg", "fig2.ofg", "k2.ofg", "triangle.ofg"):
        _, out, _ = run_cli(["verify", fixture], capsys)
        lines = out.splitlines()
        start = lines.index("== graph ==") + 1
        end = lines.index("", start)
        reparsed = parse_graph("\n".join(lines[start:end]) + "\n")
        original = parse_graph((FIXTURES / fixture).read_text())
        assert reparsed.vertices == original.vertices
        assert all(u == u2 and v == v2 and w.identical(w2)
                   for (u, v, w), (u2, v2, w2)
                   in zip(reparsed.edges(), original.edges()))


def test_missing_file_exits_2(capsys):
    code, out, err = run_cli(["spectrum", "missing.ofg"], capsys)
    assert code == 2
    assert out == ""
    assert "error:" in err


def test_parse_error_reports_line(tmp_path, capsys):
    bad = tmp_path / "bad.ofg"
    bad.write_text("1 2 1\n1 2\n")
    code, _, err = run_cli(["cheeger", str(bad)], capsys)
    assert code == 2
    assert "line 2" in err


def test_invalid_config_exits_2(capsys):
    assert run_cli(["spectrum", "--trunc", "0", "fig1.ofg"], capsys)[0] == 2
    assert run_cli(["spectrum", "--precision", "32", "fig1.ofg"], capsys)[0] == 2
    with pytest.raises(SystemExit):
        run_cli(["spectrum", "--trunc", "abc", "fig1.ofg"], capsys)


def test_function_on_wrong_vertex_set_exits_2(capsys):
    code, _, err = run_cli(
        ["walk", "triangle.ofg", "--f", "delta1.fn"], capsys)
    assert code == 2
    assert "error:" in err


def test_failed_check_exits_1(monkeypatch, capsys):
    failing = Report(title="forced")
    failing.add("forced", False, "synthetic failure")
    monkeypatch.setattr(cli, "cheeger_inequality_check",
                        lambda g, spec, cut: failing)
    code, out, _ = run_cli(["cheeger", "k2.ofg"], capsys)
    assert code == 1
    assert "FAIL" in out
    code, out, _ = run_cli(["verify", "k2.ofg"], capsys)
    assert code == 1
    assert "CHECKS FAILED" in out


def test_selftest_smoke(capsys):
    code, out, _ = run_cli(["selftest", "--count", "200"], capsys)
    assert code == 0
    assert "PASS" in out
