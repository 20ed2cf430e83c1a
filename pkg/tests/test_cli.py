"""Command-line interface: formats, flags, exit codes."""

import json

from hamq.cli import main
from hamq.families import build_S
from hamq.graph import complete, cycle, emit_graph6, path_graph


def run_cli(capsys, args, stdin=None, monkeypatch=None):
    if stdin is not None:
        import io
        import sys

        monkeypatch.setattr(sys, "stdin", io.StringIO(stdin))
    code = main(args)
    out = capsys.readouterr()
    return code, out.out, out.err


def test_certify_exit_codes(tmp_path, capsys, monkeypatch):
    code, out, _ = run_cli(capsys, ["certify", "-"], emit_graph6(complete(22)), monkeypatch)
    assert code == 0 and "Ore" in out
    code, out, _ = run_cli(capsys, ["certify", "-"], emit_graph6(cycle(6)), monkeypatch)
    assert code == 1
    code, out, _ = run_cli(
        capsys, ["certify", "-", "--oracle-gate", "0"], emit_graph6(cycle(12)), monkeypatch
    )
    assert code == 2  # oracle gated off, nothing fires


def test_certify_json_schema(capsys, monkeypatch):
    code, out, _ = run_cli(
        capsys, ["certify", "-", "--json"], emit_graph6(build_S(22, 2).graph), monkeypatch
    )
    assert code == 1
    data = json.loads(out)
    assert set(data) == {"outcome", "fired_condition", "parameters", "witnesses", "trace"}
    assert data["outcome"] == "ExceptionalFamily"


def test_certify_edgelist_input(tmp_path, capsys):
    f = tmp_path / "g.txt"
    f.write_text("3 3\n0 1\n1 2\n0 2\n")
    code, out, _ = run_cli(capsys, ["certify", str(f)])
    assert code == 0


def test_spectrum_output(capsys, monkeypatch):
    code, out, _ = run_cli(capsys, ["spectrum", "-"], emit_graph6(complete(10)), monkeypatch)
    assert code == 0
    assert "q_hat    = 18.0" in out
    assert "edge-count upper bound" in out


def test_spectrum_rejects_disconnected(capsys, monkeypatch):
    code, _, err = run_cli(capsys, ["spectrum", "-"],
                           emit_graph6(path_graph(1)), monkeypatch)
    assert code == 4


def test_family_host_single_line(capsys):
    code, out, err = run_cli(capsys, ["family", "S", "--n", "6", "--k", "2"])
    assert code == 0
    lines = out.strip().splitlines()
    assert len(lines) == 1
    from hamq.graph import parse_graph6

    assert parse_graph6(lines[0]) == build_S(6, 2).graph


def test_family_class_enumeration_count(capsys):
    code, out, _ = run_cli(
        capsys,
        ["family", "T", "--n", "9", "--k", "3", "--class", "T1", "--mode", "exhaustive"],
    )
    assert code == 0
    assert len(out.strip().splitlines()) == 22


def test_family_sample_and_sidecar(tmp_path, capsys):
    sidecar = tmp_path / "members.json"
    code, out, _ = run_cli(
        capsys,
        ["family", "S", "--n", "92", "--k", "2", "--class", "S2",
         "--mode", "sample", "--seed", "3", "--count", "5",
         "--sidecar", str(sidecar)],
    )
    assert code == 0
    assert len(out.strip().splitlines()) == 5
    data = json.loads(sidecar.read_text())
    assert len(data) == 5
    assert all(len(entry["deleted"]) == 1 for entry in data)


def test_verify_subcommand(capsys):
    code, out, err = run_cli(capsys, ["verify", "appendix", "--k", "2..12"])
    assert code == 0
    report = json.loads(out)
    assert report["suite"] == "appendix" and report["failures"] == []


def test_verify_with_case_params(capsys):
    code, out, _ = run_cli(
        capsys,
        ["verify", "q-lower", "--k", "3", "--n", "40", "--mode", "exhaustive"],
    )
    assert code == 0
    report = json.loads(out)
    assert report["cases"] == 2 * (1 + 703)


def test_hunt_subcommand(capsys):
    code, out, _ = run_cli(
        capsys, ["hunt", "--n", "7", "--trials", "exhaustive", "--model", "all-connected"]
    )
    assert code == 0
    report = json.loads(out)
    assert report["cases"] == 853 and report["failures"] == []


def test_input_error_exit_code(capsys, monkeypatch):
    code, _, err = run_cli(capsys, ["certify", "-"], "not a graph at all\n", monkeypatch)
    assert code == 4 and "error" in err


def test_certify_pinned_random_regressions(capsys, monkeypatch):
    # sparse random graphs beyond the oracle gate: pinned seed, pinned outcome
    from hamq.rng import SplitMix64, gnp

    g1 = gnp(10, 0.2, SplitMix64(1))  # disconnected at this seed
    code, _, _ = run_cli(capsys, ["certify", "-"], emit_graph6(g1), monkeypatch)
    assert code == 1
    g2 = gnp(10, 0.35, SplitMix64(2))  # 2-connected, nothing fires at this seed
    code, out, _ = run_cli(capsys, ["certify", "-"], emit_graph6(g2), monkeypatch)
    assert code == 2 and "Inconclusive" in out


def test_family_invalid_params_exit_code(capsys):
    code, _, err = run_cli(capsys, ["family", "S", "--n", "6", "--k", "5"])
    assert code == 4 and "error" in err


def test_family_sample_without_count_exit_code(capsys):
    code, _, err = run_cli(
        capsys, ["family", "S", "--n", "9", "--k", "3", "--class", "S1",
                 "--mode", "sample"]
    )
    assert code == 4
