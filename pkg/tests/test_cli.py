import json
import os
import subprocess
import sys

import pytest

from sigmaroots import Quiver, UGraph
from sigmaroots.cli import main

KRON_INLINE = "vertices 2; arrow 1 2 2"
A2_INLINE = "vertices 2; arrow 1 2"
JORDAN_INLINE = "vertices 1; arrow 1 1"
TWO_LOOP_INLINE = "vertices 1; arrow 1 1 2"


def run_cli(argv, capsys):
    code = main(argv)
    captured = capsys.readouterr()
    return code, captured.out, captured.err


def test_sigma_command(capsys):
    code, out, err = run_cli(
        ["sigma", "--quiver-inline", KRON_INLINE, "--lambda", "0,0", "--bound", "2,2"],
        capsys,
    )
    assert code == 0 and err == ""
    assert out.splitlines() == ["(0,1)", "(1,0)", "(1,1)"]


def test_in_sigma_blocked(capsys):
    code, out, _ = run_cli(
        ["in-sigma", "--quiver-inline", A2_INLINE, "--lambda", "0,0", "--alpha", "1,1"],
        capsys,
    )
    assert code == 0
    assert out == "not a member; blocked by (0,1)+(1,0)\n"


def test_in_sigma_member_with_oracle(capsys):
    code, out, _ = run_cli(
        ["in-sigma", "--quiver-inline", KRON_INLINE, "--alpha", "1,1", "--oracle"],
        capsys,
    )
    assert code == 0
    assert out.splitlines() == ["member", "oracle: agree"]


def test_p_command(capsys):
    code, out, _ = run_cli(["p", "--quiver-inline", JORDAN_INLINE, "--alpha", "1"], capsys)
    assert code == 0 and out == "1\n"


def test_roots_command_json_round_trip(capsys):
    code, out, _ = run_cli(
        ["roots", "--quiver-inline", KRON_INLINE, "--bound", "2,2", "--json"], capsys
    )
    assert code == 0
    payload = json.loads(out)
    assert {tuple(r["vector"]) for r in payload["roots"] if r["class"] == "imaginary"} == {
        (1, 1),
        (2, 2),
    }


def test_is_root_command(capsys):
    code, out, _ = run_cli(
        ["is-root", "--quiver-inline", A2_INLINE, "--alpha", "2,1", "--oracle"], capsys
    )
    assert code == 0 and out.splitlines()[0] == "not a root"


def test_seeds_command(capsys):
    code, out, _ = run_cli(
        ["seeds", "--quiver-inline", KRON_INLINE, "--lambda", "1,-1", "--bound", "3,3"],
        capsys,
    )
    assert code == 0 and out == "(1,1)\n"


def test_local_graph_command(capsys):
    code, out, _ = run_cli(
        ["local-graph", "--quiver-inline", KRON_INLINE, "--rep-type", "(1,1,0);(1,0,1)"],
        capsys,
    )
    assert code == 0
    assert out.splitlines() == ["vertices 2", "loops 0 0", "edge 1 2 2"]


def test_local_graph_json_reparses(capsys):
    code, out, _ = run_cli(
        [
            "local-graph",
            "--quiver-inline",
            KRON_INLINE,
            "--rep-type",
            "(1,1,0);(1,0,1)",
            "--json",
        ],
        capsys,
    )
    assert code == 0
    graph = UGraph.from_json(json.loads(out)["graph"])
    assert graph.edge(0, 1) == 2


def test_tame_check_command(capsys):
    inline = json.dumps({"vertices": 2, "edges": [[1, 2, 2]], "loops": [0, 0]})
    code, out, _ = run_cli(
        ["tame-check", "--graph-inline", inline, "--alpha", "1,1"], capsys
    )
    assert code == 0 and out == "contains A~1: 1->1 2->2\n"
    code, out, _ = run_cli(
        ["tame-check", "--graph-inline", inline, "--alpha", "1,0"], capsys
    )
    assert code == 0 and out == "none\n"


def test_genetic_command(capsys):
    code, out, _ = run_cli(
        ["genetic", "--quiver-inline", TWO_LOOP_INLINE, "--bound", "3", "--oracle"],
        capsys,
    )
    assert code == 0
    lines = out.splitlines()
    assert lines[0] == "(1) seed"
    assert lines[1].startswith("(2) depth 1 via A~1")
    assert lines[-1].startswith("oracle: certificates revalidate")


def test_irred_check_command(capsys):
    code, out, _ = run_cli(
        ["irred-check", "--quiver-inline", KRON_INLINE, "--alpha", "2,2"], capsys
    )
    assert code == 0 and out == "false; failing type (2,1,1)\n"


def test_compare_command(capsys):
    code, out, _ = run_cli(
        ["compare", "--quiver-inline", KRON_INLINE, "--bound", "2,2"], capsys
    )
    assert code == 0
    assert "discrepancies: none" in out


def test_compare_json_records(capsys):
    code, out, _ = run_cli(
        ["compare", "--quiver-inline", KRON_INLINE, "--bound", "2,2", "--json"], capsys
    )
    assert code == 0
    payload = json.loads(out)
    assert payload["sigma"] == payload["genetic"] == payload["irreducible"]
    assert payload["discrepancies"] == []
    assert len(payload["records"]) == 8


def test_quiver_file_and_json_file(tmp_path, capsys):
    path = tmp_path / "kron.q"
    path.write_text("vertices 2\narrow 1 2 2\n", encoding="utf-8")
    code, out, _ = run_cli(["p", "--quiver", str(path), "--alpha", "1,1"], capsys)
    assert code == 0 and out == "1\n"
    jpath = tmp_path / "kron.json"
    jpath.write_text(json.dumps(Quiver([[0, 2], [0, 0]]).to_json()), encoding="utf-8")
    code, out, _ = run_cli(["p", "--quiver", str(jpath), "--alpha", "1,1"], capsys)
    assert code == 0 and out == "1\n"


def test_exit_codes(tmp_path, capsys):
    code, _, err = run_cli(["p", "--quiver-inline", "vertices x", "--alpha", "1"], capsys)
    assert code == 2 and err != ""
    code, _, err = run_cli(["p", "--quiver", str(tmp_path / "missing.q"), "--alpha", "1"], capsys)
    assert code == 2
    code, _, err = run_cli(
        ["in-sigma", "--quiver-inline", A2_INLINE, "--alpha", "0,0"], capsys
    )
    assert code == 3
    code, _, err = run_cli(
        ["genetic", "--quiver-inline", KRON_INLINE, "--bound", "3,3", "--budget", "4"],
        capsys,
    )
    assert code == 4
    code, _, err = run_cli(
        ["irred-check", "--quiver-inline", KRON_INLINE, "--alpha", "2,2", "--budget", "3"],
        capsys,
    )
    assert code == 4


def test_lambda_defaults_to_zero(capsys):
    code_default, out_default, _ = run_cli(
        ["sigma", "--quiver-inline", KRON_INLINE, "--bound", "2,2"], capsys
    )
    code_explicit, out_explicit, _ = run_cli(
        ["sigma", "--quiver-inline", KRON_INLINE, "--lambda", "0,0", "--bound", "2,2"],
        capsys,
    )
    assert code_default == code_explicit == 0
    assert out_default == out_explicit


def test_uniform_bound(capsys):
    _, out_uniform, _ = run_cli(
        ["sigma", "--quiver-inline", KRON_INLINE, "--bound", "2"], capsys
    )
    _, out_full, _ = run_cli(
        ["sigma", "--quiver-inline", KRON_INLINE, "--bound", "2,2"], capsys
    )
    assert out_uniform == out_full


def test_rational_lambda(capsys):
    code, out, _ = run_cli(
        [
            "sigma",
            "--quiver-inline",
            KRON_INLINE,
            "--lambda",
            "1/2,-1/2",
            "--bound",
            "3,3",
        ],
        capsys,
    )
    assert code == 0
    assert out.splitlines() == ["(1,1)"]


def test_subprocess_determinism_smoke():
    cmd = [
        sys.executable,
        "-m",
        "sigmaroots",
        "compare",
        "--quiver-inline",
        KRON_INLINE,
        "--bound",
        "2,2",
        "--json",
    ]
    env1 = dict(os.environ, SIGMA_ROOTS_THREADS="1")
    env4 = dict(os.environ, SIGMA_ROOTS_THREADS="4")
    r1 = subprocess.run(cmd, capture_output=True, env=env1)
    r2 = subprocess.run(cmd, capture_output=True, env=env4)
    assert r1.returncode == r2.returncode == 0
    assert r1.stdout == r2.stdout and r1.stderr == r2.stderr
