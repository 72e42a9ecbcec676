import json
import subprocess
import sys

import pytest

from inertia_kit.cli import main

FAST = ["--budget", "20000"]


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def test_formula(capsys):
    code, out, _ = run(capsys, "formula", "cycle(5)")
    assert code == 0 and out.startswith("T_[3,5]")


def test_formula_json(capsys):
    code, out, _ = run(capsys, "--json", "formula", "star(1,1,1)")
    data = json.loads(out)
    assert data["t_notation"] == "T_[3,4] U T^1_[2,4]"
    assert data["provenance"] == "generalized_star"
    assert [0, 4] in data["points"]


def test_formula_json_after_verb(capsys):
    code, out, _ = run(capsys, "formula", "path(3)", "--json")
    assert json.loads(out)["t_notation"] == "T_[2,3]"


def test_recurse_spec_and_edges(capsys, tmp_path):
    code, out, _ = run(capsys, "recurse", "join(cycle(5), path(3)@1)")
    assert code == 0 and out.strip() == "T_[5,7]"
    f = tmp_path / "g.txt"
    f.write_text("n 4\n0 1\n1 2\n2 3\n")
    code, out, _ = run(capsys, "recurse", "--edges", str(f))
    assert out.strip() == "T_[3,4]"


def test_recurse_unsupported_block(capsys, tmp_path):
    f = tmp_path / "k4.txt"
    f.write_text("n 4\n0 1\n0 2\n0 3\n1 2\n1 3\n2 3\n")
    code, _, err = run(capsys, "recurse", "--edges", str(f))
    assert code == 3 and "Other" in err


def test_formula_join_unsupported(capsys):
    code, _, err = run(capsys, "formula", "join(cycle(5), path(3))")
    assert code == 3


def test_parse_and_usage_errors(capsys):
    code, _, err = run(capsys, "formula", "cyc(3)")
    assert code == 1 and "line 1, col 1" in err
    code, _, _ = run(capsys, "formula", "cycle(2)")
    assert code == 1
    with pytest.raises(SystemExit) as exc:
        main([])
    assert exc.value.code == 1
    with pytest.raises(SystemExit) as exc:
        main(["sample", "path(3)", "--budget", "many"])
    assert exc.value.code == 1


def test_parse_verb(capsys):
    code, out, _ = run(capsys, "parse", "T_[3,4] U T^1_[2,2]")
    assert code == 0
    assert out.splitlines()[0] == "T_[3,4] U T^1_[2,4]"
    assert "10 points" in out


def test_render(capsys, tmp_path):
    svg = tmp_path / "t.svg"
    code, out, _ = run(capsys, "render", "T_[0,1]", "--svg", str(svg))
    assert out.splitlines() == ["• ·", "• •"]
    assert svg.read_text().startswith("<svg")
    code, out, _ = run(capsys, "render", "path(2)")
    assert out.splitlines() == ["• · ·", "• • ·", "· • •"]


def test_sample(capsys):
    code, out, _ = run(capsys, "--json", "sample", "path(3)")
    data = json.loads(out)
    assert code == 0 and data["containment_ok"]
    assert [2, 0] in data["attained"]
    assert data["grid"]["exhaustive"]


def test_sample_custom_grid(capsys):
    code, out, _ = run(capsys, "--json", "sample", "cycle(4)", "--offdiag=1", "--diag=0")
    data = json.loads(out)
    assert data["attained"] == [[1, 1]] and data["grid"]["tested"] == 1


def test_sample_seed_from_env(capsys, monkeypatch):
    monkeypatch.setenv("INERTIA_KIT_SEED", "123")
    code, out, _ = run(capsys, "--json", "sample", "cycle(6)", *FAST)
    assert json.loads(out)["seed"] == 123
    code, out, _ = run(capsys, "--json", "sample", "cycle(6)", *FAST, "--seed", "4")
    assert json.loads(out)["seed"] == 4


def test_verify_cycle(capsys):
    code, out, _ = run(capsys, "verify", "cycle(5)", *FAST)
    assert code == 0
    assert "formula: T_[3,5]" in out and "engine:  T_[3,5]" in out


def test_verify_join(capsys):
    code, out, _ = run(capsys, "--json", "verify", "join(cycle(5), path(3)@1)", *FAST)
    data = json.loads(out)
    assert code == 0 and data["engine"] == "T_[5,7]" and data["ok"]


def test_verify_binary_star_flags_mismatch(capsys):
    spec = "binarystar(nova(cycles=;arms=1,1), nova(cycles=;arms=), w=2)"
    code, out, _ = run(capsys, "--json", "verify", spec)
    data = json.loads(out)
    assert code == 2
    assert data["engine_only"] == [[1, 1]]
    assert data["oracle"]["violations"] == [[1, 1]]
    code, _, _ = run(capsys, "verify", spec, "--corrected")
    assert code == 0


def test_verify_skips_oracle_above_cap(capsys):
    code, out, _ = run(capsys, "verify", "cycle(9)")
    assert code == 0 and "oracle:  skipped" in out


def test_module_entry_point():
    proc = subprocess.run([sys.executable, "-m", "inertia_kit", "formula", "bouquet(3,3)"],
                          capture_output=True, text=True, check=False)
    assert proc.returncode == 0
    assert proc.stdout.startswith("T_[2,5]")
