"""CLI tests driving main() against the in-process service."""

import json
import shutil
import subprocess

import pytest

from forestrep.cli import main


def run(capsys, *argv: str) -> tuple[int, str, str]:
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


def test_count_text(capsys):
    code, out, err = run(capsys, "count", "--n", "4", "--k", "2")
    assert code == 0
    assert out.strip() == "48"
    assert err == ""


def test_count_json(capsys):
    code, out, _ = run(capsys, "--format", "json", "count", "--n", "4")
    assert code == 0
    assert json.loads(out) == {"n": 4, "k": None, "count": 125}


def test_enumerate_formats(capsys):
    code, out, _ = run(capsys, "enumerate", "--n", "3", "--k", "1")
    assert code == 0
    lines = out.strip().splitlines()
    assert len(lines) == 6
    assert lines[0] == "[0,0,1]"

    code, out, _ = run(capsys, "--format", "json", "enumerate", "--n", "3", "--k", "1")
    items = json.loads(out)
    assert len(items) == 6
    assert items[0] == {"n": 3, "image": [0, 0, 1]}


def test_oduns_output(capsys):
    code, out, _ = run(capsys, "oduns", "--n", "3", "--components", "1")
    assert code == 0
    assert out.strip().splitlines() == ["((()))", "(()())"]

    code, out, _ = run(capsys, "--format", "json", "oduns", "--n", "2")
    shapes = json.loads(out)
    assert [s["encoding"] for s in shapes] == ["(())", "()()"]


def test_character_lines(capsys):
    code, out, _ = run(capsys, "character", "--n", "3", "--k", "2")
    assert code == 0
    assert out.strip().splitlines()[0] == "[1,1,1] 9"


def test_decompose_line_and_json(capsys):
    code, out, _ = run(capsys, "decompose", "--n", "3", "--k", "1")
    assert code == 0
    assert out.strip() == "C_{1,3} = V[3] + V[2,1]^2 + V[1,1,1]"

    code, out, _ = run(capsys, "--format", "json", "decompose", "--n", "3", "--k", "1")
    terms = json.loads(out)
    assert {"partition": [2, 1], "mult": 2} in terms


def test_decompose_odun_report(capsys):
    code, out, _ = run(capsys, "decompose-odun", "--odun", "(()())")
    assert code == 0
    lines = out.strip().splitlines()
    assert lines[0] == "odun (()())"
    assert "dimension 3" in lines
    assert "sign 0" in lines
    assert "blossoming no" in lines


def test_table_lines(capsys):
    code, out, _ = run(capsys, "table", "--n", "3")
    assert code == 0
    assert out.strip().splitlines() == [
        "C_{0,3} = V[3]",
        "C_{1,3} = V[3] + V[2,1]^2 + V[1,1,1]",
        "C_{2,3} = V[3]^2 + V[2,1]^3 + V[1,1,1]",
    ]


def test_sign_divergence_marker(capsys):
    code, out, _ = run(capsys, "sign", "--n", "6")
    assert code == 0
    assert out.strip() == "total 16 (closed form 16)"

    code, out, _ = run(capsys, "sign", "--n", "7")
    assert code == 0
    assert out.strip() == "total 34 (closed form 32) [diverges from the closed form]"

    code, out, _ = run(capsys, "sign", "--n", "5", "--per-stratum")
    lines = out.strip().splitlines()
    assert "k=4 4" in lines
    assert lines[-1] == "top stratum 4 (closed form 4)"


def test_blossoming_divergence_marker(capsys):
    code, out, _ = run(capsys, "blossoming", "--n", "7")
    assert code == 0
    assert out.strip() == "count 34 (closed form 32) [diverges from the closed form]"

    code, out, _ = run(capsys, "blossoming", "--n", "4", "--list")
    lines = out.strip().splitlines()
    assert lines[0] == "count 4 (closed form 4)"
    assert len(lines) == 5


def test_rooks_output(capsys):
    code, out, _ = run(capsys, "rooks", "--n", "4", "--parts", "2")
    assert code == 0
    lines = out.strip().splitlines()
    assert lines[0].startswith("Z_{2,4} = ")
    assert lines[-1] == "shapes 2, sign count 2"


def test_verify_exit_code(capsys):
    code, out, _ = run(capsys, "verify", "--max-n", "3")
    assert code == 0
    assert out.strip().endswith("overall: PASS")


def test_bad_usage_exit_codes(capsys):
    # argparse rejects the unknown subcommand
    with pytest.raises(SystemExit) as exc:
        main(["frobnicate"])
    assert exc.value.code == 2
    capsys.readouterr()

    # service-side validation: 422 and 400 both map to exit 2
    code, _, err = run(capsys, "count", "--n", "0")
    assert code == 2
    assert err.startswith("error:")

    code, _, err = run(capsys, "enumerate", "--n", "9", "--k", "0")
    assert code == 2
    assert "force" in err


def test_console_script_installed():
    exe = shutil.which("forestrep")
    assert exe is not None
    proc = subprocess.run(
        [exe, "count", "--n", "3", "--k", "1"], capture_output=True, text=True, timeout=120
    )
    assert proc.returncode == 0
    assert proc.stdout.strip() == "6"
