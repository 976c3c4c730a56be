import json
import subprocess
import sys

import pytest

from aktangent.cli import main


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


def test_count_tangent(capsys):
    assert run(capsys, "count", "tangent", "--d", "3", "--profile", "A2")[:2] == (0, "60\n")
    assert run(capsys, "count", "tangent", "--d", "3", "--profile", "A2", "--recursive")[:2] == (0, "60\n")
    code, out, err = run(capsys, "count", "tangent", "--d", "2", "--profile", "A1")
    assert (code, out) == (0, "0\n") and "below d_min" in err


def test_count_tangent_json(capsys):
    code, out, _ = run(capsys, "--format", "json", "count", "tangent", "--d", "4", "--profile", "A1^3")
    data = json.loads(out)
    assert data["value"] == 14184 and data["method"] == "closed-form" and data["valid"] is False


def test_count_tangent_with_table(capsys, tmp_path):
    f = tmp_path / "t.txt"
    f.write_text("N d=6 profile=A2,A3 value=100\nNL d=6 profile=A2,A3 cond=A2 value=1\n"
                 "NL d=6 profile=A2,A3 cond=A3 value=2\n")
    code, out, _ = run(capsys, "count", "tangent", "--d", "6", "--profile", "A2,A3", "--table", str(f))
    assert (code, out) == (0, f"{10 * 100 - 3 - 8}\n")
    code, out, _ = run(capsys, "--table", str(f), "count", "tangent", "--d", "6", "--profile", "A2,A3")
    assert out == "989\n"


def test_count_missing_entry(capsys):
    code, _, err = run(capsys, "count", "tangent", "--d", "5", "--profile", "A2,A3")
    assert code == 1 and "missing table entry" in err


def test_count_severi(capsys):
    assert run(capsys, "count", "severi", "--d", "4", "--delta", "3")[:2] == (0, "675\n")
    assert run(capsys, "count", "severi", "--d", "4", "--delta", "3", "--tangent")[:2] == (0, "2364\n")


def test_classify(capsys):
    code, out, _ = run(capsys, "classify", "--poly", "y^2+x^3", "--point", "0,0", "--max-k", "5")
    assert code == 0 and out.splitlines()[0] == "A2"
    code, out, _ = run(capsys, "classify", "--poly", "(y-1)^2+(x-2)^4", "--point", "2,1")
    assert out.splitlines()[0] == "A3"
    code, out, _ = run(capsys, "--format", "json", "classify", "--poly", "x^3+y^3")
    assert json.loads(out)["type"] == "degenerate"
    code, _, err = run(capsys, "classify", "--poly", "x+1")
    assert code == 1 and "not on the curve" in err


@pytest.mark.parametrize("argv", [
    ["count", "tangent", "--d", "3", "--profile", "B2"],
    ["classify", "--poly", "x^"],
    ["classify", "--poly", "x", "--point", "1"],
    ["count"],
    ["frobnicate"],
])
def test_usage_errors_exit_2(capsys, argv):
    with pytest.raises(SystemExit) as exc:
        main(argv)
    assert exc.value.code == 2
    capsys.readouterr()


def test_verify_commands(capsys, tmp_path):
    code, out, _ = run(capsys, "verify", "pencil", "--d", "3", "--trials", "2", "--seed", "1")
    assert code == 0 and out.count("PASS") == 2
    code, out, _ = run(capsys, "verify", "kazaryan")
    assert code == 0 and "2256" in out
    code, out, _ = run(capsys, "verify", "ch-vs-closed", "--delta-max", "2", "--extra", "1")
    assert code == 0 and "FAIL" not in out
    bad = tmp_path / "bad.txt"
    bad.write_text("N d=4 profile=A1 value=27\nNL d=4 profile=A1 cond=A1 value=6\n")
    code, out, _ = run(capsys, "verify", "table", str(bad))
    assert code == 1 and out.startswith("FAIL")


def test_table_dump_roundtrip(capsys, tmp_path):
    code, out, _ = run(capsys, "table")
    f = tmp_path / "dump.txt"
    f.write_text(out)
    code2, out2, _ = run(capsys, "table", str(f))
    assert code == code2 == 0 and out == out2


def test_module_entry_point():
    res = subprocess.run([sys.executable, "-m", "aktangent", "count", "tangent", "--d", "3", "--profile", "A1"],
                         capture_output=True, text=True, check=False)
    assert res.returncode == 0 and res.stdout == "36\n"
