import io
import json
import re
import shlex
import subprocess
import sys
from fractions import Fraction
from pathlib import Path

import pytest

from kummer.cli import run

README = Path(__file__).resolve().parent.parent / "README.md"


def call(*argv):
    out, err = io.StringIO(), io.StringIO()
    status = run(list(argv), stdout=out, stderr=err)
    return status, out.getvalue(), err.getvalue()


def readme_examples():
    text = README.read_text(encoding="utf-8")
    cases = []
    for block in re.findall(r"```console\n(.*?)```", text, flags=re.S):
        cmd, expected = None, []
        for line in block.splitlines(keepends=True):
            if line.startswith("$ "):
                if cmd:
                    cases.append((cmd, "".join(expected)))
                cmd, expected = line[2:].strip(), []
            else:
                expected.append(line)
        cases.append((cmd, "".join(expected)))
    return cases


EXAMPLES = readme_examples()


def test_readme_has_examples():
    assert len(EXAMPLES) >= 10


@pytest.mark.parametrize("cmd, expected", EXAMPLES, ids=[c for c, _ in EXAMPLES])
def test_readme_example(cmd, expected):
    argv = shlex.split(cmd)
    assert argv[0] == "kummer"
    status, out, _ = call(*argv[1:])
    assert status == 0
    assert out == expected


def test_gaps_example():
    assert call("gaps", "--equation", "y^5 = x^5 - 1", "--place", "1")[:2] == (
        0, "g=6; gaps: 1 2 3 6 7 11\n")


def test_weight_example():
    assert call("weight", "--equation", "y^5 = x^5 - 1", "--place", "1")[:2] == (0, "W(P)=9\n")


def test_missing_spec_file(tmp_path):
    status, out, err = call("genus", "--spec", str(tmp_path / "missing.file"))
    assert status == 2 and out == ""
    assert "cannot read spec file" in err


def test_spec_file(tmp_path):
    path = tmp_path / "c.json"
    path.write_text(json.dumps({"m": 4, "multiplicities": [1, 1, 2]}))
    assert call("genus", "--spec", str(path))[:2] == (0, "g=1\n")
    path.write_text(json.dumps({"equation": "y^2 = x^6 + 1"}))
    assert call("genus", "--spec", str(path))[:2] == (0, "g=2\n")


def test_bad_spec_file(tmp_path):
    path = tmp_path / "c.json"
    path.write_text("{not json")
    status, _, err = call("genus", "--spec", str(path))
    assert status == 1 and "error" in err


@pytest.mark.parametrize("argv", [
    ("genus",),
    ("frobnicate", "--equation", "y^2 = x^3 - 1"),
    ("genus", "--equation", "y^2 = x^3 - 1", "--bogus"),
    ("gaps", "--equation", "y^2 = x^3 - 1"),
    ("gaps", "--equation", "y^2 = x^3 - 1", "--place", "7"),
    ("gaps", "--equation", "y^2 = x^3 - 1", "--place", "north"),
    ("genus", "--equation", "y^2 = x^3 - 1", "--spec", "a.json"),
])
def test_usage_errors(argv, capsys):
    assert call(*argv)[0] == 2


@pytest.mark.parametrize("argv, fragment", [
    (("genus", "--equation", "y^4 = (x-1)^2*(x-2)^2"), "power"),
    (("genus", "--equation", "y^5 = x^2 +"), "position"),
    (("genus", "--equation", "char=5; y^5 = x^3 - 1"), "characteristic"),
    (("weight", "--equation", "y^4 = x*(x-1)*(x-2)^2", "--place", "3"), "totally ramified"),
    (("classify", "--equation", "y^3 = x^4 - 1"), "m = 2"),
    (("maximality", "--equation", "y^4 = x*(x-1)*(x-2)^2", "--q", "6"), "prime power"),
    (("towse", "--m", "3", "--r-min", "2", "--r-max", "9"), "r_min"),
])
def test_domain_errors(argv, fragment):
    status, out, err = call(*argv)
    assert status == 1 and out == ""
    assert fragment in err


def test_kv_format():
    status, out, _ = call("genus", "--equation", "y^5 = x^5 - 1", "--format", "kv")
    assert status == 0
    assert dict(line.split("=", 1) for line in out.splitlines()) == {
        "m": "5", "char": "0", "r": "5", "genus": "6"}


def test_csv_output(tmp_path):
    path = tmp_path / "gaps.csv"
    status, out, _ = call("gaps", "--equation", "y^2 = x^5 + 1", "--place", "inf", "--csv", str(path))
    assert status == 0
    assert path.read_text() == "place,gap\ninf,1\ninf,3\n"


def test_criteria_kv():
    status, out, _ = call("criteria", "--equation", "y^5 = x^5 - 1", "--format", "kv")
    kv = dict(line.split("=", 1) for line in out.splitlines())
    assert status == 0
    assert kv["ugly_ii"] == "true" and kv["m_plus_1_gap.1"] == "true"
    assert kv["conclusion"] == "1 2 3 4 5"


def test_maximality_flags():
    eq = "y^5 = x*(x-1)*(x-2)"
    assert call("maximality", "--equation", eq, "--q", "8")[1] == "verdict: NotMaximal_2q1\n"
    assert call("maximality", "--equation", eq, "--q", "8", "--not-rational")[1] == "verdict: NoObstruction\n"
    assert call("maximality", "--equation", eq, "--q", "8", "--pair", "1", "3")[0] == 0


def test_towse_header_bytes(tmp_path):
    path = tmp_path / "t.csv"
    status, out, _ = call("towse", "--m", "3", "--r-min", "10", "--r-max", "20", "--csv", str(path))
    assert status == 0
    assert path.read_bytes().startswith(b"m,r,g,BW,g3_minus_g,ratio,limit,abs_error\n")
    assert len(path.read_text().splitlines()) == 12


def test_towse_sweep_m3():
    status, out, _ = call("towse", "--m", "3", "--r-min", "10", "--r-max", "1000", "--step", "90")
    rows = [line.split(",") for line in out.splitlines()]
    assert status == 0 and rows[-1][1] == "1000"
    assert float(rows[-1][-1]) < 0.004
    for row in rows[1:]:
        ratio = Fraction(int(row[3]), int(row[4]))
        assert abs(float(ratio) - float(row[5])) < 1e-11
        assert row[6] == "1/3"


def test_towse_m2_flagged():
    status, out, err = call("towse", "--m", "2", "--r-min", "6", "--r-max", "8")
    assert status == 0 and "special case" in err
    assert out.splitlines()[1] == "2,6,2,6,6,1,1/1,0.000000000000"


def test_towse_kv_is_exact():
    status, out, _ = call("towse", "--m", "3", "--r-min", "10", "--r-max", "10", "--format", "kv")
    kv = dict(line.split("=", 1) for line in out.splitlines())
    assert kv["10.ratio"] == "13/40" and kv["10.abs_error"] == "1/120"


def test_verify_oracle_grid():
    status, out, _ = call("verify", "--oracle", "--m-max", "7", "--r-max", "4")
    assert status == 0
    assert out.endswith("; 0 mismatches\n")


def test_help_documents_csv_columns(capsys):
    assert call("towse", "--help")[0] == 0
    assert "m,r,g,BW,g3_minus_g,ratio,limit,abs_error" in capsys.readouterr().out


def test_console_script_entry_point():
    proc = subprocess.run([sys.executable, "-m", "kummer", "weight", "--equation", "y^5 = x^5 - 1",
                           "--place", "1"], capture_output=True, text=True)
    assert proc.returncode == 0 and proc.stdout == "W(P)=9\n"
