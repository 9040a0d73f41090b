import subprocess
import sys
from pathlib import Path

import pytest

from hopfpseudo.cli import main

DEMOS = Path(__file__).resolve().parent.parent / "demos"
VIRASORO = DEMOS / "virasoro.alg"
Z2 = DEMOS / "two_generator_z2.alg"
T2 = DEMOS / "upper_triangular.alg"


def run(capsys, *argv):
    code = main([str(a) for a in argv])
    out, err = capsys.readouterr()
    return code, out, err


@pytest.mark.parametrize(
    "path,command",
    [
        (VIRASORO, "check"),
        (VIRASORO, "annihilate"),
        (VIRASORO, "conformal"),
        (Z2, "check"),
        (Z2, "derive"),
        (Z2, "annihilate"),
        (T2, "check"),
        (T2, "derive"),
    ],
)
def test_demo_files_pass(capsys, path, command):
    code, out, err = run(capsys, command, path)
    assert code == 0, out + err
    assert out.startswith(f"hopfpseudo {command} {path}\n")
    assert out.endswith("verdict: PASS\n")


def test_classify_reports_the_constant_family(capsys):
    code, out, _ = run(capsys, "classify", "--kind", "averaging", "--cap", "3", VIRASORO)
    assert code == 0
    assert "solutions: {c·1}" in out
    assert out.count("verdict:") == 1


def test_classify_with_weight(capsys):
    code, out, _ = run(capsys, "classify", "--kind", "reynolds", "--weight", "2", "--cap", "2", VIRASORO)
    assert code == 0
    assert "solutions: {0, -1/2}" in out


def test_conformal_lists_the_w1_brackets(capsys):
    _, out, _ = run(capsys, "conformal", VIRASORO)
    assert "[e1 x[1] e1] = (-d1) e1" in out
    assert "[e1 x[d1] e1] = (-2) e1" in out


def test_corrupted_table_fails_with_residuals(capsys, tmp_path):
    bad = tmp_path / "bad.alg"
    bad.write_text(VIRASORO.read_text().replace("d1 (x) 1 - 1 (x) d1", "d1 (x) 1 + 1 (x) d1"))
    code, out, _ = run(capsys, "check", bad)
    assert code == 1
    assert "failure" in out and out.endswith("verdict: FAIL\n")


def test_wrong_operator_claim_fails(capsys, tmp_path):
    bad = tmp_path / "bad.alg"
    bad.write_text(VIRASORO.read_text().replace('matrix = [["-1/2"]]', 'matrix = [["1/2"]]'))
    code, out, _ = run(capsys, "check", bad)
    assert code == 1
    assert "[FAIL] operator R" in out


@pytest.mark.parametrize(
    "argv,message",
    [
        (["check", "EMPTY"], "missing hopf section"),
        (["check", "MISSING"], "No such file"),
        (["classify", "--kind", "jordan", VIRASORO], "jordan"),
        (["classify", "--kind", "reynolds", VIRASORO], "weight"),
        (["classify", "--kind", "averaging", Z2], "rank-one"),
        (["conformal", T2], "associative"),
        (["derive", "AVERAGING_ONLY"], "no claimed operator kind"),
        (["check", "--weight", "x", VIRASORO], ""),
        (["bake", VIRASORO], ""),
    ],
)
def test_usage_and_parse_errors(capsys, tmp_path, argv, message):
    files = {"EMPTY": "", "AVERAGING_ONLY": VIRASORO.read_text().replace('"averaging", "nijenhuis"', '"averaging"')}
    for name, text in files.items():
        (tmp_path / name).write_text(text)
    files["MISSING"] = None
    argv = [str(tmp_path / a) if a in files else a for a in argv]
    code, _, err = run(capsys, *argv)
    assert code == 2
    assert message in err


UNDECIDED = """
[hopf]
kind = "group"
order = 2

[pseudoalgebra]
rank = 2
flavor = "associative"

[[pseudoalgebra.product]]
left = 1
right = 1
result = 1
coefficient = "1 (x) 1"

[[pseudoalgebra.product]]
left = 2
right = 2
result = 2
coefficient = "1 (x) 1"

[[operator]]
name = "Z"
matrix = [["0", "0"], ["0", "0"]]
kinds = ["rota_baxter(0)"]

[dual]
xi = "zero"
"""


def test_undecided_exit_code(capsys, tmp_path):
    path = tmp_path / "rb.alg"
    path.write_text(UNDECIDED)
    code, out, _ = run(capsys, "annihilate", path)
    assert code == 3
    assert out.endswith("verdict: UNDECIDED\n")
    assert run(capsys, "check", path)[0] == 0


def test_output_is_deterministic_and_parallel_safe(capsys, tmp_path):
    first = run(capsys, "check", VIRASORO)[1]
    assert run(capsys, "check", VIRASORO)[1] == first
    assert run(capsys, "check", "--parallel", "3", VIRASORO)[1] == first
    serial = run(capsys, "derive", Z2)[1]
    assert run(capsys, "derive", "--parallel", "2", Z2)[1] == serial


def test_report_file_matches_stdout(capsys, tmp_path):
    report = tmp_path / "out.txt"
    code, out, _ = run(capsys, "annihilate", "--report", report, VIRASORO)
    assert code == 0
    assert report.read_text(encoding="utf-8") == out


def test_w1_deforms_by_its_nijenhuis_operator(capsys):
    code, out, _ = run(capsys, "derive", VIRASORO)
    assert code == 0
    assert "derive lie_deform_nijenhuis from T (nijenhuis)" in out


def test_derive_kind_filter(capsys):
    code, out, _ = run(capsys, "derive", "--kind", "reynolds_double", Z2)
    assert code == 0
    assert "derive reynolds_double from R" in out
    assert "lie_from_averaging" not in out


def test_module_entry_point():
    proc = subprocess.run(
        [sys.executable, "-m", "hopfpseudo", "check", str(VIRASORO)],
        capture_output=True,
        text=True,
        check=False,
    )
    assert proc.returncode == 0
    assert proc.stdout.endswith("verdict: PASS\n")
