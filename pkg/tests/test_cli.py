import io
import json
import subprocess
import sys

import pytest

from combradii.cli import run


def capture(argv):
    out = io.StringIO()
    code = run(argv, out=out)
    return code, out.getvalue()


def test_radius_table_example():
    code, text = capture(["radius", "--class", "coa", "--A", "2", "--mode", "convexity",
                          "--n", "1", "--alpha", "0"])
    assert code == 0
    assert "radius = 0.267949192431" in text
    assert "status = found" in text


def test_radius_json_is_auditable():
    code, text = capture(["radius", "--class", "sp", "--p", "0.5", "--mode", "concavity",
                          "--n", "1", "--alpha", "0", "--format", "json"])
    assert code == 0
    data = json.loads(text)
    assert data["status"] == "found"
    assert data["variant"] == "as-stated"
    assert data["bracket"] == [0.0, 0.5]
    assert len(data["poly"]) == 7
    assert data["radius"] == pytest.approx(0.07615332004369502, abs=1e-11)
    # the disagreeing derived-coefficient root is surfaced, not hidden
    assert data["alt_variant_radius"] == pytest.approx(0.09871671940005775, abs=1e-11)
    assert data["variant_gap"] > 1e-6


def test_radius_csv_header_and_digits():
    code, text = capture(["radius", "--class", "coa", "--A", "2", "--mode", "convexity",
                          "--n", "1", "--alpha", "0", "--format", "csv"])
    assert code == 0
    lines = text.strip().split("\n")
    assert lines[0].startswith("class,mode,n,alphas,")
    cells = lines[1].split(",")
    value = cells[lines[0].split(",").index("radius")]
    assert len(value.replace(".", "").replace("-", "").lstrip("0")) == 15  # 15 significant digits
    assert float(value) == pytest.approx(0.2679491924311227, abs=1e-10)


def test_as_stated_no_root_serializes_cleanly():
    # at p=0.8, n=1, alpha=0 the as-printed convexity quartic stays positive
    # on (0, p): the CLI reports the missing root instead of inventing one,
    # and the JSON stays strict (null, not NaN)
    code, text = capture(["radius", "--class", "sp", "--p", "0.8", "--mode", "convexity",
                          "--n", "1", "--alpha", "0", "--variant", "as-stated",
                          "--format", "json"])
    assert code == 0
    data = json.loads(text)
    assert data["status"] == "no-root-in-bracket"
    assert data["radius"] is None
    assert data["alt_variant_radius"] is not None  # the derived form still roots


def test_univalence_radius_via_cli():
    code, text = capture(["radius", "--class", "sp", "--p", "0.5", "--mode", "univalence",
                          "--n", "1", "--alpha", "0", "--format", "json"])
    assert code == 0
    data = json.loads(text)
    assert data["poly"] is None
    assert data["radius"] == pytest.approx(0.2557026958153417, abs=1e-12)


def test_sweep_csv_rows_and_monotonicity():
    code, text = capture(["sweep", "--class", "s", "--mode", "concavity", "--A", "2",
                          "--n", "1", "--axis", "alpha1", "--range", "0:3.0:25",
                          "--format", "csv"])
    assert code == 0
    lines = text.strip().split("\n")
    assert lines[0] == "axis,value,radius,status"
    assert len(lines) == 26
    radii = [float(line.split(",")[2]) for line in lines[1:]]
    assert all(x > y for x, y in zip(radii, radii[1:]))


def test_sweep_json():
    code, text = capture(["sweep", "--class", "coa", "--mode", "convexity", "--A", "1.5",
                          "--n", "1", "--axis", "A", "--range", "1.1:2.0:5",
                          "--format", "json"])
    assert code == 0
    rows = json.loads(text)
    assert len(rows) == 5
    assert rows[0]["axis"] == "A"
    assert rows[0]["value"] == 1.1
    assert rows[-1]["value"] == 2.0


def test_sweep_axis_errors():
    code, _ = capture(["sweep", "--class", "coa", "--mode", "convexity", "--A", "1.5",
                       "--n", "1", "--axis", "alpha2", "--range", "0:1:5"])
    assert code == 2
    code, _ = capture(["sweep", "--class", "coa", "--mode", "convexity", "--A", "1.5",
                       "--n", "1", "--axis", "alpha1", "--range", "0:1:1"])
    assert code == 2
    code, _ = capture(["sweep", "--class", "coa", "--mode", "convexity", "--A", "1.5",
                       "--n", "1", "--axis", "bogus", "--range", "0:1:5"])
    assert code == 2


def test_verify_cli_pass():
    code, text = capture(["verify", "--class", "coa", "--A", "2", "--mode", "convexity",
                          "--n", "1", "--alpha", "0"])
    assert code == 0
    assert "passed = True" in text


def test_verify_cli_univalence_is_usage_error():
    code, _ = capture(["verify", "--class", "sp", "--p", "0.5", "--mode", "univalence",
                       "--n", "1", "--alpha", "0"])
    assert code == 2


def test_lemma_cli():
    code, text = capture(["lemma", "--trials", "2000", "--seed", "7"])
    assert code == 0
    assert text.rstrip().endswith("violations: 0")
    assert "weighted-sum bounds: trials=2000 violations=0" in text


def test_usage_errors_exit_2():
    code, _ = capture(["radius", "--class", "s", "--mode", "convexity", "--n", "1", "--alpha", "0"])
    assert code == 2
    code, _ = capture(["radius", "--class", "s", "--mode", "concavity", "--n", "1",
                       "--alpha", "3.2", "--A", "2"])
    assert code == 2  # alpha outside [0, pi)
    code, _ = capture(["radius", "--class", "bogus", "--mode", "convexity", "--n", "1", "--alpha", "0"])
    assert code == 2
    code, _ = capture(["nonsense"])
    assert code == 2


def test_angle_error_names_open_bound(capsys):
    code = run(["radius", "--class", "s", "--mode", "concavity", "--n", "1",
                "--alpha", "3.2", "--A", "2"], out=io.StringIO())
    assert code == 2
    assert "[0, pi)" in capsys.readouterr().err


DOCUMENTED = [
    ["radius", "--class", "coa", "--A", "2", "--mode", "convexity", "--n", "1", "--alpha", "0"],
    ["radius", "--class", "sp", "--p", "0.5", "--mode", "concavity", "--n", "1",
     "--alpha", "0", "--format", "json"],
    ["sweep", "--class", "s", "--mode", "concavity", "--A", "2", "--n", "1",
     "--axis", "alpha1", "--range", "0:3.0:25", "--format", "csv"],
    ["lemma", "--trials", "2000", "--seed", "7"],
    ["verify", "--class", "coa", "--A", "2", "--mode", "convexity", "--n", "1", "--alpha", "0"],
]


@pytest.mark.parametrize("argv", DOCUMENTED, ids=lambda a: a[0])
def test_output_determinism_in_process(argv):
    first = capture(argv)
    second = capture(argv)
    assert first == second


def test_output_determinism_subprocess():
    cmd = [sys.executable, "-m", "combradii", "radius", "--class", "coa", "--A", "2",
           "--mode", "convexity", "--n", "1", "--alpha", "0", "--format", "json"]
    a = subprocess.run(cmd, capture_output=True)
    b = subprocess.run(cmd, capture_output=True)
    assert a.returncode == 0
    assert a.stdout == b.stdout
