import json
import subprocess
import sys

import pytest

from roughmap import document
from roughmap.cli import EXIT_BUDGET, EXIT_EXPECTATION, EXIT_INPUT, EXIT_OK, main
from roughmap.propcheck import Instance, evaluate
from conftest import DATA

SEVEN_POINT = str(DATA / "seven_point.json")
THREE_POINT = str(DATA / "three_point.json")

CHECK_F1 = """\
mapping f1, relation R
predecessor-consistent: yes
successor-consistent: no (x2 and x3 share an image but R_s(x2) and R_s(x3) differ at x5)
type-1 consistent: yes
type-2 consistent: no (x3 shares the image of x2 but R_s(x2) and R_s(x3) differ at x5)
"""

CHECK_F2 = """\
mapping f2, relation R
predecessor-consistent: no (x4 and x5 share an image but R_p(x4) and R_p(x5) differ at x2)
successor-consistent: yes
type-1 consistent: no (fiber of x4 meets R_s(x2) but x5 escapes it)
type-2 consistent: yes
"""

CHECK_F3 = """\
mapping f3, relation R
predecessor-consistent: yes
successor-consistent: yes
type-1 consistent: yes
type-2 consistent: yes
"""

INDUCE_FORWARD = """\
forward f1 R: 5 pairs on V
{(y1, y2), (y2, y4), (y2, y5), (y4, y6), (y5, y6)}
"""

INDUCE_INVERSE = """\
inverse f1 f1R: 10 pairs on U
{(x1, x2), (x1, x3), (x2, x4), (x2, x5), (x3, x4), (x3, x5), (x4, x6), (x4, x7), (x5, x6), (x5, x7)}
"""

VERIFY_F354 = """\
law: F3.5.4
statement: claimed: f successor-consistent gives f(upper_R X) >= upper_f(R) f(X)
expectation: falsifiable
budget: n=3, m=2, exhaustive
cases checked: 32768
hypothesis hits: 3200
violations: 540
status: FALSIFIED
first witness:
{
  "universes": {"U": ["u0", "u1", "u2"], "V": ["v0", "v1"]},
  "relations": {"R": {"universe": "U", "pairs": [["u0", "u1"]]}},
  "mappings": {"f": {"domain": "U", "codomain": "V", "map": {"u0": "v0", "u1": "v1", "u2": "v1"}}},
  "sets": {"X": {"universe": "U", "members": ["u2"]}}
}
"""


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


@pytest.mark.parametrize(
    "argv, golden",
    [
        (["check", SEVEN_POINT, "f1", "R"], CHECK_F1),
        (["check", SEVEN_POINT, "f2", "R"], CHECK_F2),
        (["check", SEVEN_POINT, "f3", "R"], CHECK_F3),
        (["induce", SEVEN_POINT, "f1", "R"], INDUCE_FORWARD),
        (["induce", SEVEN_POINT, "f1", "f1R", "--direction", "inverse"], INDUCE_INVERSE),
        (["approx", THREE_POINT, "R", "X", "--operator", "upper"], "upper approximation of X under R\n{}\n"),
        (["approx", SEVEN_POINT, "R", "X"], "lower approximation of X under R\n{x4, x5, x6, x7}\n"),
        (["approx", SEVEN_POINT, "R", "All"], "lower approximation of All under R\n{x1, x2, x3, x4, x5, x6, x7}\n"),
        (["induce", SEVEN_POINT, "f1", "E"], "forward f1 E: 0 pairs on V\n{}\n"),
        (["verify", "F3.5.4"], VERIFY_F354),
    ],
)
def test_plain_goldens(capsys, argv, golden):
    code, out, err = run(capsys, *argv)
    assert code == EXIT_OK
    assert out == golden
    assert err == ""


def test_check_json(capsys):
    code, out, _ = run(capsys, "check", SEVEN_POINT, "f1", "R", "--format", "json")
    data = json.loads(out)
    assert code == EXIT_OK
    assert data["predecessor_consistent"] == {"holds": True}
    assert data["successor_consistent"]["witness"] == {"x": "x2", "y": "x3", "element": "x5"}


def test_induce_and_approx_json(capsys):
    _, out, _ = run(capsys, "induce", SEVEN_POINT, "f1", "R", "--format", "json")
    assert json.loads(out)["pairs"][0] == ["y1", "y2"]
    _, out, _ = run(capsys, "approx", SEVEN_POINT, "R", "X", "--operator", "upper", "--format", "json")
    assert json.loads(out)["members"] == ["x4", "x5"]


def test_verify_valid_law(capsys):
    code, out, _ = run(capsys, "verify", "T3.3", "--n", "3", "--m", "2")
    assert code == EXIT_OK
    assert "violations: 0\nstatus: PASS\n" in out
    assert "first witness" not in out


def test_verify_json(capsys):
    code, out, _ = run(capsys, "falsify", "F3.5.2", "--format", "json")
    data = json.loads(out)
    assert code == EXIT_OK and data["status"] == "FALSIFIED"
    doc = document.from_json(data["first_witness"])
    assert evaluate("F3.5.2", Instance.from_document(doc)).violated


def test_inconclusive_exits_with_expectation_failure(capsys):
    code, out, _ = run(capsys, "verify", "T2.2", "--n", "5", "--sample", "20", "--seed", "0")
    assert code == EXIT_EXPECTATION
    assert "hypothesis hits: 0\n" in out and "status: INCONCLUSIVE" in out


def test_timing_goes_to_stderr(capsys):
    code, out, err = run(capsys, "verify", "T2.1a", "--n", "2", "--timing")
    assert code == EXIT_OK and err.startswith("elapsed: ") and "elapsed" not in out


@pytest.mark.parametrize(
    "argv, fragment",
    [
        (["verify", "T9.9"], "unknown law 'T9.9'"),
        (["falsify", "T3.3"], "not a falsifiable claim"),
        (["check", SEVEN_POINT, "f1", "Nope"], "unknown relation 'Nope'"),
        (["check", SEVEN_POINT, "g", "R"], "unknown mapping 'g'"),
        (["induce", SEVEN_POINT, "f1", "R", "--direction", "inverse"], "not on the codomain"),
        (["approx", SEVEN_POINT, "f1R", "X"], "differ in universe"),
        (["check", "missing.json", "f1", "R"], "cannot read file"),
        (["verify", "T2.2", "--sample", "10"], "--sample and --seed"),
        (["verify", "T2.2", "--n", "7"], "n must be in 1..5"),
    ],
)
def test_input_errors(capsys, argv, fragment):
    code, out, err = run(capsys, *argv)
    assert code == EXIT_INPUT
    assert out == ""
    assert fragment in err


def test_parse_error_has_position(capsys, tmp_path):
    bad = tmp_path / "bad.json"
    bad.write_text('{\n  "universes": {"U": ["a",]}\n}\n')
    code, _, err = run(capsys, "check", str(bad), "f", "R")
    assert code == EXIT_INPUT
    assert f"{bad}:2:" in err


def test_usage_errors_exit_2(capsys):
    with pytest.raises(SystemExit) as info:
        main(["approx", SEVEN_POINT, "R", "X", "--operator", "sideways"])
    assert info.value.code == EXIT_INPUT
    with pytest.raises(SystemExit) as info:
        main([])
    assert info.value.code == EXIT_INPUT


def test_budget_refusal(capsys):
    code, out, err = run(capsys, "verify", "P2.2", "--n", "4")
    assert code == EXIT_BUDGET and out == ""
    assert str(2**32 * 16) in err


def test_witness_refeeds_to_check(capsys, tmp_path):
    _, out, _ = run(capsys, "verify", "F3.5.4")
    snippet = out.split("first witness:\n", 1)[1]
    path = tmp_path / "witness.json"
    path.write_text(snippet)
    code, out, _ = run(capsys, "check", str(path), "f", "R")
    assert code == EXIT_OK
    assert out.splitlines()[2] == "successor-consistent: yes"
    inst = Instance.from_document(document.load(path))
    assert evaluate("F3.5.4", inst).violated


def test_info_lists_every_law(capsys):
    from roughmap.propcheck import law_ids

    code, out, _ = run(capsys, "info")
    assert code == EXIT_OK
    assert [line.split()[0] for line in out.splitlines()] == law_ids()
    _, out, _ = run(capsys, "info", "--format", "json")
    assert [row["id"] for row in json.loads(out)] == law_ids()


def test_output_is_byte_identical_across_processes():
    argv = [sys.executable, "-m", "roughmap", "verify", "F3.5.2", "--sample", "30", "--seed", "4", "--n", "4", "--m", "3"]
    first = subprocess.run(argv, capture_output=True, check=False)
    second = subprocess.run(argv, capture_output=True, check=False)
    assert first.returncode == second.returncode
    assert first.stdout == second.stdout and first.stdout
