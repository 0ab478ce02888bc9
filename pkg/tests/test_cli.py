import json
import subprocess
import sys

import pytest

from arglue.cli import run
from arglue.core import KupischSeries, kupisch_of, parse_algebra
from conftest import branched_ten, chain_four


@pytest.fixture
def chain_file(tmp_path):
    p = tmp_path / "chain.json"
    p.write_text(json.dumps(chain_four().to_json()))
    return str(p)


@pytest.fixture
def branched_file(tmp_path):
    p = tmp_path / "branched.json"
    p.write_text(json.dumps(branched_ten().to_json()))
    return str(p)


def test_algebra_validate_and_indec(chain_file):
    assert run(["algebra", "validate", chain_file])[0] == 0
    code, report = run(["algebra", "indec", chain_file])
    assert code == 0
    assert report.data["verdicts"]["count"] == 9


def test_algebra_ar_writes_dot(chain_file, tmp_path):
    dot = tmp_path / "ar.dot"
    code, report = run(["algebra", "ar", chain_file, "--dot", str(dot)])
    assert code == 0
    assert dot.read_text().startswith("digraph")
    assert str(dot) in report.data["artifacts"]


def test_nakayama_check_nct_passes():
    code, report = run(["nakayama", "--kupisch", "2,2,3,3,3,3,2,1",
                        "check-nct", "-n", "3"])
    assert code == 0


def test_nakayama_emit_round_trip(tmp_path):
    out = tmp_path / "report.json"
    code, _ = run(["nakayama", "--kupisch", "2,2,3,3,3,3,2",
                   "--cyclic", "emit", "--json", str(out)])
    assert code == 0
    doc = json.loads(out.read_text())
    A = parse_algebra(doc["algebra"])
    assert kupisch_of(A) == KupischSeries([2, 2, 3, 3, 3, 3, 2], cyclic=True)


def test_nakayama_selfglue():
    code, report = run(["nakayama", "--kupisch", "2,2,3,3,3,3,2,1",
                        "selfglue"])
    assert code == 0
    assert report.data["verdicts"]["kupisch-tilde"] == [2, 2, 2, 3, 3, 3, 3]


def test_starlike_classify_reports_global_dimension(capsys):
    code, report = run(["starlike", "--arms", "5:out,5:out,4:in",
                        "classify", "-n", "4"])
    assert code == 0
    assert report.data["verdicts"]["passes"] is True
    assert "gldim 7" in capsys.readouterr().out


def test_check_nct_failure_exits_two(tmp_path, chain_file):
    # candidate missing a projective: dumped module list with one class
    doc = json.loads(open(chain_file).read())
    doc["modules"] = [{"dims": {"0": 1}, "mats": {}}]
    bad = tmp_path / "bad.json"
    bad.write_text(json.dumps(doc))
    code, report = run(["check", "nct", str(bad), "-n", "2"])
    assert code == 2


def test_check_nct_alias_spelling(chain_file):
    code, _ = run(["check-nct", chain_file, "-n", "2"])
    assert code in (0, 2)  # alias resolves; verdict decided by the check


def test_missing_file_is_input_error():
    code, report = run(["algebra", "validate", "/nonexistent/algebra.json"])
    assert code == 3


def test_bad_arguments_are_input_errors():
    assert run(["nakayama", "--kupisch", "two,one", "emit"])[0] == 3
    assert run(["starlike", "--arms", "5:sideways", "classify",
                "-n", "2"])[0] == 3


def test_glue_pair(chain_file, branched_file, tmp_path):
    out = tmp_path / "glued.json"
    code, report = run(["glue", "pair", chain_file, branched_file,
                        "--p", "1", "--i", "3", "--json", str(out)])
    assert code == 0
    doc = json.loads(out.read_text())
    L = parse_algebra(doc["algebra"])
    assert len(L.quiver.vertices) == 11
    # the emitted algebra file loads back through the same front door
    again = tmp_path / "again.json"
    again.write_text(json.dumps(doc["algebra"]))
    assert run(["algebra", "validate", str(again)])[0] == 0


def test_glue_system(tmp_path):
    spec = {"tree": {"vertices": ["x", "y"],
                     "arrows": [{"from": "x", "to": "y",
                                 "I": "2", "P": "2"}]},
            "algebras": {"x": {"kupisch": [2, 2, 1]},
                         "y": {"kupisch": [2, 2, 1]}}}
    f = tmp_path / "sys.json"
    f.write_text(json.dumps(spec))
    code, report = run(["glue", "system", str(f)])
    assert code == 0
    assert report.data["verdicts"]["vertices"] == 4


def test_glue_system_bad_anchor(tmp_path):
    spec = {"tree": {"vertices": ["x", "y"],
                     "arrows": [{"from": "x", "to": "y",
                                 "I": "3", "P": "1"}]},
            "algebras": {"x": {"kupisch": [2, 2, 1]},
                         "y": {"kupisch": [2, 2, 1]}}}
    f = tmp_path / "sys.json"
    f.write_text(json.dumps(spec))
    assert run(["glue", "system", str(f)])[0] == 3


def test_glue_simultaneous(chain_file, branched_file):
    code, report = run(["glue", "simultaneous", chain_file, branched_file,
                        "--pairs", "1:3"])
    assert code == 0
    assert report.data["verdicts"]["vertices"] == 11


def test_selfglue_command(tmp_path):
    f = tmp_path / "alg.json"
    f.write_text(json.dumps({"kupisch": [2, 2, 3, 3, 3, 3, 2, 1]}))
    code, report = run(["selfglue", str(f), "-n", "3"])
    assert code == 0


def test_generate_command():
    code, report = run(["generate", "-s", "2", "-t", "2", "-n", "2"])
    assert code == 0


def test_paper_suite_green():
    code, report = run(["paper-suite"])
    assert code == 0
    assert all(report.data["verdicts"].values())


def test_console_entry_point():
    proc = subprocess.run(
        [sys.executable, "-m", "arglue.cli", "nakayama",
         "--kupisch", "2,2,1", "indec"],
        capture_output=True, text=True)
    assert proc.returncode == 0
    assert "count: 5" in proc.stdout
