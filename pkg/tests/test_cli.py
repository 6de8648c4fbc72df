import json
import subprocess
import sys

import pytest

from galspin.cli import main, parse_grid, parse_rational, parse_vector
from galspin.errors import ParseError, UnknownSuite
from galspin.exact import ExactScalar, parse_scalar
from galspin.report import CheckRow
from galspin.suites import ReportDocument, emit_report, run_suite


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


def test_parse_rational():
    assert parse_rational("3/4") == ExactScalar("3/4")
    assert parse_rational("-2") == -2
    for bad in ("1.5", "a/b", "", "1/0", "1//2"):
        with pytest.raises(ParseError):
            parse_rational(bad)


def test_parse_vector_and_grid():
    assert parse_vector("1,2,3") == [1, 2, 3]
    with pytest.raises(ParseError):
        parse_vector("1,2")
    assert len(parse_grid("1,0,0;0,1,0")) == 2
    with pytest.raises(ParseError):
        parse_grid(" ; ")


def test_spin_state_json(capsys):
    code, out, _ = run(capsys, "spin-state", "--p", "3,4,0", "--k", "5/2", "--format", "json")
    assert code == 0
    data = json.loads(out)
    assert parse_scalar(data["f1"]) == ExactScalar("1/2")
    assert parse_scalar(data["f2"]) == ExactScalar("2/5", 0, "-3/10")
    assert data["eigenvalues"] == {"up": "1/2", "down": "-1/2"}


def test_spin_state_text_also_prints_json(capsys):
    code, out, _ = run(capsys, "spin-state", "--p", "0,0,5", "--k", "1")
    assert code == 0
    assert "f1 = 0" in out
    assert json.loads(out.strip().splitlines()[-1])["f2"] == "0"


def test_bad_vector_exits_2(capsys):
    code, _, err = run(capsys, "spin-state", "--p", "1,1", "--k", "1")
    assert code == 2 and "expected 3" in err


def test_unknown_suite_exits_2(capsys):
    code, _, err = run(capsys, "run-suite", "--suite", "bogus")
    assert code == 2 and "bogus" in err
    with pytest.raises(UnknownSuite):
        run_suite("bogus")


def test_mass_transform(capsys):
    code, out, _ = run(capsys, "mass-transform", "--m", "1", "--k", "1", "--cbar", "1", "--p", "1,0,0",
                       "--tau", "1,0,0", "--format", "json")
    data = json.loads(out)
    assert code == 0
    assert data["boosted"]["m"] == "1/2" and data["input"]["m0"] == "1/2"
    assert set(data["checks"].values()) == {"pass"}
    code, _, _ = run(capsys, "mass-transform", "--m", "1", "--m0", "1", "--cbar", "1", "--k", "1", "--tau", "0,0,0")
    assert code == 2


def test_mass_transform_unrepresentable_exits_2(capsys):
    code, _, err = run(capsys, "mass-transform", "--m", "1", "--m0", "3", "--k", "1", "--tau", "1,0,0")
    assert code == 2 and "NotRepresentable" in err


def test_coordinate_map(capsys):
    code, out, _ = run(capsys, "coordinate-map", "--tau", "1,2,0", "--x", "1,0,0,2,3", "--format", "json")
    data = json.loads(out)
    assert code == 0 and data["interval_preserved"] is True
    code, _, _ = run(capsys, "coordinate-map", "--x", "1,0,0,2,3")
    assert code == 2


def test_fock_demo(capsys):
    code, out, _ = run(capsys, "fock-demo", "--grid", "1,0,0;0,1,0", "--format", "json")
    data = json.loads(out)
    assert code == 0
    assert data["summary"]["failed"] == 0 and data["summary"]["passed"] > 50
    code, _, _ = run(capsys, "fock-demo", "--grid", ";".join(["1,0,0"] * 5))
    assert code == 2


def test_run_suite_json_round_trip(capsys):
    code, out, _ = run(capsys, "run-suite", "--suite", "clifford", "--format", "json")
    assert code == 0
    data = json.loads(out)
    assert list(data) == ["suite_name", "timestamp", "rows", "summary"]
    assert data["summary"] == {"passed": 35, "failed": 0, "skipped": 0}
    assert all(r["timing_ms"] is None for r in data["rows"])
    doc = ReportDocument.from_dict(data)
    assert doc.to_dict() == data


def test_timings_flag(capsys):
    _, out, _ = run(capsys, "run-suite", "--suite", "clifford", "--format", "json", "--timings")
    timings = [r["timing_ms"] for r in json.loads(out)["rows"]]
    assert all(t is None or isinstance(t, float) for t in timings)
    assert sum(isinstance(t, float) for t in timings) >= 30


def test_text_report(capsys):
    code, out, _ = run(capsys, "run-suite", "--suite", "clifford")
    lines = out.splitlines()
    assert lines[0] == "suite clifford: 35 passed, 0 failed, 0 skipped"
    assert all(line.startswith("PASS") for line in lines[1:])


def test_determinism_across_seeds():
    a = run_suite("transforms", seed=3, samples=4).to_dict()
    b = run_suite("transforms", seed=3, samples=4).to_dict()
    for d in (a, b):
        d.pop("timestamp")
    assert a == b
    c = run_suite("transforms", seed=4, samples=4).to_dict()
    assert c["summary"] == a["summary"]


def test_samples_must_be_positive():
    with pytest.raises(ValueError):
        run_suite("clifford", samples=0)


def test_empty_document_summary():
    doc = ReportDocument("empty", [])
    assert doc.summary == {"passed": 0, "failed": 0, "skipped": 0}
    assert doc.exit_code() == 0


def test_failing_row_gives_exit_1():
    doc = ReportDocument("x", [CheckRow("a", "ref", "pass"), CheckRow("b", "ref", "fail", "entry (1,1) = 2")])
    assert doc.exit_code() == 1
    text = emit_report(doc).decode()
    assert "FAIL  b  [ref]  -- entry (1,1) = 2" in text
    assert json.loads(emit_report(doc, "json"))["rows"][1]["witness"] == "entry (1,1) = 2"
    with pytest.raises(ValueError):
        emit_report(doc, "xml")


def test_module_entry_point():
    out = subprocess.run([sys.executable, "-m", "galspin", "coordinate-map", "--beta", "1,0,0", "--x", "0,0,0,1,0"],
                         capture_output=True, text=True, check=False)
    assert out.returncode == 0
    assert "interval 0 preserved" in out.stdout
