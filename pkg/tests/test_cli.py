import json
import subprocess
import sys
from pathlib import Path

import pytest

from tropicaust.cli import main

DATA = Path(__file__).parent / "data"


def run(capsys, *argv):
    code = main([str(a) for a in argv])
    out = capsys.readouterr()
    return code, out.out, out.err


def test_angle(capsys):
    code, out, _ = run(capsys, "angle", "--legs", "1,0;3,7")
    assert code == 0
    assert "determinant  7" in out and "cotangent    4/7" in out
    assert "(1,1)w1, (1,2)w3" in out
    code, out, _ = run(capsys, "angle", "--legs", "0,1;3,-1", "--json")
    obj = json.loads(out)
    assert obj["class"] == "Canonical(3)" and obj["dualClass"] == "A(2)"
    assert obj["caustic"] == [{"direction": [1, 0], "weight": 3}]


def test_contfrac(capsys):
    code, out, _ = run(capsys, "contfrac", "4/7", "--hj")
    assert code == 0 and "regular      [1, 1, 3]" in out and "HJ           [3, 2, 2]" in out
    code, out, _ = run(capsys, "contfrac", "4/7", "--angle", "--json")
    obj = json.loads(out)
    assert obj["weights"] == [1, 3] and obj["gradients"] == [1]
    assert obj["resolution"] == [-3, -2, -2] and obj["reversedCotangent"] == "2/7"


def test_evolve(capsys):
    code, out, _ = run(capsys, "evolve", DATA / "sq2.json", "--time", "1/2", "--json")
    assert code == 0
    assert json.loads(out)["vertices"] == [["1/2", "1/2"], ["3/2", "1/2"], ["3/2", "3/2"],
                                           ["1/2", "3/2"]]


def test_trace_and_caustic(capsys, tmp_path):
    code, out, _ = run(capsys, "trace", DATA / "pentagon.json", "--json")
    obj = json.loads(out)
    assert obj["finalTime"] == "3/2" and len(obj["events"]) == 3
    svg = tmp_path / "c.svg"
    code, out, _ = run(capsys, "caustic", DATA / "pentagon.json", "--svg", svg)
    assert code == 0 and svg.read_text().startswith("<?xml")
    assert "trajectory (2, 3) -> (2, 3/2)  dir (0, -1)  w 2" in out


def test_series_age_toric(capsys):
    code, out, _ = run(capsys, "series", DATA / "pentagon.json", "--point", "2,3/2")
    assert out.strip() == "F(2, 3/2) = 3/2"
    code, out, _ = run(capsys, "age", DATA / "quad.json", "--json")
    assert json.loads(out) == {"age": "1/2"}
    code, out, _ = run(capsys, "age", DATA / "quadrant.json")
    assert "inf" in out
    code, out, _ = run(capsys, "toric", DATA / "sq2.json", "--class", "1,0:1;-1,0:1",
                       "--window", "1/4,1/2", "--json")
    obj = json.loads(out)
    assert code == 0 and obj["slope"] == "-2" and obj["canonicalPairing"] == -2 and obj["agrees"]


def test_verify(capsys):
    code, out, _ = run(capsys, "verify", DATA / "pentagon.json")
    assert code == 0 and "final time 3/2" in out and "FAIL" not in out
    code, out, _ = run(capsys, "verify", "--suite", "random", "--count", "100", "--seed", "7")
    assert code == 0 and out.strip().endswith("100/100 pass")


def test_render(capsys, tmp_path):
    code, out, _ = run(capsys, "render", "--stars", tmp_path / "stars")
    assert code == 0 and len(list((tmp_path / "stars").iterdir())) == 16
    code, out, _ = run(capsys, "render", DATA / "quad.json", "--fronts", "1/3")
    assert out.startswith("<?xml") and "stroke-dasharray" in out


@pytest.mark.parametrize("argv", [
    ["verify", "CORRUPT"],
    ["evolve", "CORRUPT", "--time", "1"],
    ["angle", "--legs", "1,0;2,0"],
    ["angle", "--legs", "1,0"],
    ["contfrac", "7/4"],
    ["evolve", "SQ", "--time", "-1"],
    ["series", "SQ", "--point", "5,5"],
    ["toric", "SQ", "--class", "1,0:1", "--window", "0,1/2"],
    ["toric", "SQ", "--class", "1,0:1;-1,0:1", "--window", "1/4,1"],
])
def test_input_errors_exit_2(capsys, tmp_path, argv):
    bad = tmp_path / "bad.json"
    bad.write_text('{"kind": "bounded", "vertices": [["0", "0"], ')
    argv = [str(bad) if a == "CORRUPT" else str(DATA / "sq2.json") if a == "SQ" else a
            for a in argv]
    code, out, err = run(capsys, *argv)
    assert code == 2
    diag = json.loads(err)
    assert set(diag) == {"error", "message"}


def test_decimal_time_is_exact(capsys):
    code, out, _ = run(capsys, "evolve", DATA / "sq2.json", "--time", "0.5", "--json")
    assert code == 0 and json.loads(out)["vertices"][0] == ["1/2", "1/2"]


def test_json_mode_has_no_floats(capsys):
    for argv in (["trace", DATA / "quad.json"], ["caustic", DATA / "quad.json"],
                 ["evolve", DATA / "quad.json", "--time", "1/3"]):
        code, out, _ = run(capsys, *argv, "--json")

        def walk(x):
            assert not isinstance(x, float)
            if isinstance(x, dict):
                for v in x.values():
                    walk(v)
            elif isinstance(x, list):
                for v in x:
                    walk(v)
        walk(json.loads(out))


def test_module_entry_point():
    res = subprocess.run([sys.executable, "-m", "tropicaust", "contfrac", "1/2"],
                         capture_output=True, text=True)
    assert res.returncode == 0 and "[2]" in res.stdout
