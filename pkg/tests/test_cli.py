import json

import pytest

from milnor.cli import main
from milnor.report import psi_from_json, tensor_from_json, tensor_to_json
from milnor.tensors import IntervalTensor, left_collecting_bracket

UPSILON = left_collecting_bracket(2, [1, 2, 1, 2])


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def test_compute_whitehead_json_round_trip(capsys):
    code, out, _ = run(capsys, "compute", "--name", "5_1^2", "--format", "json")
    assert code == 0
    report = json.loads(out)
    assert report["link"] == "5_1^2" and report["m"] == 4
    assert psi_from_json(report) == [UPSILON, -UPSILON]
    assert [p["component"] for p in report["psi"]] == [1, 2]
    words = [tuple(r["word"]) for r in report["psi"][0]["tensor"]]
    assert words == sorted(words)
    assert report["basis"][0]["remainder_zero"] is True


def test_compute_text(capsys):
    code, out, _ = run(capsys, "compute", "--name", "7_4^2")
    assert code == 0
    assert "m = 4" in out and "2 * [[[l^(1), l^(2)], l^(1)], l^(2)]" in out


def test_compute_raw_basis(capsys):
    code, out, _ = run(capsys, "compute", "--name", "5_1^2", "--format", "json", "--basis", "raw")
    assert code == 0
    assert json.loads(out)["basis"][0]["raw"]


def test_compute_pd_file(tmp_path, capsys):
    path = tmp_path / "hopf.pd"
    path.write_text("X(3,2,4,1) X(1,4,2,3)\n")
    code, out, _ = run(capsys, "compute", "--pd", str(path), "--format", "json")
    report = json.loads(out)
    assert code == 0 and report["m"] == 2
    assert psi_from_json(report)[0] == -left_collecting_bracket(2, [1, 2])


@pytest.mark.parametrize(
    "argv, expected",
    [
        (("compute", "--name", "nope"), 2),
        (("compute", "--name", "3_1"), 3),
        (("higher", "--name", "3_1"), 3),
        (("compute", "--name", "5_1^2", "--max-degree", "1"), 1),
        (("compute",), 1),
        (("bogus",), 1),
        (("compute", "--pd", "/nonexistent/file.pd"), 1),
    ],
)
def test_exit_codes(capsys, argv, expected):
    assert run(capsys, *argv)[0] == expected


def test_malformed_pd_exit_code(tmp_path, capsys):
    path = tmp_path / "bad.pd"
    path.write_text("X(1,2,3)")
    code, _, err = run(capsys, "compute", "--pd", str(path))
    assert code == 1 and "exactly 4" in err


def test_higher_report(capsys):
    code, out, _ = run(capsys, "higher", "--name", "6_1^2", "--max-degree", "5", "--format", "json")
    assert code == 0
    report = json.loads(out)
    degrees = report["higher"]["degrees"]
    assert [d["degree"] for d in degrees] == [2, 3, 4, 5]
    assert degrees[-1]["delta"]["elementary_divisors"] == [1, 1, 3, 3, 3, 3]
    assert report["higher"]["raw_is_canonical"] is False
    code, out, _ = run(capsys, "higher", "--name", "6_2^3", "--max-degree", "4")
    assert code == 0 and "degree 4: Delta rank 6" in out


def test_verify_exit_codes(capsys):
    code, out, _ = run(capsys, "verify", "--suite", "milnor-links")
    assert code == 0 and out.count("[PASS]") == 5
    code, out, _ = run(capsys, "verify", "--suite", "table1")
    assert code == 0 and out.count("[PASS]") == 8


def test_catalog_listing(capsys, monkeypatch, tmp_path):
    code, out, _ = run(capsys, "catalog", "--filter", "5_1")
    assert code == 0 and "5_1^2        q=2" in out and "lk(1,2)=0" in out
    code, out, _ = run(capsys, "catalog", "--filter", "zzz")
    assert code == 0 and out == ""
    code, out, _ = run(capsys, "catalog", "--format", "json", "--filter", "6_2^3")
    assert [e["components"] for e in json.loads(out)] == [3, 3]


def test_tensor_json_round_trip():
    t = IntervalTensor.from_dict(3, {"123": 10**25, "321": -7})
    assert tensor_from_json(3, 3, json.loads(json.dumps(tensor_to_json(t)))) == t
