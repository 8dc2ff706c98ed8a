import csv
import io
import json

import pytest

from monogenica.cli import main
from monogenica.core import MultiPoly
from monogenica.quaternion import QuatPoly, build_g
from monogenica.sl2 import harmonic_element
from monogenica.spinor import SpinorPoly, monogenic_element


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


def test_basis_json_roundtrip(capsys):
    code, out, _ = run(capsys, "basis", "--family", "harmonic", "--degree", "2", "--format", "json")
    assert code == 0
    doc = json.loads(out)
    assert doc["degree"] == 2 and len(doc["elements"]) == 5
    assert MultiPoly.from_json(doc["elements"][3]) == harmonic_element(2, 3)
    code, out, _ = run(capsys, "basis", "--family", "spinor", "--degree", "1", "--realization", "S4-",
                       "--format", "json")
    doc = json.loads(out)
    assert doc["realization"] == "S4-"
    assert SpinorPoly.from_json(doc["elements"][2]) == monogenic_element(1, 2, "S4-")
    code, out, _ = run(capsys, "basis", "--family", "quaternion", "--degree", "2", "--format", "json")
    assert QuatPoly.from_json(json.loads(out)["elements"][1]) == build_g(2, 1)


def test_basis_text(capsys, tmp_path):
    code, out, _ = run(capsys, "basis", "--family", "harmonic", "--degree", "1")
    assert out.splitlines()[1].startswith("j=1") and "x3" in out
    target = tmp_path / "b.json"
    assert main(["basis", "--family", "quaternion", "--degree", "1", "--format", "json",
                 "--out", str(target)]) == 0
    assert len(json.loads(target.read_text())["elements"]) == 2


def test_usage_errors(capsys):
    assert run(capsys, "basis", "--family", "spinor", "--degree", "1")[0] == 2
    code, _, err = run(capsys, "basis", "--family", "harmonic", "--degree", "21")
    assert code == 2 and "--force" in err
    assert run(capsys, "verify", "--max-degree", "1", "--checks", "nonsense")[0] == 2
    assert run(capsys, "gram", "--family", "harmonic", "--degree", "-1", "--product", "fischer")[0] == 2
    with pytest.raises(SystemExit) as exc:
        main(["basis", "--family", "octonion", "--degree", "1"])
    assert exc.value.code == 2


def test_verify_pass_and_jsonl(capsys):
    code, out, err = run(capsys, "verify", "--max-degree", "2", "--checks", "harmonic,appell")
    assert code == 0
    reports = [json.loads(line) for line in out.splitlines()]
    assert {r["status"] for r in reports} == {"pass"}
    assert {r["check"] for r in reports} >= {"harmonic-laplacian", "spinor-appell", "quat-appell"}
    assert "operators-appell-commutator" not in {r["check"] for r in reports}
    assert "checks passed" in err


def test_verify_deterministic(capsys, monkeypatch):
    args = ("verify", "--max-degree", "2", "--checks", "spinor")
    strip = lambda text: [{k: v for k, v in json.loads(l).items() if k != "wall_time"}  # noqa: E731
                          for l in text.splitlines()]
    first = strip(run(capsys, *args)[1])
    monkeypatch.setenv("MONOGENICA_THREADS", "3")
    assert strip(run(capsys, *args)[1]) == first


@pytest.mark.parametrize("mutation", ["omega-sign", "ck-constant", "substitution"])
def test_verify_mutation(capsys, mutation):
    code, out, _ = run(capsys, "verify", "--max-degree", "2", "--inject-mutation", mutation)
    assert code == 1
    failed = [json.loads(l) for l in out.splitlines() if '"fail"' in l]
    assert failed and all(r["counterexample"] for r in failed)


def write_points(tmp_path, rows):
    path = tmp_path / "pts.csv"
    path.write_text("r,theta,phi\n" + "".join(f"{r},{t},{p}\n" for r, t, p in rows))
    return str(path)


def test_eval_quaternion(capsys, tmp_path):
    pts = write_points(tmp_path, [(1.0, 1.5707963267948966, 0.0), (0.7, 0.9, 2.0)])
    code, out, _ = run(capsys, "eval", "--family", "quaternion", "--degree", "1", "--index", "0",
                       "--points", pts)
    assert code == 0
    rows = list(csv.DictReader(io.StringIO(out)))
    assert len(rows) == 2
    assert float(rows[0]["e0_constructive"]) == pytest.approx(1.0)
    assert max(float(rows[1][f"e{n}_absdiff"]) for n in range(4)) < 1e-12


def test_eval_spinor_and_empty(capsys, tmp_path):
    pts = write_points(tmp_path, [(1.2, 0.5, -1.0)])
    code, out, _ = run(capsys, "eval", "--family", "spinor", "--realization", "S4+", "--degree", "3",
                       "--index", "5", "--points", pts)
    row = next(csv.DictReader(io.StringIO(out)))
    assert float(row["minus_absdiff"]) < 1e-12 and "plus_closed_im" in row
    empty = tmp_path / "empty.csv"
    empty.write_text("r,theta,phi\n")
    code, out, _ = run(capsys, "eval", "--family", "harmonic", "--degree", "1", "--index", "0",
                       "--points", str(empty))
    assert code == 0 and out.strip().split(",")[:3] == ["r", "theta", "phi"] and len(out.splitlines()) == 1
    assert run(capsys, "eval", "--family", "harmonic", "--degree", "1", "--index", "3",
               "--points", pts)[0] == 2
    bad = tmp_path / "bad.csv"
    bad.write_text("x,y,z\n1,2,3\n")
    assert run(capsys, "eval", "--family", "harmonic", "--degree", "1", "--index", "0",
               "--points", str(bad))[0] == 2


def test_gram(capsys):
    code, out, err = run(capsys, "gram", "--family", "harmonic", "--degree", "1", "--product", "fischer")
    assert code == 0 and out.splitlines()[0] == "1/2,0,0"
    assert "exactly zero: yes" in err
    code, out, err = run(capsys, "gram", "--family", "quaternion", "--degree", "1", "--product", "l2ball",
                         "--format", "json")
    doc = json.loads(out)
    assert doc["entries"][0][0]["e0"]["pi_coeff"] == {"num": "8", "den": "15"}
    assert "yes" in err


def test_bench(capsys):
    code, out, _ = run(capsys, "bench", "--max-degree", "2", "--points", "50")
    doc = json.loads(out)
    assert code == 0 and len(doc["construction"]) == 3
    assert doc["evaluation"]["elements"] == 1 + 2 + 3
    again = json.loads(run(capsys, "bench", "--max-degree", "2", "--points", "50")[1])
    assert [c["workload_hash"] for c in again["construction"]] == \
        [c["workload_hash"] for c in doc["construction"]]
