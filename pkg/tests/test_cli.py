import json
import random
import subprocess
import sys

import pytest

import parthopf.acceptance as acceptance
from parthopf.cli.main import main
from parthopf.cli.serialize import SchemaError, hopf_doc, hopf_from_doc, load, pair_doc, pair_from_doc
from parthopf.exactmath import PrimeField, QQi
from parthopf.hopfcore import mutate
from parthopf.zoo import h16, pair_normal_average, sweedler_h4


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


def build(capsys, tmp_path, name, *extra):
    path = tmp_path / f"{name}.json"
    code, _, err = run(capsys, "build", name, "-o", str(path), *extra)
    assert code == 0, err
    return path


@pytest.mark.parametrize("B", [sweedler_h4(), sweedler_h4(PrimeField(3)), h16(QQi())], ids=["h4", "h4/GF3", "h16/Qi"])
def test_hopf_round_trip(B):
    doc = json.loads(json.dumps(hopf_doc(B)))
    C = hopf_from_doc(doc)
    assert C.mult == B.mult and C.comult == B.comult and C.antipode == B.antipode
    assert C.unit == B.unit and C.counit == B.counit and C.labels == B.labels


def test_pair_round_trip():
    p = pair_normal_average()
    q = pair_from_doc(json.loads(json.dumps(pair_doc(p))))
    assert q.act == p.act and q.rho == p.rho
    assert q.meta["lambda"] == p.meta["lambda"] and q.meta["z"] == p.meta["z"]


def test_build_and_check_hopf(capsys, tmp_path):
    path = build(capsys, tmp_path, "h4")
    code, out, _ = run(capsys, "check", str(path), "--suite", "hopf")
    assert code == 0
    assert json.loads(out)["pass"] is True


def test_check_negative_pair_exits_one_with_witness(capsys, tmp_path):
    path = build(capsys, tmp_path, "pair_h4_negative", "--beta", "1", "--mode", "lambda")
    code, out, _ = run(capsys, "check", str(path), "--suite", "pmp")
    assert code == 1
    doc = json.loads(out)
    failed = [c for c in doc["checks"] if not c["pass"]]
    assert failed[0]["check"] == "pmp: pmp compatibility"
    assert failed[0]["witness"]["h"] == "xc"


def test_corrupted_file_exits_two(capsys, tmp_path):
    path = build(capsys, tmp_path, "h4")
    doc = json.loads(path.read_text())
    del doc["mult"]
    path.write_text(json.dumps(doc))
    code, _, err = run(capsys, "check", str(path))
    assert code == 2 and "error" in err
    path.write_text("{not json")
    assert run(capsys, "check", str(path))[0] == 2
    assert run(capsys, "check", str(tmp_path / "missing.json"))[0] == 2


def test_schema_version_is_enforced(tmp_path):
    doc = hopf_doc(sweedler_h4())
    doc["schema_version"] = 99
    path = tmp_path / "v.json"
    path.write_text(json.dumps(doc))
    with pytest.raises(SchemaError):
        load(str(path))


def test_usage_errors_exit_two(capsys, tmp_path):
    assert run(capsys, "build", "no_such_thing")[0] == 2
    assert run(capsys, "build", "pair_normal_average", "--field", "GF(2)")[0] == 2
    assert run(capsys, "frobnicate")[0] == 2
    hopf = build(capsys, tmp_path, "h4")
    assert run(capsys, "bismash", str(hopf))[0] == 2
    assert run(capsys, "check", str(hopf), "--suite", "pmp")[0] == 2


def test_output_is_deterministic_without_timing(capsys, tmp_path):
    path = build(capsys, tmp_path, "pair_normal_average")
    a = run(capsys, "check", str(path), "--no-timing")
    b = run(capsys, "check", str(path), "--no-timing")
    assert a[0] == b[0] == 0 and a[1] == b[1]
    assert "seconds" not in a[1]


def test_bismash_then_check_and_compare(capsys, tmp_path):
    pair = build(capsys, tmp_path, "pair_normal_average")
    out = tmp_path / "b.json"
    code, _, err = run(capsys, "bismash", str(pair), "-o", str(out))
    assert code == 0, err
    assert run(capsys, "check", str(out), "--suite", "hopf")[0] == 0
    code, text, _ = run(capsys, "compare", str(out), str(out))
    assert code == 0 and json.loads(text)["pass"]


def test_bismash_of_negative_exits_one(capsys, tmp_path):
    pair = build(capsys, tmp_path, "pair_h4_negative")
    assert run(capsys, "bismash", str(pair))[0] == 1


def test_theta_integrals_dualize(capsys, tmp_path):
    pair = build(capsys, tmp_path, "pair_normal_average")
    assert run(capsys, "theta", str(pair), "--no-timing")[0] == 0
    assert run(capsys, "integrals", str(pair), "--no-timing")[0] == 0
    dual = tmp_path / "d.json"
    assert run(capsys, "dualize", str(pair), "-o", str(dual))[0] == 0
    assert dual.exists()
    hopf = build(capsys, tmp_path, "h4")
    dh = tmp_path / "dh.json"
    assert run(capsys, "dualize", str(hopf), "-o", str(dh))[0] == 0
    assert run(capsys, "check", str(dh), "--suite", "hopf")[0] == 0


def test_fingerprint_and_zoo_listing(capsys, tmp_path):
    hopf = build(capsys, tmp_path, "h4")
    code, out, _ = run(capsys, "fingerprint", str(hopf))
    fp = json.loads(out)["fingerprint"]
    assert code == 0 and fp["dim"] == 4 and fp["grouplike_count"] == 2 and fp["semisimple"] is False
    code, out, _ = run(capsys, "zoo")
    assert code == 0 and "pair_normal_average" in out and "h4" in out


def test_verify_all_single_criterion_json(capsys):
    code, out, _ = run(capsys, "verify-all", "--criteria", "3", "--json", "--no-timing")
    doc = json.loads(out)
    assert code == 0 and doc["criteria"] == [{"number": 3, "title": doc["criteria"][0]["title"], "pass": True}]


def test_verify_all_detects_a_corrupted_zoo(capsys, monkeypatch):
    real = acceptance.acceptance_hopf_zoo

    def corrupted():
        out = list(real())[:2]
        name, B = out[0]
        M, _ = mutate(B, random.Random(7))
        return [(name, M)] + out[1:]

    monkeypatch.setattr(acceptance, "acceptance_hopf_zoo", corrupted)
    code, out, _ = run(capsys, "verify-all", "--criteria", "1", "--no-timing")
    assert code == 1
    assert "FAIL" in out


def test_unknown_criterion_is_usage_error(capsys):
    assert run(capsys, "verify-all", "--criteria", "99")[0] == 2


def test_console_entry_point_runs_as_module(tmp_path):
    r = subprocess.run([sys.executable, "-m", "parthopf.cli", "zoo"], capture_output=True, text=True)
    assert r.returncode == 0 and "h4" in r.stdout
