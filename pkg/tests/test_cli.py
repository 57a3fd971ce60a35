import json
import os

import pytest

from conicline import cli
from conicline.geometry import catalog
from conicline.report import analyze


def run(capsys, *argv):
    code = cli.main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def test_analyze_cl7_json(capsys):
    code, out, _ = run(capsys, "analyze", "--catalog", "CL7")
    assert code == 0
    rep = json.loads(out)
    assert rep["freeness"]["verdict"] == "Free"
    assert rep["freeness"]["exponents"] == [3, 3]
    assert (rep["census"]["n2"], rep["census"]["t"], rep["census"]["n3"]) == (0, 5, 3)
    assert rep["checks"]["tau_identity"]["holds"]
    assert "timing" not in rep


def test_analyze_cl2_is_nearly_free_and_out_of_class(capsys):
    code, out, _ = run(capsys, "analyze", "--catalog", "CL2")
    rep = json.loads(out)
    assert code == 0
    assert rep["freeness"]["verdict"] == "NearlyFree"
    assert rep["census"]["in_class"] is False
    assert rep["bounds"] is None and rep["weak_combinatorics"] is None


def test_analyze_table(capsys):
    code, out, _ = run(capsys, "analyze", "--catalog", "CL3", "--format", "table")
    assert code == 0 and "Free exponents=(1, 1)" in out


@pytest.mark.parametrize(
    "content",
    ["not json", '{"field": 3, "lines": [], "conics": []}', '{"field": {"minpoly": ["0/1", "1/1"]}, "lines": [[0, 0, 0]], "conics": []}'],
)
def test_analyze_bad_file_exits_2(tmp_path, capsys, content):
    path = tmp_path / "bad.json"
    path.write_text(content)
    code, out, err = run(capsys, "analyze", str(path))
    assert code == 2 and out == "" and err.startswith("error:")


def test_analyze_missing_file_and_unknown_name(capsys, tmp_path):
    assert run(capsys, "analyze", str(tmp_path / "nope.json"))[0] == 2
    assert run(capsys, "analyze", "--catalog", "CL6")[0] == 2
    assert run(capsys, "analyze")[0] == 2


def test_soundness_failure_exits_3(capsys, monkeypatch):
    from conicline.errors import PrimeDisagreement

    def boom(*args, **kwargs):
        raise PrimeDisagreement("forced")

    monkeypatch.setattr(cli, "analyze", boom)
    code, out, err = run(capsys, "analyze", "--catalog", "CL3")
    assert code == 3 and "PrimeDisagreement" in err and out == ""


def test_output_written_atomically(tmp_path, capsys):
    target = tmp_path / "cl5.json"
    code, out, _ = run(capsys, "analyze", "--catalog", "CL5", "--output", str(target))
    assert code == 0 and out == ""
    assert json.loads(target.read_text())["freeness"]["exponents"] == [2, 2]
    assert os.listdir(tmp_path) == ["cl5.json"]


def test_failed_run_leaves_existing_output_untouched(tmp_path, capsys):
    target = tmp_path / "out.json"
    target.write_text("previous")
    bad = tmp_path / "bad.json"
    bad.write_text("{")
    assert run(capsys, "analyze", str(bad), "--output", str(target))[0] == 2
    assert target.read_text() == "previous"


def test_seed_environment_override(capsys, monkeypatch):
    monkeypatch.setenv("CLL_SEED", "7")
    _, out, _ = run(capsys, "analyze", "--catalog", "CL3", "--seed", "0")
    assert json.loads(out)["seed"] == 7
    monkeypatch.setenv("CLL_SEED", "x")
    assert run(capsys, "analyze", "--catalog", "CL3")[0] == 2


def test_json_is_byte_identical_across_runs(capsys):
    a = run(capsys, "analyze", "--catalog", "CL4")[1]
    b = run(capsys, "analyze", "--catalog", "CL4")[1]
    assert a == b


def test_report_timing_only_on_request():
    rep = analyze(catalog("CL3"))
    assert "timing" in rep.to_json(with_timing=True)
    assert "timing" not in json.loads(rep.dumps())


def test_enumerate_single_pair(capsys):
    code, out, _ = run(capsys, "enumerate", "--d", "1", "--k", "1")
    (pair,) = json.loads(out)["pairs"]
    assert code == 0
    assert [[c[k] for k in ("n2", "t", "n3", "d1", "d2")] for c in pair["candidates"]] == [[0, 1, 0, 1, 1]]


def test_enumerate_cl7_pair(capsys):
    _, out, _ = run(capsys, "enumerate", "--d", "3", "--k", "2", "--format", "table")
    assert "n2=0 t=5 n3=3 d1=3 d2=3  survives  realized by CL7" in out


def test_enumerate_max_m(capsys):
    code, out, _ = run(capsys, "enumerate", "--max-m", "9")
    body = json.loads(out)
    assert code == 0
    assert body["beyond"]["pairs_with_survivors"] == []
    assert all(p["m"] <= 9 for p in body["pairs"])


def test_enumerate_argument_errors(capsys):
    assert run(capsys, "enumerate", "--d", "1")[0] == 2
    assert run(capsys, "enumerate", "--d", "0", "--k", "1")[0] == 2
    assert run(capsys, "enumerate", "--max-m", "9", "--d", "1")[0] == 2


def test_classify(capsys):
    code, out, _ = run(capsys, "classify")
    body = json.loads(out)
    assert code == 0 and len(body["cases"]) == 5
    assert {(p["d"], p["k"]) for p in body["pairs"] if p["status"] == "Realizable"} == {(1, 1), (2, 1), (3, 1), (3, 2)}


def test_spectrum(capsys):
    code, out, _ = run(capsys, "spectrum", "D4", "--lo", "1/3", "--hi", "4/3")
    body = json.loads(out)
    assert code == 0 and body["mu"] == 4 and body["window"]["count"] == 4
    assert json.loads(run(capsys, "spectrum", "central:3")[1])["spectrum"] == body["spectrum"]
    assert run(capsys, "spectrum", "E6")[0] == 2
    assert run(capsys, "spectrum", "A1", "--lo", "1")[0] == 2
    assert run(capsys, "spectrum", "A1", "--lo", "1", "--hi", "1/2")[0] == 2


def test_catalog_commands(capsys, tmp_path):
    code, out, _ = run(capsys, "catalog", "list")
    assert code == 0 and "dual-hesse" in out
    shown = json.loads(run(capsys, "catalog", "show", "CL5")[1])
    assert shown["expected"]["counts"] == [3, 3, 0]
    target = tmp_path / "cl5.json"
    assert run(capsys, "catalog", "export", "CL5", "-o", str(target))[0] == 0
    code, out, _ = run(capsys, "analyze", str(target))
    assert json.loads(out)["arrangement"]["sha256"] == catalog("CL5").digest()
    assert run(capsys, "catalog", "show")[0] == 2


def test_reproduce_filter(capsys):
    code, out, _ = run(capsys, "reproduce", "--filter", "determinism")
    assert code == 0
    assert out.splitlines()[0].startswith("[PASS] criterion 7 determinism")
    assert run(capsys, "reproduce", "--filter", "nothing")[0] == 2
    # long-form alias
    assert run(capsys, "verify-paper", "--filter", "7")[0] == 0


def test_reproduce_fails_on_tampered_catalog(capsys, monkeypatch):
    from conicline import classify, geometry, verify
    from conicline.geometry import catalog as real_catalog

    def tampered(name):
        arr = real_catalog(name)
        if name != "CL3":
            return arr
        data = json.loads(arr.dumps())
        data["lines"][0] = ["2/1", "0/1", "-1/1"]
        return geometry.from_json_dict(data)

    monkeypatch.setattr(verify, "catalog", tampered)
    monkeypatch.setattr(geometry, "catalog", tampered)
    classify.catalog_census.cache_clear()
    try:
        code, out, _ = run(capsys, "reproduce", "--filter", "freeness,census")
    finally:
        classify.catalog_census.cache_clear()
    assert code == 1
    assert "[FAIL] criterion 1 freeness" in out and "[FAIL] criterion 2 census" in out
    assert "CL3 seed 0: (2, 0, 0)" in out
