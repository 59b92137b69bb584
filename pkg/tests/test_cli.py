import csv
import json
import math

import pytest

from evanescent import cli


def run(tmp_path, *args, name="out"):
    path = tmp_path / name
    code = cli.main([*args, "--out", str(path)])
    return code, path


def read_csv(path):
    lines = [l for l in path.read_text().splitlines() if not l.startswith("#")]
    return list(csv.DictReader(lines))


def test_goos_scan_columns(tmp_path):
    code, path = run(tmp_path, "--scenario", "goos-scan", "--n", "1.5", "--k", "100", "--samples", "50")
    assert code == 0
    rows = read_csv(path)
    assert list(rows[0]) == ["theta_i", "delta", "dDelta_dTheta", "X_bar", "D"]
    assert len(rows) == 50
    tc = math.asin(1 / 1.5)
    assert float(rows[0]["theta_i"]) == pytest.approx(tc + 0.01)
    assert float(rows[-1]["theta_i"]) == pytest.approx(math.pi / 2 - 0.01)
    for r in rows:
        assert float(r["D"]) == pytest.approx(float(r["X_bar"]) * math.cos(float(r["theta_i"])))


def test_units_raw_versus_lambda(tmp_path):
    _, a = run(tmp_path, "--scenario", "goos-scan", "--samples", "3", name="a")
    _, b = run(tmp_path, "--scenario", "goos-scan", "--samples", "3", "--units", "raw", name="b")
    lam = 2 * math.pi / 100
    for ra, rb in zip(read_csv(a), read_csv(b)):
        assert float(ra["D"]) * lam == pytest.approx(float(rb["D"]), rel=1e-14)


def test_airy_sectors(tmp_path):
    code, path = run(tmp_path, "--scenario", "airy-sectors")
    assert code == 0
    rows = read_csv(path)
    assert len(rows) == 360
    assert sum(r["sector"] == "stokes-ray" for r in rows) == 2
    errs = [float(r["rel_err"]) for r in rows if r["sector"] != "stokes-ray"]
    assert max(errs) < 1e-6


def test_stokes_demo_metadata(tmp_path):
    code, path = run(tmp_path, "--scenario", "stokes-demo", "--format", "json", "--samples", "24")
    assert code == 0
    doc = json.loads(path.read_text())
    meas = complex(*doc["metadata"]["borel_jump_measured"])
    pred = complex(*doc["metadata"]["borel_jump_predicted"])
    assert abs(meas - pred) <= 1e-8 * abs(pred)
    un = [r[-1] for r in doc["rows"] if r[-1] is not None]
    assert max(un) > 1e-2


def test_field_map_and_classify_map(tmp_path):
    code, path = run(tmp_path, "--scenario", "field-map", "--grid=-1:1:5,-1:1:4")
    assert code == 0
    rows = read_csv(path)
    assert len(rows) == 20
    assert {r["region"] for r in rows} == {"illuminated", "shadow"}
    code, path = run(tmp_path, "--scenario", "classify-map", "--grid=-1:1:3,-1:1:3", name="c")
    assert code == 0
    kinds = {(float(r["y"]) > 0) - (float(r["y"]) < 0): r["type"] for r in read_csv(path)}
    assert kinds == {1: "hyperbolic", 0: "parabolic", -1: "elliptic"}


def test_field_map_helmholtz_needs_resolution(tmp_path):
    code, _ = run(tmp_path, "--scenario", "field-map", "--grid=-1:1:5,-1:1:4", "--helmholtz")
    assert code == cli.EXIT_DOMAIN
    code, path = run(tmp_path, "--scenario", "field-map", "--grid=-1:1:41,0.5:1.5:21", "--helmholtz",
                     "--format", "json", name="h")
    assert code == 0
    assert json.loads(path.read_text())["metadata"]["helmholtz_residual_illuminated"] < 1e-10


def test_deterministic_and_round_trip(tmp_path):
    args = ("--scenario", "field-map", "--grid=-1:1:7,-1:1:6", "--profile", "gaussian:0,0.5")
    _, a = run(tmp_path, *args, name="a.csv")
    _, b = run(tmp_path, *args, name="b.csv")
    assert a.read_bytes() == b.read_bytes()
    assert b"config_sha256" in a.read_bytes()
    _, j = run(tmp_path, *args, "--format", "json", name="c.json")
    doc = json.loads(j.read_text())
    csv_rows = read_csv(a)
    for row, jrow in zip(csv_rows, doc["rows"]):
        assert float(row["psi_re"]) == jrow[3]
        assert float(row["psi_im"]) == jrow[4]


def test_config_file_and_override(tmp_path):
    conf = tmp_path / "run.json"
    conf.write_text(json.dumps({"scenario": "goos-scan", "n": 2.0, "samples": 4, "theta_i_deg": 50}))
    cfg = cli.resolve_config(["--config", str(conf), "--n", "1.5"])
    assert cfg.n == 1.5 and cfg.samples == 4
    assert cfg.theta_i == pytest.approx(math.radians(50))
    cfg = cli.resolve_config(["--config", str(conf), "--theta-i", "1.0"])
    assert cfg.theta_i == 1.0


def test_tolerance_overrides():
    cfg = cli.resolve_config(["--tol", "grazing=1e-3", "--tol", "crit=1e-10"])
    assert cfg.tol == {"crit": 1e-10, "grazing": 1e-3}


@pytest.mark.parametrize("args,code", [
    (["--scenario", "nope"], cli.EXIT_CONFIG),
    (["--grid", "1:2"], cli.EXIT_CONFIG),
    (["--tol", "bogus=1"], cli.EXIT_CONFIG),
    (["--tol", "grazing"], cli.EXIT_CONFIG),
    (["--theta-i", "1", "--theta-i-deg", "40"], cli.EXIT_CONFIG),
    (["--scenario", "goos-scan", "--n", "0.8"], cli.EXIT_DOMAIN),
    (["--scenario", "field-map", "--theta-i", "3"], cli.EXIT_DOMAIN),
    (["--scenario", "goos-scan", "--out", "/nonexistent-dir/x.csv"], cli.EXIT_IO),
])
def test_exit_codes(args, code, capsys):
    assert cli.main(args) == code
    assert "evanescent:" in capsys.readouterr().err


def test_bad_config_file(tmp_path):
    p = tmp_path / "bad.json"
    p.write_text("{not json")
    assert cli.main(["--config", str(p)]) == cli.EXIT_CONFIG
    p.write_text(json.dumps({"colour": "red"}))
    assert cli.main(["--config", str(p)]) == cli.EXIT_CONFIG


def test_tolerance_override_restored():
    from evanescent import eikonal
    before = eikonal._CRIT_TOL
    cli.main(["--scenario", "goos-scan", "--samples", "2", "--tol", "crit=1e-6", "--out", "/dev/null"])
    assert eikonal._CRIT_TOL == before


def test_verify_reports_every_criterion(tmp_path):
    code, path = run(tmp_path, "--scenario", "verify", "--format", "json")
    doc = json.loads(path.read_text())
    assert [r[0] for r in doc["rows"]] == list(range(1, 15))
    failed = [r[0] for r in doc["rows"] if r[2] == "fail"]
    # nonzero exactly when some criterion fails
    assert code == (cli.EXIT_TOLERANCE if failed else cli.EXIT_OK)
    assert doc["metadata"]["passed"] == 14 - len(failed)
