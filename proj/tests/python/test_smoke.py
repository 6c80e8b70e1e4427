import json
import math
import os
import subprocess

import pytest

import transurf

SCHERK = {"f": {"family": "scherk", "lambda": 1}, "g": {"family": "scherk", "lambda": 1}}


def test_curvature_points():
    s = transurf.curvature({"f": "t^2", "g": "t^2"}, 0.0, 0.0)
    assert s["valid"]
    assert s["H"] == pytest.approx(2.0)
    assert s["K"] == pytest.approx(4.0)
    cyl = transurf.curvature({"f": "t^2", "g": "0"}, 1.0, 0.3)
    assert cyl["K"] == 0.0
    assert cyl["H"] == pytest.approx(1 / 5**1.5)
    lor = transurf.curvature({"ambient": "lorentz-spacelike", "f": "t^2/4", "g": "0"}, 0, 0)
    assert lor["H"] == pytest.approx(-0.25)


def test_scherk_samples_are_minimal():
    samples = transurf.sample(SCHERK, "-1:1:11,-1:1:11")
    assert len(samples) == 121
    assert max(abs(s["H"]) for s in samples) < 1e-10


def test_fit_verdicts():
    assert transurf.fit({"f": "t^2", "g": "t^2"}, "-1:1:21,-1:1:21")["verdict"] == "NotLinearWeingarten"
    assert transurf.fit(transurf.generate("cylinder"), "-1:1:9,-1:1:3")["verdict"] == "ConstantGaussCurvature"
    assert transurf.fit(SCHERK, "-1:1:9,-1:1:9")["verdict"] == "ConstantMeanCurvature"


def test_audit_and_verify():
    report = transurf.audit(7, 20)
    assert report["counts"]["GeneralLinearWeingarten"] == 0
    reports = transurf.verify("all", 42)
    assert reports and all(s["status"] == "pass" for r in reports for s in r["steps"])


def test_profile_integration():
    rows = transurf.integrate_profile(1.0, 0.5)
    assert abs(rows[-1][1] + math.log(math.cos(0.5))) < 1e-9


def test_mesh_counts():
    obj = transurf.mesh({"f": "0", "g": "0"}, "0:1:2,0:1:2")
    lines = obj.splitlines()
    assert sum(l.startswith("v ") for l in lines) == 4
    assert sum(l.startswith("f ") for l in lines) == 1


def test_errors_are_python_exceptions():
    with pytest.raises(ValueError):
        transurf.curvature({"f": "2*", "g": "0"}, 0, 0)
    with pytest.raises(ValueError):
        transurf.generate("scherk", 0.0)
    with pytest.raises(RuntimeError):
        transurf.sample({"ambient": "lorentz-spacelike", "f": "t", "g": "0"}, "0:1:2,0:1:2")


def test_in_process_cli():
    code, out, _ = transurf.run_cli("generate", "plane")
    assert code == 0
    assert json.loads(out) == {"ambient": "euclidean", "f": "0", "g": "0"}
    assert transurf.run_cli("generate", "scherk", "--lambda", "0")[0] == 2


@pytest.mark.skipif("TRANSURF_CLI" not in os.environ, reason="CLI binary path not provided")
def test_cli_binary_exit_codes():
    cli = os.environ["TRANSURF_CLI"]
    ok = subprocess.run([cli, "verify", "--suite", "c0"], capture_output=True, text=True)
    assert ok.returncode == 0
    assert json.loads(ok.stdout)["passed"] is True
    bad = subprocess.run([cli, "verify", "--suite", "c0", "--inject-mutation", "f-definition"], capture_output=True)
    assert bad.returncode == 1
    empty = subprocess.run([cli, "curvature", "--f", "t", "--ambient", "lorentz-spacelike", "--grid", "0:1:2,0:1:2"],
                           capture_output=True)
    assert empty.returncode == 3
