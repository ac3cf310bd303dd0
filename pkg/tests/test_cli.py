import io
import json
import subprocess
import sys

import pytest

from artifact.cli import run

LEVI = '{"u_blocks":[[1,0]],"so_block":[3,1]}'


def call(*argv):
    out, err = io.StringIO(), io.StringIO()
    code = run(list(argv), stdout=out, stderr=err)
    text = out.getvalue()
    return code, (json.loads(text) if text.startswith("{") else text), err.getvalue()


def test_lr():
    code, out, _ = call("lr", "--lam", "2", "--mu", "1", "--nu", "1")
    assert code == 0 and out["lr_coefficient"] == 1 and out["method"]


def test_partition():
    code, out, _ = call("partition", "--parts", "3,1", "--n", "3", "--m", "5")
    assert code == 0
    assert out["conjugate"] == [2, 1, 1] and out["schur_dim"] == 15


def test_cocycle_verify():
    code, out, _ = call("cocycle", "verify", "--p", "2", "--q", "2", "--n", "1")
    assert code == 0
    assert out["matches_closed_form"] is True
    assert out["closed_form"] == out["value"]
    code, out, _ = call("cocycle", "verify", "--p", "4", "--q", "1", "--n", "2", "--a", "1,1")
    assert code == 0 and out["matches_closed_form"]


def test_arthur_exponents():
    code, out, _ = call("arthur", "exponents", "--levi", LEVI)
    assert code == 0 and out["exponents"] == ["2", "0", "0", "0", "0", "-2"]
    code, out, _ = call("arthur", "infchar", "--levi", LEVI)
    assert out["infinitesimal_character"] == ["2", "1", "0"] and out["regular"]


def test_arthur_param_json():
    param = '{"factors": [{"char": {"kind": "quadratic", "sign": 0}, "d": 1, "a": 4}], "m": 5}'
    code, out, _ = call("arthur", "infchar", "--param", param)
    assert code == 0 and out["infinitesimal_character"] == ["3/2", "1/2"]
    code, _, err = call("arthur", "infchar", "--param", "{not json")
    assert code == 2 and "JSON" in err


def test_poly_and_minor():
    code, out, _ = call("poly", "pluriharmonic", "--p", "2", "--n", "1", "--expr", "1*z[1,1]*z[2,1]")
    assert code == 0 and out["pluriharmonic"] is True
    code, out, _ = call("minor", "--p", "4", "--n", "2", "--k", "2")
    assert out["pluriharmonic"] is True
    code, _, _ = call("poly", "laplacian", "--p", "2", "--q", "1", "--n", "1", "--expr", "z[3,1]^2")
    assert code == 2


def test_harmonic_dim_and_cap(monkeypatch):
    code, out, _ = call("harmonic-dim", "--p", "4", "--n", "2", "--ell", "2")
    assert code == 0 and out["dimension"] == out["partition_sum"]
    monkeypatch.setenv("ARTIFACT_NULLSPACE_CAP", "3")
    code, _, err = call("harmonic-dim", "--p", "4", "--n", "2", "--ell", "2")
    assert code == 2 and "cap" in err


def test_branch_and_cauchy():
    code, out, _ = call("branch", "--mu", "2,1", "--p", "4", "--check")
    assert code == 0 and out["matches_character_oracle"]
    code, out, _ = call("cauchy", "--p", "2", "--q", "3", "--R", "3")
    assert out["dimension_sum"] == out["binomial"] == 20


def test_euler_and_vz():
    code, out, _ = call("euler", "--p", "2", "--q", "3")
    assert code == 0 and out["zero"] is True
    code, out, _ = call("vz", "rootcount", "--levi", LEVI)
    assert out["R"] == 1
    code, out, _ = call("vz", "cohomology", "--family", "so_n1_standard", "--n", "4")
    assert out["degrees"] == {"1": 1, "3": 1}
    code, _, _ = call("vz", "rootcount")
    assert code == 2


def test_verify_single_criterion():
    code, out, _ = call("verify", "--criterion", "4")
    assert code == 0 and out["passed"]
    code, text, _ = call("--format", "text", "verify", "--criterion", "1")
    assert code == 0 and text.startswith("[PASS] criterion 1")


def test_usage_errors():
    assert call("bogus")[0] == 2
    assert call("lr", "--lam", "x", "--mu", "1", "--nu", "1")[0] == 2
    assert call("verify")[0] == 2


def test_deterministic_output():
    a = call("arthur", "aj-param", "--levi", LEVI)
    b = call("arthur", "aj-param", "--levi", LEVI)
    assert a == b


def test_module_entry_point():
    proc = subprocess.run([sys.executable, "-m", "artifact", "lr", "--lam", "2,1", "--mu", "1", "--nu", "1,1"],
                          capture_output=True, text=True)
    assert proc.returncode == 0
    assert json.loads(proc.stdout)["lr_coefficient"] == 1
