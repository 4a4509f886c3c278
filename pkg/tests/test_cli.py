"""Command line interface: output shapes and exit codes."""

import json

import pytest

from latconf.cli import main


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr().out
    return code, out


def run_json(capsys, *argv):
    code, out = run(capsys, *argv)
    return code, json.loads(out)


def test_disc_form_d6(capsys):
    code, doc = run_json(capsys, "lattice", "disc-form", "--name", "D6")
    assert code == 0
    assert doc["orders"] == [2, 2]
    assert doc["bilinear"] == [["0", "1/2"], ["1/2", "1/2"]]


def test_index_formula(capsys):
    code, doc = run_json(
        capsys, "lattice", "index-formula", "--ell2-base", "0",
        "--ell2-cover", "2", "--rho", "7",
    )
    assert code == 0 and doc == {"exponent": 5}


def test_stability_unstable_witness(capsys):
    config = json.dumps([
        [1, 0, 1, 1, 1, 0], [0, 1, 1, 2, 3, 0], [0, 0, 0, 0, 0, 1]
    ])
    code, doc = run_json(capsys, "config", "stability", "--config", config)
    assert code == 0
    assert doc["status"] == "Unstable"
    assert doc["stratum"] == "141"


def test_plucker_exact_strings(capsys):
    config = json.dumps([
        [1, 0, 0, 1, 2, 3], [0, 1, 0, 1, 5, 7], [0, 0, 1, 1, 11, 13]
    ])
    code, doc = run_json(capsys, "config", "plucker", "--config", config)
    assert code == 0
    minors = doc["minors"]
    assert len(minors) == 20
    assert minors["0,1,2"] == "1"
    assert all(isinstance(v, str) for v in minors.values())


def test_period_rank_shape(capsys):
    code, doc = run_json(
        capsys, "jacobian", "period-rank", "--kappa", "3", "--seed", "5"
    )
    assert code == 0
    assert doc == {
        "dim_R10": 6, "dim_target": [4, 2], "rank": 4, "kernel_dim": 2
    }


def test_domain_error_exit_1(capsys):
    # non-isotropic vector: domain error, JSON error document, exit 1
    code, doc = run_json(
        capsys, "lattice", "classify-isotropic", "--vector", "[1,0,0,0,0,0]"
    )
    assert code == 1
    assert doc["error"]["kind"] == "NotIsotropic"


def test_usage_error_exit_2(capsys):
    code, doc = run_json(
        capsys, "config", "stability", "--config", "[[\"x\",1],[2,3]]"
    )
    assert code == 2
    assert doc["error"]["kind"] == "UsageError"


def test_bad_flag_exit_2(capsys):
    code = main(["lattice", "no-such-subcommand"])
    capsys.readouterr()
    assert code == 2


def test_verify_filter_deterministic(capsys, tmp_path):
    out_file = tmp_path / "report.json"
    code1, text1 = run(
        capsys, "verify", "--filter", "f2-census", "--json", str(out_file)
    )
    doc1 = json.loads(out_file.read_text())
    code2, text2 = run(
        capsys, "verify", "--filter", "f2-census", "--json", str(out_file)
    )
    doc2 = json.loads(out_file.read_text())
    assert code1 == code2 == 0
    assert text1 == text2
    doc1.pop("elapsed_seconds", None)
    doc2.pop("elapsed_seconds", None)
    for d in (doc1, doc2):
        for c in d.get("checks", []):
            c.pop("elapsed_seconds", None)
    assert doc1 == doc2
    statuses = {c["id"]: c["status"] for c in doc1["checks"]}
    assert statuses["f2-census"] == "Pass"
    assert all(
        s == "Skipped" for i, s in statuses.items() if i != "f2-census"
    )
