"""Command-line interface: JSON schema, exit codes, and round-trips."""

import io
import json
from contextlib import redirect_stderr, redirect_stdout

import pytest

from macdonald_hc import cli
from macdonald_hc.jsonio import diffop_from_json, poly_from_json
from macdonald_hc.macops import MacdonaldOperator, special_coweights
from macdonald_hc.params import generic_labels
from macdonald_hc.rootdata import build_root_datum


def run_cli(argv):
    out = io.StringIO()
    err = io.StringIO()
    with redirect_stdout(out), redirect_stderr(err):
        try:
            code = cli.main(argv)
        except SystemExit as exc:
            code = exc.code
    text = out.getvalue()
    doc = json.loads(text) if text.strip().startswith("{") else None
    return code, doc


def test_datum_schema():
    code, doc = run_cli(["datum", "--case", "a", "--type", "a", "--rank", "2"])
    assert code == 0
    assert doc["schema"] == "macdonald-hc/1"
    assert doc["weyl_order"] == 6
    assert doc["rank"] == 2


def test_unsupported_datum_exits_2():
    code, doc = run_cli(["datum", "--case", "b", "--type", "b", "--rank", "2"])
    assert code == 2
    assert "error" in doc


def test_bad_flag_exits_2():
    code, _ = run_cli(["datum", "--case", "z", "--type", "a", "--rank", "1"])
    assert code == 2


def test_mdop_roundtrip():
    code, doc = run_cli(["mdop", "--case", "a", "--type", "a", "--rank", "1"])
    assert code == 0
    assert doc["routes_agree"] is True
    d = build_root_datum("a", "a", 1)
    labels = generic_labels(d)
    mo = MacdonaldOperator(labels, special_coweights(d)[0][1])
    back = diffop_from_json(labels, doc["operator"])
    assert back == mo.op
    sym = poly_from_json(labels, doc["symbol"])
    assert sym == mo.eigen_poly()


def test_mdpoly_zero_weight():
    code, doc = run_cli(["mdpoly", "--case", "a", "--type", "a",
                         "--rank", "1", "--weight", "0"])
    assert code == 0
    assert len(doc["coeffs"]) == 1
    assert doc["coeffs"][0]["coeff"]["str"] == "1"


def test_mdpoly_bad_weight_exits_2():
    code, doc = run_cli(["mdpoly", "--case", "a", "--type", "a",
                         "--rank", "1", "--weight", "-2"])
    assert code == 2


def test_hcseries_formal():
    code, doc = run_cli(["hcseries", "--case", "a", "--type", "a",
                         "--rank", "1", "--height", "3"])
    assert code == 0
    assert doc["mode"] == "formal"
    zero = [g for g in doc["gamma"] if g["x"] == [0]]
    assert len(zero) == 1


def test_hcseries_specialized_mode():
    code, doc = run_cli(["hcseries", "--case", "a", "--type", "a",
                         "--rank", "1", "--height", "2",
                         "--mode", "specialized", "--k", "len2=2",
                         "--specialize", "3"])
    assert code == 0
    assert doc["mode"] == "specialized"
    assert doc["spectral_point"] == ["3/2"]


def test_verify_pass_and_fail_codes():
    code, doc = run_cli(["verify", "rankone", "--case", "a", "--type", "a",
                         "--rank", "1"])
    assert code == 0
    assert doc["pass"] is True
    code, doc = run_cli(["verify", "baker", "--case", "a", "--type", "a",
                         "--rank", "1"])
    assert code == 2  # baker requires specialized labels


def test_verify_baker_specialized():
    code, doc = run_cli(["verify", "baker", "--case", "a", "--type", "a",
                         "--rank", "1", "--mode", "specialized",
                         "--k", "len2=-1"])
    assert code == 0
    assert doc["pass"] is True


def test_verify_hecke_small_radius():
    code, doc = run_cli(["verify", "hecke", "--case", "c", "--type", "c",
                         "--rank", "1", "--radius", "2"])
    assert code == 0
    assert doc["pass"] is True
