import json
import os
from pathlib import Path

import pytest

import rrbx

DATA = Path(os.environ.get("RRBX_DATA_DIR", Path(__file__).resolve().parents[2] / "data"))


def text(name):
    return (DATA / name).read_text()


def test_cli_validate():
    code, out, err = rrbx.run(["validate", "--input", str(DATA / "z1.rrb")])
    assert code == 0
    assert out == "rrb: valid\n"
    assert err == ""


def test_cli_json_is_deterministic():
    args = ["equiv", "--input", str(DATA / "afft_adjoint.rrb"), "--format", "json"]
    first, second = rrbx.run(args), rrbx.run(args)
    assert first == second
    cert = json.loads(first[1])
    assert cert["verdict"] == "equivalent"
    assert "zeta" in cert["witness"]


def test_validate_reports_tags():
    assert rrbx.validate(text("aff.rrb"), "afft") == []
    assert rrbx.validate(text("aff.rrb"), "afft_identity_t") == [("RB", [0, 1])]


def test_cohomology_of_z1():
    doc = text("z1_pair.rrb")
    assert rrbx.cohomology_dim(doc, "z1_coeff", 1) == 2
    assert rrbx.cohomology_dim(doc, "z1_coeff", 2) == 2
    assert rrbx.coboundary_matrix(doc, "z1_coeff", 1) == [["0", "0"], ["0", "0"]]


def test_coboundary_squares_to_zero():
    doc = text("afft_adjoint.rrb")
    rep = next(k for k, v in json.loads(doc)["objects"].items() if v["kind"] == "rrb-rep")
    from fractions import Fraction

    d1 = [[Fraction(x) for x in row] for row in rrbx.coboundary_matrix(doc, rep, 1)]
    d2 = [[Fraction(x) for x in row] for row in rrbx.coboundary_matrix(doc, rep, 2)]
    product = [[sum(d2[i][k] * d1[k][j] for k in range(len(d1))) for j in range(len(d1[0]))] for i in range(len(d2))]
    assert all(x == 0 for row in product for x in row)


def test_equivalence():
    assert rrbx.cocycles_equivalent(text("afft_adjoint.rrb"), "c", "c_shifted") is True


def test_errors_raise():
    with pytest.raises(rrbx.RrbxError):
        rrbx.cohomology_dim('{"version": 1, "field": "F_4"}', "x", 1)
    with pytest.raises(ValueError):
        rrbx.validate("{", "x")
