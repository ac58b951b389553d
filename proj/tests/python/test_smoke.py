import json
import math
import os

import pytest

import qortho

P = qortho.QParams(0.5, 0.5, -0.7)


def test_params():
    assert P.l == pytest.approx(1.0)
    assert "q=0.5" in repr(P)
    with pytest.raises(ValueError, match="b must be negative"):
        qortho.QParams(0.5, 0.5, 0.7)
    assert qortho.QParams.from_l(0.5, 1.0, -0.7).a == pytest.approx(0.5)


def test_series():
    assert qortho.q_pochhammer(0.5, 0.5, 2) == pytest.approx(0.375)
    assert qortho.jackson_Eq(-1.0, 0.5) == pytest.approx(0.0, abs=1e-12)
    assert qortho.q_number(2.0, 0.25) == pytest.approx(2.5)


def test_polynomials_agree():
    x = P.a * P.q**3
    rec = qortho.big_q_laguerre_recurrence(10, x, P)
    gen = qortho.big_q_laguerre_generating(10, x, P)
    for n in range(11):
        s = qortho.big_q_laguerre(n, x, P)
        assert abs(s - rec[n]) <= 1e-10 * max(1, abs(s))
        assert abs(s - gen[n]) <= 1e-10 * max(1, abs(s))
    lhs, rhs = qortho.q_inverse_meixner_relation(2, 2.0, 2.0, 0.3, 0.5)
    assert lhs == pytest.approx(rhs, rel=1e-11)
    value, tail, converged = qortho.generating_series(x, 0.1, P, 60)
    assert converged
    assert value == pytest.approx(qortho.generating_closed(x, 0.1, P), rel=1e-10)


def test_operators():
    diag, off = qortho.build_A(P, 200)
    assert diag[0] == pytest.approx(-0.0125)
    eig = qortho.eig_tridiagonal(diag, off)
    upper, lower = qortho.spectrum_points(P, 3)
    assert upper[0] == 0.25 and lower[0] == pytest.approx(-0.35)
    for x in upper + lower:
        assert min(abs(e - x) for e in eig) < 1e-8
    coeffs = qortho.eigen_coefficients(0.25, P, 150)
    c0 = qortho.normalization_c(0, P)
    assert c0**2 * sum(v * v for v in coeffs) == pytest.approx(1.0, abs=1e-8)


@pytest.mark.parametrize(
    "name",
    [
        "verify_big_laguerre_orthogonality",
        "verify_unitarity_rows",
        "verify_unitarity_columns",
        "verify_dual_ff",
        "verify_dual_gg",
        "verify_dual_fg",
        "verify_meixner_orthogonality",
        "verify_negative_b_meixner_orthogonality",
        "verify_Eq_zero_identity",
        "verify_biorthogonality",
    ],
)
def test_verifiers(name):
    for i, j in [(0, 0), (1, 3), (2, 2)]:
        r = getattr(qortho, name)(i, j, P)
        assert r["status"] == "passed", r
        assert r["passed"]


def test_sears_and_precision():
    r = qortho.verify_identity_3637(P, precision="extended")
    assert r["status"] == "passed"
    assert r["precision"] != "double"
    with pytest.raises(ValueError):
        qortho.verify_identity_3637(P, precision="quad")


def test_limits():
    res = qortho.limit_polynomial_check(3, 0.4)
    assert res["order"] >= 0.9
    assert res["records"][-1]["identity_id"] == "limit-polynomial-rate"
    assert qortho.classical_eigenfunction(0.3, 0.0, 1.0) == 1.0
    assert qortho.classical_operator_check(0.25, 0.2, 1.0)["passed"]


def test_run_in_process():
    code, out, err = qortho.run(["verify", "--identity", "sears", "--no-timestamp"])
    assert code == 0
    assert "passed 1" in err
    doc = json.loads(out)
    assert doc["summary"] == {"passed": 1, "failed": 0, "inconclusive": 0}
    schema_path = os.environ.get("QORTHO_SCHEMA")
    if schema_path:
        jsonschema = pytest.importorskip("jsonschema")
        jsonschema.validate(doc, json.load(open(schema_path)))
    assert qortho.run(["verify", "--b", "0.7"])[0] == 64


def test_nan_serialized_as_null():
    code, out, _ = qortho.run(["limit", "--index-max", "0", "--no-timestamp"])
    assert code == 0
    doc = json.loads(out)
    rate = [r for r in doc["records"] if r["identity_id"] == "limit-polynomial-rate"]
    assert rate and rate[0]["lhs"] is None
    assert all(r["rhs"] is None or math.isfinite(r["rhs"]) for r in doc["records"])
