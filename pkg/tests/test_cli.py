import io
import json
import subprocess
import sys

import pytest

from quatvieta.cli import dumps, run, selftest
from quatvieta.qpoly import QuatPolynomial

LINEAR = '{"side":"right","coefficients":[[0,0,1,0],[0,1,0,0]]}'
SPHERE = '{"side":"right","coefficients":[[1,0,0,0],[0,0,0,0],[1,0,0,0]]}'
ZERO_A0 = '{"side":"right","coefficients":[[0,0,0,0],[0,0,1,0],[0,1,0,0]]}'


def call(*argv):
    out = io.StringIO()
    code = run(list(argv), out)
    return code, out.getvalue()


def test_solve_linear():
    code, text = call("solve", LINEAR)
    assert code == 0
    [root] = json.loads(text)["roots"]
    assert root["type"] == "isolated" and root["multiplicity"] == 1
    assert root["point"] == pytest.approx([0, 0, 0, 1], abs=1e-15)


def test_solve_sphere():
    code, text = call("solve", SPHERE, "--check-vieta")
    doc = json.loads(text)
    assert code == 0
    [root] = doc["roots"]
    assert root["type"] == "spherical" and root["multiplicity"] == 1
    assert root["x0"] == pytest.approx(0, abs=1e-15) and root["r"] == pytest.approx(1, rel=1e-15)
    assert doc["accounting"]["balanced"] is True
    assert doc["vieta"]["product_moduli"]["rhs"] == 1.0


def test_vieta_strict_precondition():
    assert call("vieta", ZERO_A0)[0] == 0
    assert call("vieta", ZERO_A0, "--strict")[0] == 5


@pytest.mark.parametrize("argv", [
    ("solve", "not json"),
    ("solve", '{"side":"right","coefficients":[[0,0,0,0]]}'),
    ("solve", '{"side":"sideways","coefficients":[[1,0,0,0]]}'),
    ("solve", "--tol-residual", "-1", SPHERE),
    ("power", "--w", "[1,2]", "--n", "3"),
    ("bogus",),
])
def test_input_errors(argv):
    assert call(*argv)[0] == 2


def test_no_convergence_exit():
    assert call("solve", SPHERE.replace("[0,0,0,0]", "[0.3,0,0,0]"), "--max-iter", "1")[0] == 3


def test_residual_exit():
    _, generated = call("gen", "--seed", "1")
    assert call("solve", generated)[0] == 0
    assert call("solve", generated, "--tol-residual", "1e-300")[0] == 4


def test_text_output():
    code, text = call("solve", SPHERE, "--text", "--check-vieta")
    assert code == 0 and "spherical" in text and "accounting 0 + 0 + 2*1 = 2" in text


def test_basic_and_power():
    code, text = call("basic", LINEAR, "--roots")
    doc = json.loads(text)
    assert doc["basic_polynomial"] == [1.0, 0.0, 1.0] and len(doc["clusters"]) == 1
    code, text = call("power", "--w", "[1,1,0,0]", "--n", "5")
    doc = json.loads(text)
    assert doc["coefficients"][4]["Q"] == -4.0
    assert doc["power"] == [-4.0, -4.0, 0.0, 0.0]


def test_gen_round_trip(tmp_path):
    code, text = call("gen", "--seed", "3")
    assert code == 0
    doc = json.loads(text)
    poly = QuatPolynomial.from_json(doc["polynomial"])
    assert QuatPolynomial.from_json(json.loads(dumps(poly.to_json()))) == poly
    path = tmp_path / "p.json"
    path.write_text(text)
    code, solved = call("solve", "-i", str(path))
    assert code == 0 and json.loads(solved)["input"] == json.loads(dumps(poly.to_json()))
    assert call("gen", "--seed", "3", "--pure")[0] == 0


def test_determinism():
    assert call("solve", SPHERE, "--seed", "9") == call("solve", SPHERE, "--seed", "9")
    assert call("gen", "--seed", "4") == call("gen", "--seed", "4")


def test_selftest():
    code, text = call("selftest", "--seed", "42", "--count", "100")
    doc = json.loads(text)
    assert code == 0 and doc["passed"] == 100 and doc["failed"] == 0
    code, text = call("selftest", "--seed", "42", "--count", "0")
    assert code == 0 and json.loads(text)["passed"] == 0


def test_selftest_detects_broken_recurrence(monkeypatch):
    from quatvieta import kernels

    def flipped(coeffs, x0, rho):
        s, t = original(coeffs, x0, rho)
        return tuple(-x for x in s), t
    original = kernels.qp_sums
    monkeypatch.setattr(kernels, "qp_sums", flipped)
    assert selftest(42, 20)["failed"] > 0


def test_stdin_and_module_entry():
    proc = subprocess.run([sys.executable, "-m", "quatvieta", "solve", "-i", "-"],
                          input=LINEAR, capture_output=True, text=True)
    assert proc.returncode == 0
    assert json.loads(proc.stdout)["degree"] == 1


def test_dumps_precision():
    assert dumps(0.1) == "0.10000000000000001"
    assert json.loads(dumps({"a": [1, 2.5, None, True]})) == {"a": [1, 2.5, None, True]}
