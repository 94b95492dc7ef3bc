import io
import json

import pytest

from qknot.cli import EXIT_FAIL, EXIT_OK, EXIT_USAGE, run
from qknot.cyclotomic import cyclotomic_twist
from qknot.poly import parse
from qknot.serialize import poly_from_obj


def call(*argv):
    out = io.StringIO()
    code = run(list(argv), out)
    return code, out.getvalue()


def test_cpoly_nc_json():
    code, text = call("cpoly", "-p", "1", "--nc", "--format", "json")
    assert code == EXIT_OK
    assert poly_from_obj(json.loads(text)) == parse("E + q^2*Q")
    assert json.loads(text)["vars"] == ["E", "Q", "q"]


def test_cpoly_commutative():
    code, text = call("cpoly", "-p", "1")
    assert code == EXIT_OK
    assert poly_from_obj(json.loads(text)) == parse("E + Q")


def test_cpoly_latex_needs_nc():
    assert call("cpoly", "-p", "2", "--format", "latex")[0] == EXIT_USAGE
    code, text = call("cpoly", "-p", "2", "--nc", "--format", "latex")
    assert code == EXIT_OK and "\\" in text


def test_cyclotomic():
    code, text = call("cyclotomic", "-p", "2", "-n", "3")
    assert code == EXIT_OK
    assert poly_from_obj(json.loads(text)) == cyclotomic_twist(2, 3)


def test_jones_rejects_n0():
    assert call("jones", "-p", "1", "-n", "0")[0] == EXIT_USAGE
    assert call("jones", "-p", "1", "-n", "2")[0] == EXIT_OK


def test_apoly():
    code, text = call("apoly", "-p", "1")
    assert code == EXIT_OK
    assert poly_from_obj(json.loads(text)) == parse("L + M^3")


@pytest.mark.parametrize("argv", [["bogus"], ["cpoly"], ["verify", "nosuch"], ["telescope", "--term", "twist:x"],
                                  ["telescope", "--term", "{"], ["telescope", "--term", "qbinomial", "--order", "-1"]])
def test_usage_errors(argv):
    assert call(*argv)[0] == EXIT_USAGE


def test_verify_appendix():
    code, text = call("verify", "appendix")
    assert code == EXIT_OK
    assert "6 pass, 0 fail" in text


def test_verify_reports_xfail(monkeypatch):
    monkeypatch.setenv("QKNOT_PMAX", "1")
    code, text = call("verify", "annihilation", "-v")
    assert code == EXIT_OK
    assert "[xfail] C_0 J^_0 at n=0" in text
    assert "C_2" not in text


def test_telescope_verify_only():
    code, text = call("telescope", "--term", "twist:1", "--verify-only")
    assert code == EXIT_OK
    assert json.loads(text) == {"term": "twist:1", "certificate": True}


def test_telescope_not_found():
    code, text = call("telescope", "--term", "twist:1", "--order", "1", "--kdeg", "1")
    assert code == EXIT_FAIL
    assert json.loads(text)["found"] is False


def test_telescope_found():
    code, text = call("telescope", "--term", "qbinomial", "--order", "1", "--kdeg", "1")
    assert code == EXIT_OK
    assert json.loads(text)["found"] is True


def test_table():
    code, text = call("table", "--appendix", "--format", "matrix")
    assert code == EXIT_OK and text.strip()
