import json

import pytest

import horadam


def test_term_values():
    assert horadam.term(0, 1, 1, -1, "w", 10) == "55"
    assert horadam.term(0, 1, 1, -1, "h", 6, evaluator="matrix") == "18"
    assert horadam.term(0, 1, 1, -1, "u", -3) == "2"
    assert horadam.term(0, 1, 1, 2, "u", -2) == "-1/4"


def test_terms_window():
    assert horadam.terms(0, 1, 1, -1, "h", 0, 6) == ["2", "1", "3", "4", "7", "11", "18"]


def test_term_errors():
    with pytest.raises(ValueError):
        horadam.term(0, 1, 1, -1, "x", 3)
    with pytest.raises(ArithmeticError):
        horadam.term(1, 2, 3, 0, "w", -1)


def test_gf_matches_terms():
    assert horadam.gf_coefficients(0, 1, 1, -2, 4) == ["2", "1", "5", "7"]


def test_classify():
    assert horadam.classify(0, 1, 2, -1) == "Pell / Pell-Lucas"
    assert horadam.classify(1, 1, 1, 1) is None


def test_identity_catalog():
    ids = horadam.identity_ids()
    assert "cassini" in ids and len(ids) == 52
    info = horadam.identity_info("cassini")
    assert info["status"] == "CONFIRMED"
    assert info["indices"] == ["n"]
    assert horadam.identity_info("neg-u-printed")["paired"] == "neg-u-corrected"


def test_check_verdicts():
    v = horadam.check("cassini", 0, 1, 1, -1, {"n": 2})
    assert v["evaluated"] and v["holds"] and v["lhs"] == "-5"
    v = horadam.check("neg-u-printed", 0, 1, 1, -1, {"n": 3})
    assert v["evaluated"] and not v["holds"]
    v = horadam.check("sum-linear", 1, 1, 3, 2, {"n": 2})
    assert not v["evaluated"] and "p - q - 1" in v["skip_reason"]


def test_de_moivre():
    v = horadam.de_moivre(0, 1, 1, -1, 2, -2)
    assert v["evaluated"] and v["holds"]
    v = horadam.de_moivre(0, 1, 2, 1, 1, 1)
    assert not v["evaluated"] and "repeated root" in v["skip_reason"]


def test_pythagorean_triple():
    t = horadam.pythagorean_triple(0, 1, 1, -1, 0)
    assert t["primitive"] == ["3", "4", "5"]


def test_audit_json():
    report = json.loads(
        horadam.audit_json(
            ["cassini"], a=(0, 0), b=(1, 1), p=(1, 1), q=(-1, -1), n=(-2, 4)
        )
    )
    assert report["statuses_reproduced"] is True
    assert report["ids"][0]["failed"] == 0


def test_symbolic():
    assert horadam.sym_term("h", 2) == "-a*p*q + b*p^2 - 2*b*q"
    assert "w[0] = a" in horadam.sym_table(1)
    assert horadam.sym_verify("cassini", {"n": 2})["proven"] is True
    assert horadam.sym_verify("neg-u-printed", {"n": 3})["proven"] is False
