"""Smoke tests for the hkrees python module."""

import json

import pytest

import hkrees

CUBIC = {
    "characteristic": 2,
    "variables": ["x", "y"],
    "quotient_ideal": ["x^3+y^3"],
    "ideal": ["x"],
    "a": "-1",
    "b": "0",
    "e_range": [1, 3],
    "order": {"kind": "lex", "precedence": ["x", "y"]},
}


def test_reduced_groebner_cubic():
    basis = hkrees.reduced_groebner(
        2, ["x", "y"], ["x^3+y^3", "x^4", "y^4"], order="lex"
    )
    assert set(basis) == {"y^4", "x^3+y^3", "x*y^3"}


def test_normal_form():
    nf = hkrees.normal_form(2, ["x", "y"], "x^4", ["y^4", "x^3+y^3", "x*y^3"],
                            order="lex")
    assert nf == "0"


def test_local_length():
    assert hkrees.local_length(2, ["x", "y"], ["x^3+y^3"], ["x^4", "y^4"]) == 10
    assert hkrees.local_length(2, ["x", "y"], [], ["x"]) is None


def test_lucas_pair_fibonacci():
    out = hkrees.lucas_pair(5, ["x", "y"], [], "-1", "-1", 5)
    assert out["B_q"] == "0"
    assert out["bq_class"] == "ZERO"
    out = hkrees.lucas_pair(3, ["x", "y"], [], "-1", "-1", 9)
    assert out["B_q"] == "1"
    assert out["bq_class"] == "UNIT"


def test_hk_table_cubic_duplication():
    rows = hkrees.hk_table(json.dumps(CUBIC))
    assert [r["total"] for r in rows] == [6, 19, 42]
    assert all(r["bq_class"] == "UNIT" for r in rows)
    assert rows[1]["f_e"] == "19/4"


def test_report_csv_header():
    csv = hkrees.report_csv(json.dumps(CUBIC))
    lines = csv.strip().split("\n")
    assert lines[0] == "e,q,base,module,correction,total,f_e,bq_class"
    assert lines[1] == "1,2,4,4,2,6,3/1,UNIT"


def test_gb_dump():
    lines = hkrees.gb_dump(json.dumps(CUBIC), 8)
    assert lines == ["y^8", "x^2*y^6", "x^3+y^3"]


def test_oracle_check_artinian():
    cfg = {
        "characteristic": 2,
        "variables": ["x"],
        "quotient_ideal": ["x^3"],
        "ideal": ["x"],
        "a": "-1",
        "b": "0",
        "e_range": [1, 2],
    }
    rows = hkrees.oracle_check(json.dumps(cfg))
    assert all(r["match"] for r in rows)
    assert rows[0]["oracle"] == 3


def test_second_coeff_roundtrip():
    cfg = dict(CUBIC)
    cfg["e_range"] = [1, 4]
    report = hkrees.report_json(json.dumps(cfg))
    out = hkrees.second_coeff(report)
    assert out["period"] == 2
    assert out["alpha"] == "6"
    assert out["residuals"] == ["-6", "-5"]


def test_config_errors():
    bad = dict(CUBIC)
    bad["characteristic"] = 4
    with pytest.raises(hkrees.ConfigError):
        hkrees.hk_table(json.dumps(bad))
    empty = dict(CUBIC)
    empty["ideal"] = []
    with pytest.raises(hkrees.ConfigError):
        hkrees.hk_table(json.dumps(empty))
