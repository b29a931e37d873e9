"""Smoke tests for the python surface of the C++ core."""

import json

import titszeta as tz


def test_q_binomials():
    assert tz.q_binomial(2, 1, 2) == "3"
    assert tz.q_binomial(4, 2, 2) == "35"
    assert tz.q_binomial(5, 2, 3) == "1210"
    assert tz.q_multinomial(4, [1, 1, 2], 2) == "105"


def test_kostka():
    assert tz.kostka([2, 1], [1, 1, 1]) == "2"
    assert tz.kostka([10, 2], [6, 4, 2]) == "3"
    assert tz.kostka_ssyt([3], [3]) == "1"


def test_rep_constants():
    assert tz.deg_psi([2, 1]) == "2"
    assert tz.f_lambda([2, 1]) == "3"
    assert tz.d_lambda([1, 1, 1], 2) == "8"


def test_x0_formula_matches_brute_force():
    rep = tz.verify_x0(3, 2, 1)
    assert rep["verdict"] == "match"
    assert rep["formula"]["pretty"] == "(1 - 2*u^2)^6 (1 - 16*u^2)"
    assert rep["brute"] == rep["formula"]["expanded"]
    parsed = json.loads(rep["json"])
    assert parsed["kind"] == "zeta"
    assert parsed["verdict"] == "match"


def test_x2_special_matches_brute_force():
    rep = tz.verify_x2(3, 2, 1, 2)
    assert rep["verdict"] == "match"
    assert len(rep["brute"]) == 43  # degree 42 polynomial


def test_building_and_product():
    b = tz.building_zeta(2, 5)
    assert b["expanded"] == ["1"]
    rep = tz.verify_product([2, 2], 2)
    assert rep["verdict"] == "match"
    assert rep["counts"][3] == "72"


def test_geodesic_counts():
    counts = tz.geodesic_cycle_counts(3, 2, 6)
    assert counts == ["0", "0", "0", "0", "0", "336"]


def test_springer():
    rep = tz.verify_springer(3, 2)
    assert rep["central"] and rep["annihilator_zero"] and rep["ranks_match"]
    eigs = {e["eigenvalue"]: e["multiplicity"] for e in rep["spectrum"]}
    assert eigs == {"64": "1", "8": "4", "1": "1"}


def test_group_algebra_trace():
    # phi_(3,3)(e_mu w1 e_mu) = 1 for mu = (2,2,2), w1 = (1,3,5)(2,4,6)
    w1 = [2, 3, 4, 5, 0, 1]
    assert tz.group_algebra_trace(6, [2, 2, 2], w1, [3, 3, 0]) == "1"
    assert tz.group_algebra_trace(6, [2, 2, 2], w1, [4, 2, 0]) == "0"
