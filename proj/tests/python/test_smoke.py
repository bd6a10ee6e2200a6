# Copyright 2026 The fasp Authors
# SPDX-License-Identifier: Apache-2.0

import json
import math

import pytest

import fasp


def test_probabilities_sum_to_one():
    life = fasp.FuzzyLife(300, 1500)
    for p in (
        fasp.ssp_triprob(life, 5.8231, 251.1178),
        fasp.rgsp_min_triprob(life, 1e-6, 79.3124, 50),
        fasp.rgsp_max_triprob(life, 130.6584, 338.9876, 12),
        fasp.typeI_triprob(300, 236.8898, 236.8898, 33, 50),
    ):
        assert math.isclose(p.p_a + p.p_r + p.p_c, 1.0, abs_tol=1e-12)


def test_expected_life_bracketed():
    life = fasp.FuzzyLife(300, 15000)
    assert 299 < fasp.expected_y(life) < 301
    assert fasp.expected_y(life) <= fasp.expected_y_upper_bound(life)


def test_design_is_feasible_and_deterministic():
    a = fasp.design(lambda0=300, lambda1=50, a=1500, restarts=4)
    b = fasp.design(lambda0=300, lambda1=50, a=1500, restarts=4)
    assert a == b
    assert a["phi"] > 0
    assert a["t1"] < a["t2"]
    assert a["n"] is None


def test_crisp_baseline():
    d = fasp.crisp_baseline(lambda0=300, lambda1=50, restarts=4)
    assert d["objective"] == pytest.approx(654.1617, rel=0.02)


def test_bad_inputs_raise():
    with pytest.raises(fasp.DomainError):
        fasp.FuzzyLife(300, 100)
    with pytest.raises(fasp.DomainError):
        fasp.design(family="type1", lambda0=300, lambda1=200)


def test_case_study_dispositions():
    data = fasp.case_study_data()
    assert len(data) == 36
    assert fasp.dispose("rgsp_min", data, 4, 141, 20)["decision"] == "accept"
    assert fasp.dispose("rgsp_max", data, 203, 2630, 2)["decided_at"] == 1
    assert fasp.censored_mle(data, 13, 2000) == pytest.approx(3040.6667, abs=1e-4)
    with pytest.raises(fasp.InputError):
        fasp.dispose("ssp", [], 41, 3159)


def test_oracle_and_tables():
    reports = fasp.oracle(draws=20000, seed=42)
    assert len(reports) > 0
    assert all(r["pass"] for r in reports if r["method"] == "quadrature")
    tables = json.loads(fasp.verify_tables_json())
    assert len(tables["rows"]) == 80
