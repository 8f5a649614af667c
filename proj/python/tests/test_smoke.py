# Copyright 2026 The Guesswork Authors
#
# Licensed under the Apache License, Version 2.0 (the "License");
# you may not use this file except in compliance with the License.
# You may obtain a copy of the License at
#
#      http://www.apache.org/licenses/LICENSE-2.0
#
# Unless required by applicable law or agreed to in writing, software
# distributed under the License is distributed on an "AS IS" BASIS,
# WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
# See the License for the specific language governing permissions and
# limitations under the License.

import math

import numpy as np
import pytest

import guesswork as gw

TRINE = 2 - 1 / math.sqrt(3)
SIC = 2.5 - 0.5 * math.sqrt(5 / 3)
MUB = 3.5 - math.sqrt(35) / 6


def test_closed_form_values():
    trine = gw.generate_polygon_antiprism(3)
    assert gw.min_guesswork_qubit(trine, gw.identity_cost(3))["value"] == pytest.approx(TRINE, abs=1e-9)
    assert gw.min_guesswork_qubit(gw.generate_sic(), gw.identity_cost(4))["value"] == pytest.approx(SIC, abs=1e-9)
    report = gw.min_guesswork_qubit(gw.generate_mub(), gw.identity_cost(6))
    assert report["value"] == pytest.approx(MUB, abs=1e-9)
    assert report["method"] == "benevolent"
    assert sorted(report["numbering"]) == [1, 2, 3, 4, 5, 6]


def test_ensemble_from_numpy():
    e = gw.Ensemble.from_states([np.diag([0.5, 0.0]), np.diag([0.0, 0.5])])
    assert (e.size, e.dim) == (2, 2)
    assert e.prior == pytest.approx([0.5, 0.5])
    np.testing.assert_allclose(e.bloch, [[0, 0, 0.5], [0, 0, -0.5]], atol=1e-15)
    report = gw.min_guesswork_qubit(e, gw.identity_cost(2), method="brute")
    assert report["value"] == pytest.approx(1.0, abs=1e-12)
    assert report["numbering"] == [1, 2]
    with pytest.raises(gw.InputError):
        gw.Ensemble.from_states([np.diag([1.5, -0.5])])


def test_effective_operator_and_qap():
    e = gw.generate_random(5, seed=3)
    cost = gw.CostFunction([0.0, 4.0, 2.0, 1.0, 3.0])
    assert cost.is_balanced()
    n = [2, 5, 1, 4, 3]
    eff = gw.effective_operator(e, cost, n)
    assert abs(np.trace(eff)) < 1e-12
    v_sq = np.abs(np.linalg.eigvalsh(eff)).sum() ** 2
    assert v_sq == pytest.approx(4 * gw.qap_objective(e, cost, n), abs=1e-12)
    numbering, objective = gw.brute_force_solve(gw.cost_gram(cost), gw.bloch_gram(e))
    assert objective == pytest.approx(gw.qap_objective(e, cost, numbering), abs=1e-15)


def test_errors():
    with pytest.raises(gw.NotBalancedError):
        gw.min_guesswork_qubit(gw.generate_polygon_antiprism(3), gw.CostFunction([0.0, 1.0, 3.0]))
    with pytest.raises(gw.DimensionError):
        gw.min_guesswork_qubit(gw.generate_random(3, dim=3), gw.identity_cost(3))
    with pytest.raises(gw.CapExceededError):
        gw.min_guesswork_qubit(gw.generate_random(6), gw.identity_cost(6), method="brute", factorial_cap=4)


def test_benevolence_helpers():
    assert gw.zigzag_numbering(5) == [1, 5, 2, 4, 3]
    assert math.isinf(gw.antiprism_h_bound(2))
    assert gw.antiprism_h_bound(4) == pytest.approx(1 / math.sqrt(2))
    report = gw.is_benevolent(-gw.bloch_gram(gw.generate_sic()))
    assert report["is_benevolent"]
    tall = gw.generate_polygon_antiprism(4, gw.antiprism_h_bound(4) + 0.05)
    assert not gw.is_benevolent(-gw.bloch_gram(tall))["property1_ok"]


def test_general_and_simulate():
    e = gw.Ensemble.from_states([np.diag([0.5, 0, 0]), np.diag([0, 0.5, 0])])
    report = gw.min_guesswork_general(e, gw.identity_cost(2))
    assert report["value"] == pytest.approx(1.0, abs=1e-12)
    sim = gw.simulate(gw.generate_polygon_antiprism(3), gw.identity_cost(3), 200000, seed=42)
    assert abs(sim["estimate"] - TRINE) <= 4 * sim["std_error"]
    assert sim == gw.simulate(gw.generate_polygon_antiprism(3), gw.identity_cost(3), 200000, seed=42)
