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

"""Minimum guesswork of quantum ensembles under balanced cost functions."""

import json

from ._core import (
    CapExceededError,
    CostFunction,
    DimensionError,
    Ensemble,
    InputError,
    NotBalancedError,
    NumericalError,
    SolverUnavailableError,
    antiprism_h_bound,
    bloch_gram,
    brute_force_solve,
    constant_overlap_check,
    cost_gram,
    effective_operator,
    generate_mub,
    generate_polygon_antiprism,
    generate_random,
    generate_sic,
    identity_cost,
    is_uniform_prior,
    qap_objective,
    zigzag_numbering,
)
from . import _core


def is_benevolent(matrix):
    """Benevolence report for a real symmetric matrix, as a dict."""
    return json.loads(_core.is_benevolent(matrix))


def min_guesswork_qubit(ensemble, cost, method="auto", threads=0, factorial_cap=None):
    """Report dict for a qubit ensemble with uniform prior."""
    return json.loads(_core.min_guesswork_qubit_json(ensemble, cost, method, threads, factorial_cap))


def min_guesswork_general(ensemble, cost, threads=0, factorial_cap=None):
    """Report dict, or None when the optimality condition fails."""
    text = _core.min_guesswork_general_json(ensemble, cost, threads, factorial_cap)
    return None if text is None else json.loads(text)


def simulate(ensemble, cost, samples, seed=0):
    """Monte Carlo estimate at the optimal qubit measurement."""
    return json.loads(_core.simulate_optimal_json(ensemble, cost, samples, seed))
