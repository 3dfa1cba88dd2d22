# Copyright 2026 The bewit Authors
#
# Licensed under the Apache License, Version 2.0 (the "License");
# you may not use this file except in compliance with the License.
# You may obtain a copy of the License at
#
#     http://www.apache.org/licenses/LICENSE-2.0
#
# Unless required by applicable law or agreed to in writing, software
# distributed under the License is distributed on an "AS IS" BASIS,
# WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
# See the License for the specific language governing permissions and
# limitations under the License.

import math

import numpy as np
import pytest

import bewit

KAY_SPEC = "i=1,s=-,jk=5-4,lm=7-6"


def test_kay_state_is_ppt_with_expected_correlations():
    rho = bewit.kay(2.0)
    assert rho.shape == (8, 8)
    assert np.allclose(rho, rho.conj().T)
    assert bewit.ppt_report(rho)["is_ppt"]
    assert not bewit.ppt_report(bewit.kay(1.0))["is_ppt"]
    r = bewit.r_vector(rho)
    assert r["IZZ"] == pytest.approx(1 / 3, abs=1e-12)
    assert r["XYY"] == pytest.approx(-1 / 3, abs=1e-12)


def test_probabilities_round_trip():
    p = bewit.category_state(2)
    back = bewit.probs_from_density(bewit.density_matrix(p))
    assert np.allclose(back, p, atol=1e-12)


def test_witness_values():
    r = bewit.r_vector(bewit.kay(2.0))
    lin = bewit.evaluate_witness(r, KAY_SPEC, "fixed", math.pi / 4)
    assert lin["value"] == pytest.approx(-0.2761, abs=5e-4)
    env = bewit.evaluate_witness(r, KAY_SPEC, "envelope")
    assert env["value"] == pytest.approx(2 / 3 - math.sqrt(8 / 9), abs=1e-12)
    nl = bewit.evaluate_witness(r, KAY_SPEC, "paper-nl")
    assert nl["value"] == pytest.approx(-0.6667, abs=5e-4)
    assert bewit.optimal_search(r)["value"] == pytest.approx(env["value"], abs=1e-12)


def test_witness_matrix_trace_matches_value():
    rho = bewit.kay(2.5)
    w = bewit.witness_matrix(KAY_SPEC, math.pi / 4)
    assert np.trace(w @ rho).real == pytest.approx(-0.09384, abs=5e-4)


def test_circuit_and_estimator():
    p = bewit.probs_from_density(bewit.kay(2.0))
    assert bewit.verify_preparation(p) < 1e-10
    qasm = bewit.purification_qasm(p)
    assert qasm.startswith("OPENQASM 2.0;")
    assert "qreg q[6];" in qasm
    est = bewit.estimate_witness(p, KAY_SPEC, "fixed", math.pi / 4, shots=50000, seed=3)
    assert abs(est["mean"] + 0.2761) <= 5 * est["stderr"] + 5e-4
    assert est == bewit.estimate_witness(p, KAY_SPEC, "fixed", math.pi / 4, shots=50000, seed=3)


def test_errors_map_to_python_exceptions():
    with pytest.raises(ValueError):
        bewit.normalize_spec("i=4")
    with pytest.raises(ValueError):
        bewit.density_matrix([0.5] * 8)
    with pytest.raises(ValueError):
        bewit.probs_from_density(bewit.kye(2.0, 3.0))
    with pytest.raises(ArithmeticError):
        bewit.evaluate_witness(bewit.r_vector(np.eye(8) / 8), KAY_SPEC, "paper-nl")
