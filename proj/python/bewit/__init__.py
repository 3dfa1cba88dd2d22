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

"""GHZ-diagonal states, PPT tests, entanglement witnesses and purification circuits.

Probability vectors use the pair convention: ``p[2x]`` and ``p[2x+1]`` weight
``(|0x> + |1x̄>)/√2`` and ``(|0x> - |1x̄>)/√2``. Qubit 1 is the most
significant bit of basis indices.
"""

from ._bewit import (
    CapacityError,
    DegenerateWitnessError,
    InputError,
    SamplingExhaustedError,
    StructureError,
    category_state,
    density_matrix,
    estimate_witness,
    evaluate_witness,
    kay,
    kye,
    normalize_spec,
    observable,
    optimal_search,
    ppt_report,
    probs_from_density,
    purification_qasm,
    r_vector,
    sample_category,
    verify_preparation,
    witness_matrix,
)

__all__ = [
    "CapacityError",
    "DegenerateWitnessError",
    "InputError",
    "SamplingExhaustedError",
    "StructureError",
    "category_state",
    "density_matrix",
    "estimate_witness",
    "evaluate_witness",
    "kay",
    "kye",
    "normalize_spec",
    "observable",
    "optimal_search",
    "ppt_report",
    "probs_from_density",
    "purification_qasm",
    "r_vector",
    "sample_category",
    "verify_preparation",
    "witness_matrix",
]
