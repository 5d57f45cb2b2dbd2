# Copyright 2026 The ghzlhv Authors
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

"""Communication-assisted local hidden-variable simulation of GHZ Pauli measurements."""

from ._core import (
    Assignment,
    Classification,
    LhvTable,
    Partition,
    PauliString,
    StabilizerTableau,
    apply_cnot,
    apply_hadamard,
    check_cnot_consistency,
    classify_joint,
    communication_cost,
    ghz_circuit_str,
    ghz_classify,
    ghz_table,
    initial_table,
    local_reports,
    run_protocol,
    sample_outcome,
    statevector_classify,
    tableau_classify,
    tableau_evolve,
    verify_consistency,
    xyz_product,
)

__all__ = [
    "Assignment",
    "Classification",
    "LhvTable",
    "Partition",
    "PauliString",
    "StabilizerTableau",
    "apply_cnot",
    "apply_hadamard",
    "check_cnot_consistency",
    "classify_joint",
    "communication_cost",
    "ghz_circuit_str",
    "ghz_classify",
    "ghz_table",
    "initial_table",
    "local_reports",
    "run_protocol",
    "sample_outcome",
    "statevector_classify",
    "tableau_classify",
    "tableau_evolve",
    "verify_consistency",
    "xyz_product",
]
