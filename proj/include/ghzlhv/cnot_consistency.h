// Copyright 2026 The ghzlhv Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef GHZLHV_CNOT_CONSISTENCY_H
#define GHZLHV_CNOT_CONSISTENCY_H

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "ghzlhv/lhv_table.h"
#include "ghzlhv/pauli_string.h"

namespace ghzlhv {

/// A concrete (control, target) row pair: X, Z in {+1, -1} and Y in {+i, -i}.
struct RowPairConfig {
    LhvRow control;
    LhvRow target;

    std::string str() const;
};

/// Check of one CNOT transformation C P C^dagger = P' against the table update rule.
///
/// The relation is: value of P on the rows before the gate == value of P' on the rows after it,
/// where a value is the product of the selected entries times the string's sign.
struct CnotRelationCheck {
    PauliString before;
    PauliString after;
    /// Holds on every configuration where both rows satisfy XYZ = +i.
    bool holds_under_precondition = true;
    /// Holds on every configuration, including rows with XYZ = -i.
    bool holds_unconditionally = true;
    /// A configuration violating the relation, if one exists.
    std::optional<RowPairConfig> counterexample;
};

struct CnotConsistencyReport {
    std::vector<CnotRelationCheck> relations;  ///< One per non-identity two-qubit Pauli, 15 in all.
    size_t configs_checked = 0;                ///< All sign configurations (64).
    size_t precondition_configs = 0;           ///< Configurations with XYZ = +i on both rows (16).

    bool all_hold_under_precondition() const;
    /// Relations that need the XYZ = +i correlation, i.e. fail on some configuration without it.
    std::vector<const CnotRelationCheck *> conditional_relations() const;
};

/// Checks the CNOT update rule against all 15 nontrivial Pauli-pair transformations, exhaustively over
/// every sign configuration of a control row and a target row.
CnotConsistencyReport check_cnot_consistency();

}  // namespace ghzlhv

#endif
