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

#include "ghzlhv/cnot_consistency.h"

namespace ghzlhv {

namespace {

std::vector<LhvRow> all_sign_rows() {
    std::vector<LhvRow> rows;
    for (int x : {0, 2}) {
        for (int y : {1, 3}) {
            for (int z : {0, 2}) {
                rows.push_back(
                    LhvRow{LhvEntry::constant(Phase(x)), LhvEntry::constant(Phase(y)), LhvEntry::constant(Phase(z))});
            }
        }
    }
    return rows;
}

bool xyz_is_plus_i(const LhvRow &r) {
    return (r.x * r.y * r.z).phase == Phase::i();
}

LhvEntry value_on(const LhvRow &c, const LhvRow &t, const PauliString &p) {
    LhvEntry v = LhvEntry::constant(p.phase);
    if (p.get(1) != Pauli::I) {
        v *= c.column(p.get(1));
    }
    if (p.get(2) != Pauli::I) {
        v *= t.column(p.get(2));
    }
    return v;
}

}  // namespace

std::string RowPairConfig::str() const {
    return "control (" + control.x.str() + ", " + control.y.str() + ", " + control.z.str() + "), target (" +
           target.x.str() + ", " + target.y.str() + ", " + target.z.str() + ")";
}

bool CnotConsistencyReport::all_hold_under_precondition() const {
    for (const auto &r : relations) {
        if (!r.holds_under_precondition) {
            return false;
        }
    }
    return !relations.empty();
}

std::vector<const CnotRelationCheck *> CnotConsistencyReport::conditional_relations() const {
    std::vector<const CnotRelationCheck *> out;
    for (const auto &r : relations) {
        if (!r.holds_unconditionally) {
            out.push_back(&r);
        }
    }
    return out;
}

CnotConsistencyReport check_cnot_consistency() {
    CnotConsistencyReport report;
    std::vector<LhvRow> rows = all_sign_rows();

    for (uint64_t index = 1; index < 16; index++) {
        PauliString before = PauliString::from_index(2, index);
        CnotRelationCheck check{before, conjugate_cnot(before, 1, 2), true, true, std::nullopt};
        for (const LhvRow &c : rows) {
            for (const LhvRow &t : rows) {
                LhvRow c_after, t_after;
                cnot_rows(c, t, c_after, t_after);
                if (value_on(c, t, check.before) == value_on(c_after, t_after, check.after)) {
                    continue;
                }
                check.holds_unconditionally = false;
                if (xyz_is_plus_i(c) && xyz_is_plus_i(t)) {
                    check.holds_under_precondition = false;
                }
                if (!check.counterexample) {
                    check.counterexample = RowPairConfig{c, t};
                }
            }
        }
        report.relations.push_back(std::move(check));
    }

    for (const LhvRow &c : rows) {
        for (const LhvRow &t : rows) {
            report.configs_checked++;
            report.precondition_configs += xyz_is_plus_i(c) && xyz_is_plus_i(t);
        }
    }
    return report;
}

}  // namespace ghzlhv
