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

#include "ghzlhv/lhv_table.h"

#include <bit>

#include "ghzlhv/errors.h"

namespace ghzlhv {

namespace {

void check_table_size(size_t n) {
    if (n == 0 || n > kMaxTableQubits) {
        throw CapacityError(
            "LHV tables support 1 to " + std::to_string(kMaxTableQubits) + " qubits, got " + std::to_string(n));
    }
}

std::string describe_row_problem(size_t qubit, const LhvRow &row) {
    LhvEntry prod = row.x * row.y * row.z;
    return "row " + std::to_string(qubit) + " (" + row.x.str() + " | " + row.y.str() + " | " + row.z.str() +
           ") has xyz_product " + prod.str();
}

bool row_satisfies_cnot_precondition(const LhvRow &row) {
    LhvEntry prod = row.x * row.y * row.z;
    return row.x.phase.is_real() && row.z.phase.is_real() && row.y.phase.is_imaginary() && prod.rset == 0 &&
           prod.phase == Phase::i();
}

}  // namespace

LhvEntry LhvEntry::var(size_t j) {
    check_qubit_index(j, kMaxTableQubits);
    return {Phase::one(), uint64_t{1} << (j - 1)};
}

std::string LhvEntry::str() const {
    std::string out;
    if (rset == 0) {
        return phase.str();
    }
    static constexpr const char *kPrefix[4] = {"", "i", "-", "-i"};
    out = kPrefix[phase.exponent];
    for (uint64_t m = rset; m; m &= m - 1) {
        out += "R" + std::to_string(std::countr_zero(m) + 1);
    }
    return out;
}

const LhvEntry &LhvRow::column(Pauli p) const {
    switch (p) {
        case Pauli::X:
            return x;
        case Pauli::Y:
            return y;
        case Pauli::Z:
            return z;
        default:
            throw std::invalid_argument("the identity has no table column");
    }
}

Assignment Assignment::from_values(std::span<const int> values) {
    check_table_size(values.size());
    Assignment a{values.size(), 0};
    for (size_t k = 0; k < values.size(); k++) {
        if (values[k] == -1) {
            a.minus_mask |= uint64_t{1} << k;
        } else if (values[k] != +1) {
            throw std::invalid_argument("random variable R_" + std::to_string(k + 1) + " must be +1 or -1");
        }
    }
    return a;
}

Assignment Assignment::from_index(size_t num_vars, uint64_t index) {
    check_table_size(num_vars);
    return {num_vars, index & ((uint64_t{1} << num_vars) - 1)};
}

int Assignment::value(size_t j) const {
    check_qubit_index(j, num_vars);
    return (minus_mask >> (j - 1)) & 1 ? -1 : +1;
}

int Assignment::monomial(uint64_t rset) const {
    return std::popcount(rset & minus_mask) & 1 ? -1 : +1;
}

int discard_i(const SymbolicValue &v, const Assignment &a) {
    // Dividing by i maps exponent e to e - 1; both routes land on 0 (+1) or 2 (-1).
    Phase p = v.phase.is_imaginary() ? v.phase * Phase::minus_i() : v.phase;
    return p.real_sign() * a.monomial(v.rset);
}

LhvTable::LhvTable(std::vector<LhvRow> rows) : rows_(std::move(rows)) {
    check_table_size(rows_.size());
}

const LhvRow &LhvTable::row(size_t qubit) const {
    check_qubit_index(qubit, rows_.size());
    return rows_[qubit - 1];
}

bool LhvTable::columns_well_typed() const {
    for (const LhvRow &r : rows_) {
        if (!r.x.phase.is_real() || !r.z.phase.is_real() || !r.y.phase.is_imaginary()) {
            return false;
        }
    }
    return true;
}

std::vector<std::string> LhvTable::row_strings() const {
    std::vector<std::string> out;
    out.reserve(rows_.size());
    for (const LhvRow &r : rows_) {
        out.push_back(r.x.str() + " | " + r.y.str() + " | " + r.z.str());
    }
    return out;
}

std::string LhvTable::str() const {
    std::string out;
    for (const std::string &line : row_strings()) {
        out += line;
        out += '\n';
    }
    return out;
}

LhvTable initial_table(size_t n, InitialYConvention convention) {
    check_table_size(n);
    std::vector<LhvRow> rows(n);
    for (size_t j = 1; j <= n; j++) {
        LhvEntry r = LhvEntry::var(j);
        Phase y_phase = (j == 1 && convention == InitialYConvention::Figure) ? Phase::minus_i() : Phase::i();
        rows[j - 1] = LhvRow{r, LhvEntry::constant(y_phase) * r, LhvEntry::constant(Phase::one())};
    }
    return LhvTable(std::move(rows));
}

LhvTable apply_hadamard(const LhvTable &table, size_t qubit) {
    const LhvRow &before = table.row(qubit);
    std::vector<LhvRow> rows = table.rows();
    rows[qubit - 1] = LhvRow{before.z, -before.y, before.x};
    return LhvTable(std::move(rows));
}

void cnot_rows(const LhvRow &c, const LhvRow &t, LhvRow &c_after, LhvRow &t_after) {
    LhvRow new_c{c.x * t.x, c.y * t.x, c.z};
    LhvRow new_t{t.x, c.z * t.y, c.z * t.z};
    c_after = new_c;
    t_after = new_t;
}

LhvTable apply_cnot(const LhvTable &table, size_t control, size_t target) {
    const LhvRow &c = table.row(control);
    const LhvRow &t = table.row(target);
    if (control == target) {
        throw IndexError("CNOT control and target must differ, both are " + std::to_string(control));
    }
    for (auto [q, r] : {std::pair{control, &c}, std::pair{target, &t}}) {
        if (!row_satisfies_cnot_precondition(*r)) {
            throw PreconditionError(
                "CNOT(" + std::to_string(control) + "," + std::to_string(target) +
                ") requires real X/Z, imaginary Y and XYZ = i on both rows, but " + describe_row_problem(q, *r));
        }
    }
    std::vector<LhvRow> rows = table.rows();
    cnot_rows(c, t, rows[control - 1], rows[target - 1]);
    return LhvTable(std::move(rows));
}

LhvTable apply_circuit(const LhvTable &table, const Circuit &circuit) {
    return evolve(table, circuit).back();
}

std::vector<LhvTable> evolve(const LhvTable &table, const Circuit &circuit) {
    if (circuit.num_qubits != table.num_qubits()) {
        throw DimensionError(
            "circuit has " + std::to_string(circuit.num_qubits) + " qubits but table has " +
            std::to_string(table.num_qubits()));
    }
    circuit.validate();
    std::vector<LhvTable> snapshots{table};
    for (const Gate &g : circuit.gates) {
        const LhvTable &cur = snapshots.back();
        snapshots.push_back(g.kind == Gate::Kind::H ? apply_hadamard(cur, g.a) : apply_cnot(cur, g.a, g.b));
    }
    return snapshots;
}

RowProduct xyz_product(const LhvTable &table, size_t qubit) {
    const LhvRow &r = table.row(qubit);
    LhvEntry prod = r.x * r.y * r.z;
    return {prod.phase, prod.rset != 0};
}

LhvTable ghz_table(size_t n) {
    check_table_size(n);
    LhvEntry r1 = LhvEntry::var(1);
    LhvEntry i = LhvEntry::constant(Phase::i());
    std::vector<LhvRow> rows(n);
    LhvEntry tail;  // R_2 ... R_n
    for (size_t j = 2; j <= n; j++) {
        tail *= LhvEntry::var(j);
        rows[j - 1] = LhvRow{LhvEntry::var(j), i * r1 * LhvEntry::var(j), r1};
    }
    rows[0] = LhvRow{tail, i * r1 * tail, r1};
    return LhvTable(std::move(rows));
}

SymbolicValue symbolic_joint(const LhvTable &table, const PauliString &p) {
    if (p.num_qubits != table.num_qubits()) {
        throw DimensionError(
            "observable " + p.str() + " has " + std::to_string(p.num_qubits) + " qubits but table has " +
            std::to_string(table.num_qubits()));
    }
    if (!p.is_observable()) {
        throw NotObservableError(p.str() + " has an imaginary phase and is not an observable");
    }
    SymbolicValue v = LhvEntry::constant(p.phase);
    for (uint64_t m = p.support(); m; m &= m - 1) {
        size_t q = std::countr_zero(m) + 1;
        v *= table.rows()[q - 1].column(p.get(q));
    }
    return v;
}

Classification classify_joint(const LhvTable &table, const PauliString &p) {
    SymbolicValue v = symbolic_joint(table, p);
    if (!v.is_deterministic()) {
        return Classification::random();
    }
    if (v.phase.is_imaginary()) {
        throw InvariantError("joint product for " + p.str() + " is deterministic but imaginary: " + v.str());
    }
    return Classification::deterministic(v.phase.real_sign());
}

int sample_outcome(const LhvTable &table, const PauliString &p, const Assignment &a) {
    if (a.num_vars != table.num_qubits()) {
        throw DimensionError("assignment size does not match table size");
    }
    return discard_i(symbolic_joint(table, p), a);
}

}  // namespace ghzlhv
