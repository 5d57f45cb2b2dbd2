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

#ifndef GHZLHV_LHV_TABLE_H
#define GHZLHV_LHV_TABLE_H

#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "ghzlhv/circuit.h"
#include "ghzlhv/classification.h"
#include "ghzlhv/pauli_string.h"
#include "ghzlhv/phase.h"

namespace ghzlhv {

/// Largest table supported by the fixed-width random-variable set.
inline constexpr size_t kMaxTableQubits = 63;

/// A symbolic value `phase * prod_{j in rset} R_j`, where each R_j is a shared fair +-1 variable.
///
/// Bit (j-1) of `rset` marks R_j. Since R_j^2 = 1, multiplication is symmetric difference of sets.
struct LhvEntry {
    Phase phase;
    uint64_t rset = 0;

    static LhvEntry constant(Phase p) {
        return {p, 0};
    }
    /// The single variable R_j (1-based).
    static LhvEntry var(size_t j);

    bool is_deterministic() const {
        return rset == 0;
    }
    LhvEntry operator*(const LhvEntry &other) const {
        return {phase * other.phase, rset ^ other.rset};
    }
    LhvEntry &operator*=(const LhvEntry &other) {
        *this = *this * other;
        return *this;
    }
    LhvEntry operator-() const {
        return {-phase, rset};
    }
    bool operator==(const LhvEntry &) const = default;

    /// Renders like "iR1R2R3", "-R2", "1", "-i". Indices ascending.
    std::string str() const;
};

/// A product of table entries before read-out.
using SymbolicValue = LhvEntry;

struct LhvRow {
    LhvEntry x;
    LhvEntry y;
    LhvEntry z;

    const LhvEntry &column(Pauli p) const;
    bool operator==(const LhvRow &) const = default;
};

/// Concrete draw of R_1..R_n. Bit (j-1) of `minus_mask` set means R_j = -1.
struct Assignment {
    size_t num_vars = 0;
    uint64_t minus_mask = 0;

    /// Builds from explicit values; each must be +1 or -1.
    static Assignment from_values(std::span<const int> values);
    /// The `index`-th of the 2^n assignments (bits of `index` are the minus mask).
    static Assignment from_index(size_t num_vars, uint64_t index);

    int value(size_t j) const;
    /// Evaluates the monomial part of `v`: prod_{j in rset} R_j.
    int monomial(uint64_t rset) const;
};

/// Read-out: evaluate a symbolic value under `a`, dividing an imaginary result by i (i -> +1, -i -> -1).
int discard_i(const SymbolicValue &v, const Assignment &a);

/// How the initial Y column is signed. `Figure` gives qubit 1 the entry -iR_1 and every other qubit +iR_j;
/// `Uniform` gives every qubit +iR_j.
enum class InitialYConvention { Figure, Uniform };

/// Result of multiplying a row's three entries.
struct RowProduct {
    Phase phase;
    /// Set when the product still carries random variables (never happens for tables built by the gate rules).
    bool residual_randomness = false;
};

/// The local hidden-variable table: one row per qubit with the values assigned to X, Y and Z.
///
/// Tables are values; gates return new tables. Qubit indices are 1-based.
class LhvTable {
   public:
    LhvTable() = default;
    explicit LhvTable(std::vector<LhvRow> rows);

    size_t num_qubits() const {
        return rows_.size();
    }
    const LhvRow &row(size_t qubit) const;
    const std::vector<LhvRow> &rows() const {
        return rows_;
    }

    /// True iff every X and Z entry has real phase and every Y entry has imaginary phase.
    bool columns_well_typed() const;

    /// Rows rendered as "R2R3 | iR1R2R3 | R1", one per line.
    std::string str() const;
    std::vector<std::string> row_strings() const;

    bool operator==(const LhvTable &) const = default;

   private:
    std::vector<LhvRow> rows_;
};

/// The |0...0> table: (R_j, +-iR_j, 1) per row.
LhvTable initial_table(size_t n, InitialYConvention convention = InitialYConvention::Figure);

/// Swaps X and Z of row `qubit` and negates its Y entry.
LhvTable apply_hadamard(const LhvTable &table, size_t qubit);

/// Updates rows `control` and `target` by the CNOT rules:
///   X_c <- X_c X_t, Y_c <- Y_c X_t, Z_c <- Z_c,
///   X_t <- X_t,     Y_t <- Z_c Y_t, Z_t <- Z_c Z_t.
/// Both rows must have real X/Z, imaginary Y and X*Y*Z = +i; otherwise throws PreconditionError.
LhvTable apply_cnot(const LhvTable &table, size_t control, size_t target);

/// The CNOT row update without any precondition check.
void cnot_rows(const LhvRow &control_before, const LhvRow &target_before, LhvRow &control_after, LhvRow &target_after);

/// Applies every gate of `circuit` in order.
LhvTable apply_circuit(const LhvTable &table, const Circuit &circuit);

/// Snapshots before the first gate and after each gate (gates.size() + 1 tables).
std::vector<LhvTable> evolve(const LhvTable &table, const Circuit &circuit);

RowProduct xyz_product(const LhvTable &table, size_t qubit);

/// Direct construction of the n-qubit GHZ table:
///   row 1 = (R_2...R_n, iR_1R_2...R_n, R_1), row j >= 2 = (R_j, iR_1R_j, R_1).
LhvTable ghz_table(size_t n);

/// Product of the entries selected by `p`'s letters (I contributes 1), times `p`'s sign.
/// Throws DimensionError on size mismatch and NotObservableError for an imaginary sign.
SymbolicValue symbolic_joint(const LhvTable &table, const PauliString &p);

/// Deterministic(+-1) when the joint product carries no random variable, Random otherwise.
/// Throws InvariantError if a deterministic product has imaginary phase.
Classification classify_joint(const LhvTable &table, const PauliString &p);

int sample_outcome(const LhvTable &table, const PauliString &p, const Assignment &a);

}  // namespace ghzlhv

#endif
