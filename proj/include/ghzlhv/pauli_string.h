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

#ifndef GHZLHV_PAULI_STRING_H
#define GHZLHV_PAULI_STRING_H

#include <cstddef>
#include <cstdint>
#include <string>
#include <string_view>

#include "ghzlhv/phase.h"

namespace ghzlhv {

enum class Pauli : uint8_t { I = 0, X = 1, Z = 2, Y = 3 };

char pauli_char(Pauli p);

/// Largest system a PauliString can describe.
inline constexpr size_t kMaxPauliQubits = 64;

/// A signed product of single-qubit Pauli operators: phase * P_1 (x) P_2 (x) ... (x) P_n.
///
/// Letters are packed symplectically: bit (q-1) of `xs` / `zs` holds the X / Z component of qubit q,
/// so I=(0,0), X=(1,0), Z=(0,1), Y=(1,1). Y denotes the Hermitian Y matrix, so the phase is exactly
/// the scalar in front of the tensor product. All qubit indices in the public interface are 1-based.
struct PauliString {
    size_t num_qubits = 0;
    Phase phase;
    uint64_t xs = 0;
    uint64_t zs = 0;

    /// All-identity string with phase +1.
    static PauliString identity(size_t num_qubits);
    /// Parses "[+|-|+i|-i]<IXYZ>+". Leftmost letter is qubit 1.
    static PauliString from_str(std::string_view text);
    /// Unsigned product enumerated by base-4 digits of `index` (digit for qubit q is (index >> 2(q-1)) & 3,
    /// mapped 0->I, 1->X, 2->Y, 3->Z). Covers all 4^n products as index ranges over [0, 4^n).
    static PauliString from_index(size_t num_qubits, uint64_t index);

    Pauli get(size_t qubit) const;
    void set(size_t qubit, Pauli p);

    bool is_observable() const {
        return phase.is_real();
    }
    size_t count(Pauli p) const;
    /// Bit mask (bit q-1 for qubit q) of positions holding a non-identity letter.
    uint64_t support() const {
        return xs | zs;
    }
    /// Mask of the valid qubit positions.
    uint64_t qubit_mask() const;

    /// Canonical text with an explicit sign: "+XYZ", "-YYX", "+iZ", "-iZ".
    std::string str() const;
    /// Letters only, no sign.
    std::string letters() const;

    PauliString operator-() const;
    bool operator==(const PauliString &) const = default;
};

/// Group product with exact phase. Throws DimensionError on length mismatch.
PauliString multiply(const PauliString &lhs, const PauliString &rhs);
PauliString operator*(const PauliString &lhs, const PauliString &rhs);

/// True iff lhs*rhs == rhs*lhs.
bool commutes(const PauliString &lhs, const PauliString &rhs);

/// H P H^dagger with H acting on `qubit`.
PauliString conjugate_hadamard(const PauliString &p, size_t qubit);

/// C P C^dagger with C = CNOT(control, target).
PauliString conjugate_cnot(const PauliString &p, size_t control, size_t target);

PauliString parse_pauli(std::string_view text);
std::string format_pauli(const PauliString &p);

/// Throws IndexError unless 1 <= qubit <= num_qubits.
void check_qubit_index(size_t qubit, size_t num_qubits);

}  // namespace ghzlhv

#endif
