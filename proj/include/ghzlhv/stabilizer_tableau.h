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

#ifndef GHZLHV_STABILIZER_TABLEAU_H
#define GHZLHV_STABILIZER_TABLEAU_H

#include <cstddef>
#include <vector>

#include "ghzlhv/circuit.h"
#include "ghzlhv/classification.h"
#include "ghzlhv/pauli_string.h"

namespace ghzlhv {

/// n stabilizer generators, updated by conjugation.
struct StabilizerTableau {
    size_t num_qubits = 0;
    std::vector<PauliString> generators;

    /// <Z_1, Z_2, ..., Z_n>, the stabilizer of |0...0>.
    static StabilizerTableau initial(size_t num_qubits);

    void apply(const Gate &gate);

    /// GF(2) rank of the generators' symplectic vectors.
    size_t rank() const;
    bool pairwise_commuting() const;
    bool operator==(const StabilizerTableau &) const = default;
};

/// Evolves <Z_1, ..., Z_n> through every gate of `circuit`.
StabilizerTableau tableau_evolve(const Circuit &circuit);

/// Snapshots before the first gate and after each gate.
std::vector<StabilizerTableau> tableau_history(const Circuit &circuit);

/// Deterministic(+1) if p is in the stabilizer group, Deterministic(-1) if -p is, Random if p anticommutes
/// with some generator. Throws std::invalid_argument for a rank-deficient tableau and DimensionError on
/// size mismatch.
Classification tableau_classify(const StabilizerTableau &tableau, const PauliString &p);

/// U^dagger P U for the circuit unitary U (gates undone in reverse order; H and CNOT are self-inverse).
PauliString conjugate_backward(const PauliString &p, const Circuit &circuit);

}  // namespace ghzlhv

#endif
