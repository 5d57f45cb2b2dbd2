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

#ifndef GHZLHV_ORACLE_H
#define GHZLHV_ORACLE_H

#include <complex>
#include <cstddef>
#include <vector>

#include "ghzlhv/circuit.h"
#include "ghzlhv/classification.h"
#include "ghzlhv/pauli_string.h"

namespace ghzlhv {

// Quantum-mechanical ground truth for Pauli measurements on GHZ states. Three independent routes:
// a closed-form stabilizer membership rule, a dense state vector, and a stabilizer tableau.

/// Closed-form rule for the GHZ stabilizer. With s the sign of `p`:
///   only I/Z letters and an even number of Z's       -> Deterministic(s)
///   only X/Y letters and an even number of Y's       -> Deterministic(s * (Y count % 4 == 0 ? +1 : -1))
///   anything else                                    -> Random
/// Throws NotObservableError for an imaginary sign.
Classification ghz_classify(const PauliString &p);

inline constexpr size_t kMaxStateVectorQubits = 12;
inline constexpr double kExpectationTolerance = 1e-9;

/// Dense n-qubit state. Amplitude index bit (q-1) is the computational value of qubit q.
class StateVector {
   public:
    /// |0...0>.
    explicit StateVector(size_t num_qubits);
    /// (|0...0> + |1...1>) / sqrt(2).
    static StateVector ghz(size_t num_qubits);

    size_t num_qubits() const {
        return num_qubits_;
    }
    const std::vector<std::complex<double>> &amplitudes() const {
        return amps_;
    }

    void apply_hadamard(size_t qubit);
    void apply_cnot(size_t control, size_t target);
    void apply(const Circuit &circuit);

    /// <psi| P |psi>.
    std::complex<double> expectation(const PauliString &p) const;

   private:
    size_t num_qubits_;
    std::vector<std::complex<double>> amps_;
};

/// Classifies `p` by its expectation on the n-qubit GHZ state: |e| ~ 1 is deterministic, e ~ 0 is random.
/// Any other expectation throws InvariantError. Throws CapacityError for n > kMaxStateVectorQubits.
Classification statevector_classify(const PauliString &p, size_t num_qubits);

}  // namespace ghzlhv

#endif
