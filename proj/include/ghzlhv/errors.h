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

#ifndef GHZLHV_ERRORS_H
#define GHZLHV_ERRORS_H

#include <cstddef>
#include <stdexcept>
#include <string>

namespace ghzlhv {

/// Two operands (or an operand and a table) disagree on the number of qubits.
struct DimensionError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

/// The requested qubit count does not fit the fixed-width representation.
struct CapacityError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

/// A 1-based qubit index outside [1, n], or a CNOT with control == target.
struct IndexError : std::out_of_range {
    using std::out_of_range::out_of_range;
};

/// Malformed text input. `position` is the 1-based character offset of the problem (0 if not applicable).
struct ParseError : std::invalid_argument {
    ParseError(const std::string &msg, size_t position)
        : std::invalid_argument(position ? msg + " (at position " + std::to_string(position) + ")" : msg),
          position(position) {
    }
    size_t position;
};

/// A gate was applied to a table whose rows do not satisfy the gate's update-rule preconditions.
struct PreconditionError : std::domain_error {
    using std::domain_error::domain_error;
};

/// An internal consistency check failed. Indicates a bug, never bad user input.
struct InvariantError : std::logic_error {
    using std::logic_error::logic_error;
};

/// A Pauli product with imaginary phase was supplied where a Hermitian observable is required.
struct NotObservableError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

}  // namespace ghzlhv

#endif
