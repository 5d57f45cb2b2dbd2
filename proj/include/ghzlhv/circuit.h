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

#ifndef GHZLHV_CIRCUIT_H
#define GHZLHV_CIRCUIT_H

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

namespace ghzlhv {

struct Gate {
    enum class Kind { H, CNOT };

    Kind kind = Kind::H;
    size_t a = 0;  ///< H target, or CNOT control.
    size_t b = 0;  ///< CNOT target; unused for H.

    static Gate h(size_t q) {
        return {Kind::H, q, 0};
    }
    static Gate cnot(size_t c, size_t t) {
        return {Kind::CNOT, c, t};
    }

    /// "H(1)" or "CNOT(1,2)".
    std::string str() const;
    bool operator==(const Gate &) const = default;
};

/// An H/CNOT circuit on n qubits (1-based indices).
struct Circuit {
    size_t num_qubits = 0;
    std::vector<Gate> gates;

    /// Throws IndexError for an out-of-range index or a CNOT with control == target.
    void validate() const;
    std::string str() const;
};

/// H on qubit 1 followed by CNOT(1, j) for j = 2..n.
Circuit ghz_circuit(size_t n);

/// Parses whitespace-separated tokens "H(q)" and "CNOT(c,t)".
Circuit parse_circuit(size_t num_qubits, std::string_view text);

}  // namespace ghzlhv

#endif
