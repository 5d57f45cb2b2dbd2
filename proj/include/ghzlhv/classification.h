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

#ifndef GHZLHV_CLASSIFICATION_H
#define GHZLHV_CLASSIFICATION_H

#include <string>

namespace ghzlhv {

/// Outcome distribution of a Pauli-product measurement: certain (+1 or -1) or a fair coin.
struct Classification {
    enum class Kind { Deterministic, Random };

    Kind kind = Kind::Random;
    int value = 0;  ///< +1 or -1 when deterministic, 0 when random.

    static Classification deterministic(int value);
    static Classification random() {
        return {};
    }

    bool is_deterministic() const {
        return kind == Kind::Deterministic;
    }
    bool operator==(const Classification &) const = default;

    /// "Deterministic(+1)", "Deterministic(-1)" or "Random".
    std::string str() const;
};

}  // namespace ghzlhv

#endif
