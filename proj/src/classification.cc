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

#include "ghzlhv/classification.h"

#include <stdexcept>

namespace ghzlhv {

Classification Classification::deterministic(int value) {
    if (value != +1 && value != -1) {
        throw std::invalid_argument("deterministic outcome must be +1 or -1");
    }
    return {Kind::Deterministic, value};
}

std::string Classification::str() const {
    if (kind == Kind::Random) {
        return "Random";
    }
    return value > 0 ? "Deterministic(+1)" : "Deterministic(-1)";
}

}  // namespace ghzlhv
