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

#include "ghzlhv/phase.h"

namespace ghzlhv {

std::string Phase::sign_prefix() const {
    static constexpr const char *kPrefixes[4] = {"+", "+i", "-", "-i"};
    return kPrefixes[exponent];
}

std::string Phase::str() const {
    static constexpr const char *kNames[4] = {"1", "i", "-1", "-i"};
    return kNames[exponent];
}

}  // namespace ghzlhv
