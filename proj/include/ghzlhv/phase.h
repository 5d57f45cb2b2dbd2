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

#ifndef GHZLHV_PHASE_H
#define GHZLHV_PHASE_H

#include <cstdint>
#include <string>

namespace ghzlhv {

/// An element of {+1, +i, -1, -i}, stored as the exponent of i.
struct Phase {
    uint8_t exponent = 0;

    constexpr Phase() = default;
    constexpr explicit Phase(int exp) : exponent(static_cast<uint8_t>(((exp % 4) + 4) % 4)) {
    }

    static constexpr Phase one() {
        return Phase(0);
    }
    static constexpr Phase i() {
        return Phase(1);
    }
    static constexpr Phase minus_one() {
        return Phase(2);
    }
    static constexpr Phase minus_i() {
        return Phase(3);
    }

    constexpr bool is_real() const {
        return (exponent & 1) == 0;
    }
    constexpr bool is_imaginary() const {
        return (exponent & 1) != 0;
    }

    constexpr Phase operator*(Phase other) const {
        return Phase(exponent + other.exponent);
    }
    constexpr Phase &operator*=(Phase other) {
        *this = *this * other;
        return *this;
    }
    constexpr Phase operator-() const {
        return Phase(exponent + 2);
    }
    constexpr Phase conj() const {
        return Phase(4 - exponent);
    }
    constexpr bool operator==(const Phase &) const = default;

    /// +1 or -1 for a real phase. Undefined for imaginary phases.
    constexpr int real_sign() const {
        return exponent == 0 ? +1 : -1;
    }

    /// "+", "+i", "-", "-i".
    std::string sign_prefix() const;
    /// "1", "i", "-1", "-i".
    std::string str() const;
};

}  // namespace ghzlhv

#endif
