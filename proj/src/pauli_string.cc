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

#include "ghzlhv/pauli_string.h"

#include <bit>

#include "ghzlhv/errors.h"

namespace ghzlhv {

namespace {

uint64_t bit(size_t qubit) {
    return uint64_t{1} << (qubit - 1);
}

void check_same_size(const PauliString &a, const PauliString &b) {
    if (a.num_qubits != b.num_qubits) {
        throw DimensionError(
            "Pauli strings have different lengths: " + std::to_string(a.num_qubits) + " vs " +
            std::to_string(b.num_qubits));
    }
}

void check_capacity(size_t num_qubits) {
    if (num_qubits == 0 || num_qubits > kMaxPauliQubits) {
        throw CapacityError(
            "Pauli strings support 1 to " + std::to_string(kMaxPauliQubits) + " qubits, got " +
            std::to_string(num_qubits));
    }
}

}  // namespace

char pauli_char(Pauli p) {
    return "IXZY"[static_cast<uint8_t>(p)];
}

void check_qubit_index(size_t qubit, size_t num_qubits) {
    if (qubit < 1 || qubit > num_qubits) {
        throw IndexError(
            "qubit index " + std::to_string(qubit) + " out of range [1, " + std::to_string(num_qubits) + "]");
    }
}

PauliString PauliString::identity(size_t num_qubits) {
    check_capacity(num_qubits);
    PauliString result;
    result.num_qubits = num_qubits;
    return result;
}

PauliString PauliString::from_str(std::string_view text) {
    size_t k = 0;
    int sign_exp = 0;
    if (k < text.size() && (text[k] == '+' || text[k] == '-')) {
        sign_exp = text[k] == '-' ? 2 : 0;
        k++;
        if (k < text.size() && text[k] == 'i') {
            sign_exp += 1;
            k++;
        }
    }
    if (k == text.size()) {
        throw ParseError("Pauli string has no letters: '" + std::string(text) + "'", k + 1);
    }
    size_t n = text.size() - k;
    if (n > kMaxPauliQubits) {
        throw CapacityError(
            "Pauli strings support at most " + std::to_string(kMaxPauliQubits) + " qubits, got " +
            std::to_string(n));
    }
    PauliString result = identity(n);
    result.phase = Phase(sign_exp);
    for (size_t q = 1; q <= n; q++, k++) {
        switch (text[k]) {
            case 'I':
                break;
            case 'X':
                result.set(q, Pauli::X);
                break;
            case 'Y':
                result.set(q, Pauli::Y);
                break;
            case 'Z':
                result.set(q, Pauli::Z);
                break;
            default:
                throw ParseError(
                    "invalid Pauli letter '" + std::string(1, text[k]) + "' in '" + std::string(text) + "'", k + 1);
        }
    }
    return result;
}

PauliString PauliString::from_index(size_t num_qubits, uint64_t index) {
    static constexpr Pauli kDigits[4] = {Pauli::I, Pauli::X, Pauli::Y, Pauli::Z};
    PauliString result = identity(num_qubits);
    for (size_t q = 1; q <= num_qubits; q++) {
        result.set(q, kDigits[index & 3]);
        index >>= 2;
    }
    return result;
}

Pauli PauliString::get(size_t qubit) const {
    check_qubit_index(qubit, num_qubits);
    uint8_t code = ((xs >> (qubit - 1)) & 1) | (((zs >> (qubit - 1)) & 1) << 1);
    return static_cast<Pauli>(code);
}

void PauliString::set(size_t qubit, Pauli p) {
    check_qubit_index(qubit, num_qubits);
    auto code = static_cast<uint8_t>(p);
    xs = (xs & ~bit(qubit)) | ((code & 1) ? bit(qubit) : 0);
    zs = (zs & ~bit(qubit)) | ((code & 2) ? bit(qubit) : 0);
}

size_t PauliString::count(Pauli p) const {
    uint64_t m;
    switch (p) {
        case Pauli::I:
            m = ~(xs | zs) & qubit_mask();
            break;
        case Pauli::X:
            m = xs & ~zs;
            break;
        case Pauli::Z:
            m = zs & ~xs;
            break;
        default:
            m = xs & zs;
            break;
    }
    return std::popcount(m);
}

uint64_t PauliString::qubit_mask() const {
    return num_qubits >= 64 ? ~uint64_t{0} : (uint64_t{1} << num_qubits) - 1;
}

std::string PauliString::letters() const {
    std::string out;
    out.reserve(num_qubits);
    for (size_t q = 1; q <= num_qubits; q++) {
        out.push_back(pauli_char(get(q)));
    }
    return out;
}

std::string PauliString::str() const {
    return phase.sign_prefix() + letters();
}

PauliString PauliString::operator-() const {
    PauliString result = *this;
    result.phase = -phase;
    return result;
}

PauliString multiply(const PauliString &lhs, const PauliString &rhs) {
    check_same_size(lhs, rhs);
    uint64_t x1 = lhs.xs, z1 = lhs.zs, x2 = rhs.xs, z2 = rhs.zs;
    // Positions where the two letters anticommute contribute +i (cyclic XY, YZ, ZX) or -i.
    uint64_t anti = (x1 & z2) ^ (z1 & x2);
    uint64_t cyclic = (x1 & ~z1 & x2 & z2) | (x1 & z1 & ~x2 & z2) | (~x1 & z1 & x2 & ~z2);
    int plus = std::popcount(anti & cyclic);
    int minus = std::popcount(anti & ~cyclic);

    PauliString result;
    result.num_qubits = lhs.num_qubits;
    result.xs = x1 ^ x2;
    result.zs = z1 ^ z2;
    result.phase = lhs.phase * rhs.phase * Phase(plus - minus);
    return result;
}

PauliString operator*(const PauliString &lhs, const PauliString &rhs) {
    return multiply(lhs, rhs);
}

bool commutes(const PauliString &lhs, const PauliString &rhs) {
    check_same_size(lhs, rhs);
    uint64_t anti = (lhs.xs & rhs.zs) ^ (lhs.zs & rhs.xs);
    return (std::popcount(anti) & 1) == 0;
}

PauliString conjugate_hadamard(const PauliString &p, size_t qubit) {
    check_qubit_index(qubit, p.num_qubits);
    uint64_t b = bit(qubit);
    bool x = p.xs & b;
    bool z = p.zs & b;
    PauliString result = p;
    result.xs = (p.xs & ~b) | (z ? b : 0);
    result.zs = (p.zs & ~b) | (x ? b : 0);
    if (x && z) {
        result.phase = -result.phase;
    }
    return result;
}

PauliString conjugate_cnot(const PauliString &p, size_t control, size_t target) {
    check_qubit_index(control, p.num_qubits);
    check_qubit_index(target, p.num_qubits);
    if (control == target) {
        throw IndexError("CNOT control and target must differ, both are " + std::to_string(control));
    }
    bool xc = p.xs & bit(control);
    bool zc = p.zs & bit(control);
    bool xt = p.xs & bit(target);
    bool zt = p.zs & bit(target);

    PauliString result = p;
    if (xc) {
        result.xs ^= bit(target);
    }
    if (zt) {
        result.zs ^= bit(control);
    }
    // XZ -> -YY and YY -> -XZ are the only letter pairs that pick up a sign.
    if (xc && zt && (xt == zc)) {
        result.phase = -result.phase;
    }
    return result;
}

PauliString parse_pauli(std::string_view text) {
    return PauliString::from_str(text);
}

std::string format_pauli(const PauliString &p) {
    return p.str();
}

}  // namespace ghzlhv
