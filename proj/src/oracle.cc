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

#include "ghzlhv/oracle.h"

#include <bit>
#include <cmath>

#include "ghzlhv/errors.h"

namespace ghzlhv {

Classification ghz_classify(const PauliString &p) {
    if (!p.is_observable()) {
        throw NotObservableError(p.str() + " has an imaginary phase and is not an observable");
    }
    int sign = p.phase.real_sign();
    size_t nx = p.count(Pauli::X);
    size_t ny = p.count(Pauli::Y);
    size_t nz = p.count(Pauli::Z);
    if (nx == 0 && ny == 0 && nz % 2 == 0) {
        return Classification::deterministic(sign);
    }
    if (nx + ny == p.num_qubits && ny % 2 == 0) {
        return Classification::deterministic(ny % 4 == 0 ? sign : -sign);
    }
    return Classification::random();
}

StateVector::StateVector(size_t num_qubits) : num_qubits_(num_qubits) {
    if (num_qubits == 0 || num_qubits > kMaxStateVectorQubits) {
        throw CapacityError(
            "state vectors support 1 to " + std::to_string(kMaxStateVectorQubits) + " qubits, got " +
            std::to_string(num_qubits));
    }
    amps_.assign(size_t{1} << num_qubits, 0.0);
    amps_[0] = 1.0;
}

StateVector StateVector::ghz(size_t num_qubits) {
    StateVector sv(num_qubits);
    double a = 1.0 / std::sqrt(2.0);
    sv.amps_[0] = a;
    sv.amps_.back() = a;
    return sv;
}

void StateVector::apply_hadamard(size_t qubit) {
    check_qubit_index(qubit, num_qubits_);
    size_t m = size_t{1} << (qubit - 1);
    double s = 1.0 / std::sqrt(2.0);
    for (size_t b = 0; b < amps_.size(); b++) {
        if (b & m) {
            continue;
        }
        auto a0 = amps_[b];
        auto a1 = amps_[b | m];
        amps_[b] = s * (a0 + a1);
        amps_[b | m] = s * (a0 - a1);
    }
}

void StateVector::apply_cnot(size_t control, size_t target) {
    check_qubit_index(control, num_qubits_);
    check_qubit_index(target, num_qubits_);
    if (control == target) {
        throw IndexError("CNOT control and target must differ");
    }
    size_t cm = size_t{1} << (control - 1);
    size_t tm = size_t{1} << (target - 1);
    for (size_t b = 0; b < amps_.size(); b++) {
        if ((b & cm) && !(b & tm)) {
            std::swap(amps_[b], amps_[b | tm]);
        }
    }
}

void StateVector::apply(const Circuit &circuit) {
    if (circuit.num_qubits != num_qubits_) {
        throw DimensionError("circuit size does not match state size");
    }
    circuit.validate();
    for (const Gate &g : circuit.gates) {
        if (g.kind == Gate::Kind::H) {
            apply_hadamard(g.a);
        } else {
            apply_cnot(g.a, g.b);
        }
    }
}

std::complex<double> StateVector::expectation(const PauliString &p) const {
    if (p.num_qubits != num_qubits_) {
        throw DimensionError("observable size does not match state size");
    }
    // P|b> = phase * i^{#Y} * (-1)^{|b & zs|} |b ^ xs>, using Y = iXZ.
    static const std::complex<double> kPowI[4] = {{1, 0}, {0, 1}, {-1, 0}, {0, -1}};
    std::complex<double> scalar = kPowI[(p.phase * Phase(static_cast<int>(p.count(Pauli::Y)))).exponent];
    auto xs = static_cast<size_t>(p.xs);
    auto zs = static_cast<size_t>(p.zs);
    std::complex<double> total = 0.0;
    for (size_t b = 0; b < amps_.size(); b++) {
        if (amps_[b] == 0.0) {
            continue;
        }
        double sign = (std::popcount(b & zs) & 1) ? -1.0 : 1.0;
        total += std::conj(amps_[b ^ xs]) * sign * amps_[b];
    }
    return scalar * total;
}

Classification statevector_classify(const PauliString &p, size_t num_qubits) {
    if (!p.is_observable()) {
        throw NotObservableError(p.str() + " has an imaginary phase and is not an observable");
    }
    StateVector psi = StateVector::ghz(num_qubits);
    std::complex<double> e = psi.expectation(p);
    if (std::abs(e.imag()) > kExpectationTolerance) {
        throw InvariantError("expectation of Hermitian " + p.str() + " has imaginary part");
    }
    if (std::abs(std::abs(e.real()) - 1.0) <= kExpectationTolerance) {
        return Classification::deterministic(e.real() > 0 ? +1 : -1);
    }
    if (std::abs(e.real()) <= kExpectationTolerance) {
        return Classification::random();
    }
    throw InvariantError("expectation of " + p.str() + " is " + std::to_string(e.real()) + ", neither 0 nor +-1");
}

}  // namespace ghzlhv
