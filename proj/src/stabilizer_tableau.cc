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

#include "ghzlhv/stabilizer_tableau.h"

#include <bit>
#include <stdexcept>
#include <utility>

#include "ghzlhv/errors.h"

namespace ghzlhv {

namespace {

PauliString conjugate(const PauliString &p, const Gate &g) {
    return g.kind == Gate::Kind::H ? conjugate_hadamard(p, g.a) : conjugate_cnot(p, g.a, g.b);
}

// Symplectic vector (xs, zs) plus a record of which generators were combined to produce it.
struct Row {
    uint64_t xs;
    uint64_t zs;
    uint64_t combo;
};

bool test_bit(const Row &r, size_t k) {
    return k < 64 ? (r.xs >> k) & 1 : (r.zs >> (k - 64)) & 1;
}

// Forward elimination. Returns the pivot rows in elimination order with their pivot columns.
std::vector<std::pair<size_t, Row>> echelon(const std::vector<PauliString> &gens) {
    std::vector<Row> rows;
    for (size_t k = 0; k < gens.size(); k++) {
        rows.push_back({gens[k].xs, gens[k].zs, uint64_t{1} << k});
    }
    std::vector<std::pair<size_t, Row>> pivots;
    for (size_t col = 0; col < 128 && !rows.empty(); col++) {
        auto it = rows.begin();
        while (it != rows.end() && !test_bit(*it, col)) {
            ++it;
        }
        if (it == rows.end()) {
            continue;
        }
        Row pivot = *it;
        rows.erase(it);
        for (Row &r : rows) {
            if (test_bit(r, col)) {
                r.xs ^= pivot.xs;
                r.zs ^= pivot.zs;
                r.combo ^= pivot.combo;
            }
        }
        pivots.emplace_back(col, pivot);
    }
    return pivots;
}

}  // namespace

StabilizerTableau StabilizerTableau::initial(size_t num_qubits) {
    StabilizerTableau t{num_qubits, {}};
    for (size_t q = 1; q <= num_qubits; q++) {
        PauliString z = PauliString::identity(num_qubits);
        z.set(q, Pauli::Z);
        t.generators.push_back(z);
    }
    return t;
}

void StabilizerTableau::apply(const Gate &gate) {
    for (PauliString &g : generators) {
        g = conjugate(g, gate);
    }
}

size_t StabilizerTableau::rank() const {
    return echelon(generators).size();
}

bool StabilizerTableau::pairwise_commuting() const {
    for (size_t a = 0; a < generators.size(); a++) {
        for (size_t b = a + 1; b < generators.size(); b++) {
            if (!commutes(generators[a], generators[b])) {
                return false;
            }
        }
    }
    return true;
}

StabilizerTableau tableau_evolve(const Circuit &circuit) {
    return tableau_history(circuit).back();
}

std::vector<StabilizerTableau> tableau_history(const Circuit &circuit) {
    circuit.validate();
    std::vector<StabilizerTableau> out{StabilizerTableau::initial(circuit.num_qubits)};
    for (const Gate &g : circuit.gates) {
        StabilizerTableau next = out.back();
        next.apply(g);
        out.push_back(std::move(next));
    }
    return out;
}

Classification tableau_classify(const StabilizerTableau &tableau, const PauliString &p) {
    if (p.num_qubits != tableau.num_qubits) {
        throw DimensionError("observable size does not match tableau size");
    }
    if (!p.is_observable()) {
        throw NotObservableError(p.str() + " has an imaginary phase and is not an observable");
    }
    auto pivots = echelon(tableau.generators);
    if (tableau.generators.size() != tableau.num_qubits || pivots.size() != tableau.num_qubits) {
        throw std::invalid_argument(
            "tableau is rank-deficient: rank " + std::to_string(pivots.size()) + " for " +
            std::to_string(tableau.num_qubits) + " qubits");
    }
    for (const PauliString &g : tableau.generators) {
        if (!commutes(g, p)) {
            return Classification::random();
        }
    }

    Row target{p.xs, p.zs, 0};
    for (const auto &[col, row] : pivots) {
        if (test_bit(target, col)) {
            target.xs ^= row.xs;
            target.zs ^= row.zs;
            target.combo ^= row.combo;
        }
    }
    if (target.xs || target.zs) {
        throw InvariantError(p.str() + " commutes with a full-rank stabilizer but is not in the group");
    }

    PauliString product = PauliString::identity(p.num_qubits);
    for (uint64_t m = target.combo; m; m &= m - 1) {
        product = product * tableau.generators[std::countr_zero(m)];
    }
    if (product.phase == p.phase) {
        return Classification::deterministic(+1);
    }
    if (product.phase == -p.phase) {
        return Classification::deterministic(-1);
    }
    throw InvariantError("stabilizer product " + product.str() + " has an imaginary phase");
}

PauliString conjugate_backward(const PauliString &p, const Circuit &circuit) {
    circuit.validate();
    PauliString out = p;
    for (auto it = circuit.gates.rbegin(); it != circuit.gates.rend(); ++it) {
        out = conjugate(out, *it);
    }
    return out;
}

}  // namespace ghzlhv
