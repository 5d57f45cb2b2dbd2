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

#include <gtest/gtest.h>

#include <random>

#include "ghzlhv/errors.h"

using namespace ghzlhv;

namespace {

std::vector<std::string> generator_strings(const StabilizerTableau &t) {
    std::vector<std::string> out;
    for (const auto &g : t.generators) {
        out.push_back(g.str());
    }
    return out;
}

Circuit random_circuit(size_t n, size_t gates, std::mt19937_64 &rng) {
    Circuit c{n, {}};
    for (size_t k = 0; k < gates; k++) {
        size_t a = 1 + rng() % n;
        size_t b = 1 + rng() % n;
        if (n == 1 || rng() % 3 == 0 || a == b) {
            c.gates.push_back(Gate::h(a));
        } else {
            c.gates.push_back(Gate::cnot(a, b));
        }
    }
    return c;
}

}  // namespace

TEST(circuit, parse) {
    Circuit c = parse_circuit(3, "H(1) CNOT(1,2)\tCNOT(1,3)");
    ASSERT_EQ(c.gates, ghz_circuit(3).gates);
    ASSERT_EQ(c.str(), "H(1) CNOT(1,2) CNOT(1,3)");
    ASSERT_TRUE(parse_circuit(2, "  ").gates.empty());
    ASSERT_THROW(parse_circuit(3, "H(4)"), IndexError);
    ASSERT_THROW(parse_circuit(3, "CNOT(2,2)"), IndexError);
    ASSERT_THROW(parse_circuit(3, "S(1)"), ParseError);
    ASSERT_THROW(parse_circuit(3, "H(1)H(2)"), ParseError);
    ASSERT_THROW(parse_circuit(3, "CNOT(1 2)"), ParseError);
}

TEST(tableau, ghz3_generator_evolution) {
    auto history = tableau_history(ghz_circuit(3));
    ASSERT_EQ(generator_strings(history[0]), (std::vector<std::string>{"+ZII", "+IZI", "+IIZ"}));
    ASSERT_EQ(generator_strings(history[1]), (std::vector<std::string>{"+XII", "+IZI", "+IIZ"}));
    ASSERT_EQ(generator_strings(history[2]), (std::vector<std::string>{"+XXI", "+ZZI", "+IIZ"}));
    ASSERT_EQ(generator_strings(history[3]), (std::vector<std::string>{"+XXX", "+ZZI", "+ZIZ"}));
    ASSERT_EQ(tableau_evolve(Circuit{3, {}}), StabilizerTableau::initial(3));
}

TEST(tableau, classify_examples) {
    StabilizerTableau tab = tableau_evolve(ghz_circuit(3));
    ASSERT_EQ(tableau_classify(tab, parse_pauli("YYX")), Classification::deterministic(-1));
    ASSERT_EQ(tableau_classify(tab, parse_pauli("-YYX")), Classification::deterministic(+1));
    ASSERT_EQ(tableau_classify(tab, parse_pauli("ZZI")), Classification::deterministic(+1));
    ASSERT_EQ(tableau_classify(tab, parse_pauli("XII")), Classification::random());
    ASSERT_THROW(tableau_classify(tab, parse_pauli("XX")), DimensionError);
    StabilizerTableau deficient{3, {parse_pauli("ZII"), parse_pauli("ZII"), parse_pauli("IIZ")}};
    ASSERT_THROW(tableau_classify(deficient, parse_pauli("ZII")), std::invalid_argument);
}

TEST(tableau, structure_is_preserved_by_random_circuits) {
    std::mt19937_64 rng(23);
    for (int trial = 0; trial < 50; trial++) {
        size_t n = 1 + rng() % 10;
        for (const StabilizerTableau &t : tableau_history(random_circuit(n, 40, rng))) {
            ASSERT_EQ(t.rank(), n);
            ASSERT_TRUE(t.pairwise_commuting());
            for (const auto &g : t.generators) {
                ASSERT_TRUE(g.is_observable());
            }
        }
    }
}

TEST(tableau, heisenberg_consistency) {
    // Classifying P on the evolved state equals classifying U^dagger P U on |0...0>.
    std::mt19937_64 rng(29);
    for (int trial = 0; trial < 40; trial++) {
        size_t n = 1 + rng() % 8;
        Circuit c = random_circuit(n, 30, rng);
        StabilizerTableau evolved = tableau_evolve(c);
        StabilizerTableau initial = StabilizerTableau::initial(n);
        for (int k = 0; k < 50; k++) {
            PauliString p = PauliString::identity(n);
            p.xs = rng() & p.qubit_mask();
            p.zs = rng() & p.qubit_mask();
            if (rng() & 1) {
                p = -p;
            }
            ASSERT_EQ(tableau_classify(evolved, p), tableau_classify(initial, conjugate_backward(p, c))) << p.str();
        }
    }
}
