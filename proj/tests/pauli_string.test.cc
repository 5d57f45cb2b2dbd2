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

#include <gtest/gtest.h>

#include <random>

#include "ghzlhv/errors.h"
#include "matrix_oracle.test.h"

using namespace ghzlhv;
using ghzlhv::testing::pauli_matrix;

namespace {

ghzlhv::testing::Matrix matrix_of(const PauliString &p) {
    return pauli_matrix(p.letters(), p.phase.exponent);
}

PauliString random_string(size_t n, std::mt19937_64 &rng) {
    PauliString p = PauliString::identity(n);
    p.xs = rng() & p.qubit_mask();
    p.zs = rng() & p.qubit_mask();
    p.phase = Phase(static_cast<int>(rng() & 3));
    return p;
}

}  // namespace

TEST(phase, algebra) {
    ASSERT_EQ(Phase::i() * Phase::i(), Phase::minus_one());
    ASSERT_EQ(Phase::i() * Phase::minus_i(), Phase::one());
    ASSERT_EQ(-Phase::i(), Phase::minus_i());
    ASSERT_EQ(Phase(-1), Phase::minus_i());
    ASSERT_TRUE(Phase::minus_one().is_real());
    ASSERT_TRUE(Phase::minus_i().is_imaginary());
    ASSERT_EQ(Phase::one().sign_prefix(), "+");
    ASSERT_EQ(Phase::i().sign_prefix(), "+i");
    ASSERT_EQ(Phase::minus_one().sign_prefix(), "-");
    ASSERT_EQ(Phase::minus_i().sign_prefix(), "-i");
}

TEST(pauli_string, parse_and_format) {
    PauliString p = parse_pauli("XYZ");
    ASSERT_EQ(p.phase, Phase::one());
    ASSERT_EQ(p.get(1), Pauli::X);
    ASSERT_EQ(p.get(2), Pauli::Y);
    ASSERT_EQ(p.get(3), Pauli::Z);
    ASSERT_EQ(format_pauli(p), "+XYZ");

    PauliString q = parse_pauli("-YYX");
    ASSERT_EQ(q.phase, Phase::minus_one());
    ASSERT_EQ(q.letters(), "YYX");

    ASSERT_EQ(parse_pauli("+iZ").phase, Phase::i());
    ASSERT_EQ(parse_pauli("-iIZ").phase, Phase::minus_i());
    ASSERT_EQ(parse_pauli("+iZ").str(), "+iZ");
}

TEST(pauli_string, parse_errors) {
    try {
        parse_pauli("XQZ");
        FAIL() << "expected ParseError";
    } catch (const ParseError &e) {
        ASSERT_EQ(e.position, 2u);
    }
    try {
        parse_pauli("-XQZ");
        FAIL() << "expected ParseError";
    } catch (const ParseError &e) {
        ASSERT_EQ(e.position, 3u);
    }
    ASSERT_THROW(parse_pauli(""), ParseError);
    ASSERT_THROW(parse_pauli("-"), ParseError);
    ASSERT_THROW(parse_pauli("+i"), ParseError);
    ASSERT_THROW(parse_pauli("x"), ParseError);
    ASSERT_THROW(parse_pauli(std::string(65, 'X')), CapacityError);
    ASSERT_NO_THROW(parse_pauli(std::string(64, 'X')));
}

TEST(pauli_string, round_trip_property) {
    std::mt19937_64 rng(7);
    for (int k = 0; k < 500; k++) {
        size_t n = 1 + rng() % 64;
        PauliString p = random_string(n, rng);
        ASSERT_EQ(parse_pauli(format_pauli(p)), p) << p.str();
    }
}

TEST(pauli_string, multiply_examples) {
    ASSERT_EQ(parse_pauli("X") * parse_pauli("Y"), parse_pauli("+iZ"));
    ASSERT_EQ(parse_pauli("Y") * parse_pauli("X"), parse_pauli("-iZ"));
    ASSERT_EQ(parse_pauli("XX") * parse_pauli("ZZ"), parse_pauli("-YY"));
    ASSERT_EQ(parse_pauli("XXX") * parse_pauli("III"), parse_pauli("XXX"));
    ASSERT_THROW(parse_pauli("XX") * parse_pauli("X"), DimensionError);
}

TEST(pauli_string, multiply_matches_matrices) {
    // All 4^2 x 4^2 unsigned pairs, with a phase on each side.
    for (uint64_t a = 0; a < 16; a++) {
        for (uint64_t b = 0; b < 16; b++) {
            PauliString p = PauliString::from_index(2, a);
            PauliString q = PauliString::from_index(2, b);
            p.phase = Phase(static_cast<int>(a % 4));
            q.phase = Phase(static_cast<int>(b % 3));
            ASSERT_TRUE(approx_equal(matrix_of(p) * matrix_of(q), matrix_of(p * q))) << p.str() << " * " << q.str();
        }
    }
    std::mt19937_64 rng(11);
    for (int k = 0; k < 100; k++) {
        PauliString p = random_string(4, rng);
        PauliString q = random_string(4, rng);
        ASSERT_TRUE(approx_equal(matrix_of(p) * matrix_of(q), matrix_of(p * q)));
    }
}

TEST(pauli_string, group_properties) {
    std::mt19937_64 rng(3);
    for (int k = 0; k < 1000; k++) {
        size_t n = 1 + rng() % 64;
        PauliString a = random_string(n, rng);
        PauliString b = random_string(n, rng);
        PauliString c = random_string(n, rng);
        PauliString id = PauliString::identity(n);
        ASSERT_EQ((a * b) * c, a * (b * c));
        ASSERT_EQ(a * id, a);
        ASSERT_EQ(id * a, a);
        PauliString a4 = a * a * a * a;
        ASSERT_EQ(a4, id);
    }
}

TEST(pauli_string, commutes) {
    ASSERT_TRUE(commutes(parse_pauli("XX"), parse_pauli("ZZ")));
    ASSERT_FALSE(commutes(parse_pauli("X"), parse_pauli("Z")));
    ASSERT_TRUE(commutes(parse_pauli("XXX"), parse_pauli("III")));
    std::mt19937_64 rng(5);
    for (int k = 0; k < 500; k++) {
        PauliString a = random_string(1 + rng() % 64, rng);
        PauliString b = random_string(a.num_qubits, rng);
        ASSERT_EQ(commutes(a, b), a * b == b * a);
    }
}

TEST(pauli_string, conjugate_hadamard_examples) {
    ASSERT_EQ(conjugate_hadamard(parse_pauli("X"), 1), parse_pauli("Z"));
    ASSERT_EQ(conjugate_hadamard(parse_pauli("Z"), 1), parse_pauli("X"));
    ASSERT_EQ(conjugate_hadamard(parse_pauli("Y"), 1), parse_pauli("-Y"));
    ASSERT_EQ(conjugate_hadamard(parse_pauli("I"), 1), parse_pauli("I"));
    ASSERT_EQ(conjugate_hadamard(parse_pauli("XYZ"), 2), parse_pauli("-XYZ"));
    ASSERT_THROW(conjugate_hadamard(parse_pauli("XX"), 3), IndexError);
    ASSERT_THROW(conjugate_hadamard(parse_pauli("XX"), 0), IndexError);
}

TEST(pauli_string, conjugate_cnot_examples) {
    // Generator rules, control = qubit 1.
    ASSERT_EQ(conjugate_cnot(parse_pauli("XI"), 1, 2), parse_pauli("XX"));
    ASSERT_EQ(conjugate_cnot(parse_pauli("IX"), 1, 2), parse_pauli("IX"));
    ASSERT_EQ(conjugate_cnot(parse_pauli("YI"), 1, 2), parse_pauli("YX"));
    ASSERT_EQ(conjugate_cnot(parse_pauli("IY"), 1, 2), parse_pauli("ZY"));
    ASSERT_EQ(conjugate_cnot(parse_pauli("ZI"), 1, 2), parse_pauli("ZI"));
    ASSERT_EQ(conjugate_cnot(parse_pauli("IZ"), 1, 2), parse_pauli("ZZ"));
    ASSERT_EQ(conjugate_cnot(parse_pauli("XY"), 1, 2), parse_pauli("YZ"));
    ASSERT_EQ(conjugate_cnot(parse_pauli("XZ"), 1, 2), parse_pauli("-YY"));
    ASSERT_EQ(conjugate_cnot(parse_pauli("II"), 1, 2), parse_pauli("II"));
    // Reversed roles.
    ASSERT_EQ(conjugate_cnot(parse_pauli("IX"), 2, 1), parse_pauli("XX"));
    ASSERT_THROW(conjugate_cnot(parse_pauli("XX"), 1, 1), IndexError);
    ASSERT_THROW(conjugate_cnot(parse_pauli("XX"), 1, 3), IndexError);
}

TEST(pauli_string, conjugation_matches_matrices) {
    using namespace ghzlhv::testing;
    for (size_t n : {1, 2, 3}) {
        for (uint64_t k = 0; k < (uint64_t{1} << (2 * n)); k++) {
            PauliString p = PauliString::from_index(n, k);
            for (size_t q = 1; q <= n; q++) {
                Matrix h = embed('H', q, n);
                ASSERT_TRUE(approx_equal(h * matrix_of(p) * adjoint(h), matrix_of(conjugate_hadamard(p, q))));
                for (size_t t = 1; t <= n; t++) {
                    if (t == q) {
                        continue;
                    }
                    Matrix c = cnot_matrix(q, t, n);
                    ASSERT_TRUE(approx_equal(c * matrix_of(p) * adjoint(c), matrix_of(conjugate_cnot(p, q, t))))
                        << p.str() << " CNOT(" << q << "," << t << ")";
                }
            }
        }
    }
}

TEST(pauli_string, conjugation_is_homomorphism_and_involution) {
    for (uint64_t a = 0; a < 16; a++) {
        PauliString p = PauliString::from_index(2, a);
        ASSERT_EQ(conjugate_cnot(conjugate_cnot(p, 1, 2), 1, 2), p);
        ASSERT_EQ(conjugate_hadamard(conjugate_hadamard(p, 1), 1), p);
        for (uint64_t b = 0; b < 16; b++) {
            PauliString q = PauliString::from_index(2, b);
            ASSERT_EQ(conjugate_cnot(p * q, 1, 2), conjugate_cnot(p, 1, 2) * conjugate_cnot(q, 1, 2));
            ASSERT_EQ(conjugate_cnot(p * q, 2, 1), conjugate_cnot(p, 2, 1) * conjugate_cnot(q, 2, 1));
            ASSERT_EQ(conjugate_hadamard(p * q, 2), conjugate_hadamard(p, 2) * conjugate_hadamard(q, 2));
        }
        ASSERT_TRUE(conjugate_cnot(p, 1, 2).is_observable());
        ASSERT_TRUE(conjugate_hadamard(p, 1).is_observable());
    }
}

TEST(pauli_string, from_index_enumerates_every_product) {
    std::vector<PauliString> seen;
    for (uint64_t k = 0; k < 64; k++) {
        PauliString p = PauliString::from_index(3, k);
        for (const auto &s : seen) {
            ASSERT_NE(s, p);
        }
        seen.push_back(p);
    }
    ASSERT_EQ(PauliString::from_index(3, 0).letters(), "III");
}

TEST(pauli_string, counts) {
    PauliString p = parse_pauli("XYYZIIX");
    ASSERT_EQ(p.count(Pauli::X), 2u);
    ASSERT_EQ(p.count(Pauli::Y), 2u);
    ASSERT_EQ(p.count(Pauli::Z), 1u);
    ASSERT_EQ(p.count(Pauli::I), 2u);
    ASSERT_EQ(PauliString::identity(64).count(Pauli::I), 64u);
}
