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

#ifndef GHZLHV_TESTS_MATRIX_ORACLE_TEST_H
#define GHZLHV_TESTS_MATRIX_ORACLE_TEST_H

// Brute-force dense-matrix model of small Pauli products and gates. Built only from textbook 2x2 matrices
// and Kronecker products; shares no code with the library's bit-packed algebra.

#include <complex>
#include <cstddef>
#include <string>
#include <vector>

namespace ghzlhv::testing {

using Complex = std::complex<double>;

struct Matrix {
    size_t dim = 0;
    std::vector<Complex> data;

    explicit Matrix(size_t dim) : dim(dim), data(dim * dim, 0.0) {
    }
    Complex &at(size_t r, size_t c) {
        return data[r * dim + c];
    }
    Complex at(size_t r, size_t c) const {
        return data[r * dim + c];
    }
};

inline Matrix operator*(const Matrix &a, const Matrix &b) {
    Matrix out(a.dim);
    for (size_t r = 0; r < a.dim; r++) {
        for (size_t k = 0; k < a.dim; k++) {
            for (size_t c = 0; c < a.dim; c++) {
                out.at(r, c) += a.at(r, k) * b.at(k, c);
            }
        }
    }
    return out;
}

inline Matrix adjoint(const Matrix &a) {
    Matrix out(a.dim);
    for (size_t r = 0; r < a.dim; r++) {
        for (size_t c = 0; c < a.dim; c++) {
            out.at(r, c) = std::conj(a.at(c, r));
        }
    }
    return out;
}

inline Matrix kron(const Matrix &a, const Matrix &b) {
    Matrix out(a.dim * b.dim);
    for (size_t r1 = 0; r1 < a.dim; r1++) {
        for (size_t c1 = 0; c1 < a.dim; c1++) {
            for (size_t r2 = 0; r2 < b.dim; r2++) {
                for (size_t c2 = 0; c2 < b.dim; c2++) {
                    out.at(r1 * b.dim + r2, c1 * b.dim + c2) = a.at(r1, c1) * b.at(r2, c2);
                }
            }
        }
    }
    return out;
}

inline bool approx_equal(const Matrix &a, const Matrix &b, double tol = 1e-12) {
    if (a.dim != b.dim) {
        return false;
    }
    for (size_t k = 0; k < a.data.size(); k++) {
        if (std::abs(a.data[k] - b.data[k]) > tol) {
            return false;
        }
    }
    return true;
}

inline Matrix single_qubit(char letter) {
    Matrix m(2);
    switch (letter) {
        case 'I':
            m.at(0, 0) = 1;
            m.at(1, 1) = 1;
            break;
        case 'X':
            m.at(0, 1) = 1;
            m.at(1, 0) = 1;
            break;
        case 'Y':
            m.at(0, 1) = Complex(0, -1);
            m.at(1, 0) = Complex(0, 1);
            break;
        case 'Z':
            m.at(0, 0) = 1;
            m.at(1, 1) = -1;
            break;
        case 'H': {
            double s = 1.0 / std::sqrt(2.0);
            m.at(0, 0) = s;
            m.at(0, 1) = s;
            m.at(1, 0) = s;
            m.at(1, 1) = -s;
            break;
        }
    }
    return m;
}

/// Matrix of i^phase_exponent * letters[0] (x) letters[1] (x) ... with the leftmost letter most significant.
inline Matrix pauli_matrix(const std::string &letters, int phase_exponent) {
    static const Complex kPowI[4] = {{1, 0}, {0, 1}, {-1, 0}, {0, -1}};
    Matrix m = single_qubit(letters[0]);
    for (size_t k = 1; k < letters.size(); k++) {
        m = kron(m, single_qubit(letters[k]));
    }
    for (Complex &v : m.data) {
        v *= kPowI[((phase_exponent % 4) + 4) % 4];
    }
    return m;
}

/// Single-qubit gate on `qubit` (1-based, leftmost = 1) of an n-qubit register.
inline Matrix embed(char gate, size_t qubit, size_t n) {
    Matrix m = single_qubit(qubit == 1 ? gate : 'I');
    for (size_t q = 2; q <= n; q++) {
        m = kron(m, single_qubit(q == qubit ? gate : 'I'));
    }
    return m;
}

/// CNOT(control, target) on n qubits, leftmost qubit = most significant bit of the basis index.
inline Matrix cnot_matrix(size_t control, size_t target, size_t n) {
    size_t dim = size_t{1} << n;
    Matrix m(dim);
    for (size_t b = 0; b < dim; b++) {
        size_t cbit = (b >> (n - control)) & 1;
        size_t out = cbit ? b ^ (size_t{1} << (n - target)) : b;
        m.at(out, b) = 1;
    }
    return m;
}

}  // namespace ghzlhv::testing

#endif
