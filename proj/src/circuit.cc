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

#include "ghzlhv/circuit.h"

#include <cctype>
#include <charconv>

#include "ghzlhv/errors.h"
#include "ghzlhv/pauli_string.h"

namespace ghzlhv {

std::string Gate::str() const {
    if (kind == Kind::H) {
        return "H(" + std::to_string(a) + ")";
    }
    return "CNOT(" + std::to_string(a) + "," + std::to_string(b) + ")";
}

void Circuit::validate() const {
    for (const Gate &g : gates) {
        check_qubit_index(g.a, num_qubits);
        if (g.kind == Gate::Kind::CNOT) {
            check_qubit_index(g.b, num_qubits);
            if (g.a == g.b) {
                throw IndexError("CNOT control and target must differ in " + g.str());
            }
        }
    }
}

std::string Circuit::str() const {
    std::string out;
    for (const Gate &g : gates) {
        if (!out.empty()) {
            out += ' ';
        }
        out += g.str();
    }
    return out;
}

Circuit ghz_circuit(size_t n) {
    Circuit c{n, {}};
    c.gates.push_back(Gate::h(1));
    for (size_t t = 2; t <= n; t++) {
        c.gates.push_back(Gate::cnot(1, t));
    }
    return c;
}

namespace {

struct Cursor {
    std::string_view text;
    size_t pos = 0;

    void skip_space() {
        while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) {
            pos++;
        }
    }
    bool done() const {
        return pos >= text.size();
    }
    [[noreturn]] void fail(const std::string &what) const {
        throw ParseError("bad circuit: " + what, pos + 1);
    }
    void expect(char c) {
        if (done() || text[pos] != c) {
            fail(std::string("expected '") + c + "'");
        }
        pos++;
    }
    bool consume(std::string_view word) {
        if (text.substr(pos, word.size()) == word) {
            pos += word.size();
            return true;
        }
        return false;
    }
    size_t number() {
        size_t value = 0;
        auto [ptr, ec] = std::from_chars(text.data() + pos, text.data() + text.size(), value);
        if (ec != std::errc() || ptr == text.data() + pos) {
            fail("expected a qubit index");
        }
        pos = ptr - text.data();
        return value;
    }
};

}  // namespace

Circuit parse_circuit(size_t num_qubits, std::string_view text) {
    Circuit circuit{num_qubits, {}};
    Cursor cur{text};
    cur.skip_space();
    while (!cur.done()) {
        if (cur.consume("CNOT")) {
            cur.expect('(');
            size_t c = cur.number();
            cur.expect(',');
            size_t t = cur.number();
            cur.expect(')');
            circuit.gates.push_back(Gate::cnot(c, t));
        } else if (cur.consume("H")) {
            cur.expect('(');
            size_t q = cur.number();
            cur.expect(')');
            circuit.gates.push_back(Gate::h(q));
        } else {
            cur.fail("expected H(q) or CNOT(c,t)");
        }
        if (!cur.done() && !std::isspace(static_cast<unsigned char>(cur.text[cur.pos]))) {
            cur.fail("gates must be separated by whitespace");
        }
        cur.skip_space();
    }
    circuit.validate();
    return circuit;
}

}  // namespace ghzlhv
