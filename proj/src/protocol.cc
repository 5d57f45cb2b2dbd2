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

#include "ghzlhv/protocol.h"

#include <algorithm>
#include <charconv>
#include <functional>

#include "ghzlhv/errors.h"

namespace ghzlhv {

Partition::Partition(size_t num_qubits, std::vector<std::vector<size_t>> sets)
    : num_qubits_(num_qubits), sets_(std::move(sets)) {
    if (num_qubits_ == 0 || num_qubits_ > kMaxTableQubits) {
        throw CapacityError("partition size must be in [1, " + std::to_string(kMaxTableQubits) + "]");
    }
    if (sets_.empty()) {
        throw ParseError("partition has no sets", 0);
    }
    std::vector<size_t> owner(num_qubits_ + 1, 0);
    for (size_t k = 0; k < sets_.size(); k++) {
        if (sets_[k].empty()) {
            throw ParseError("partition set " + std::to_string(k + 1) + " is empty", 0);
        }
        for (size_t q : sets_[k]) {
            if (q < 1 || q > num_qubits_) {
                throw ParseError(
                    "qubit " + std::to_string(q) + " out of range [1, " + std::to_string(num_qubits_) + "]", 0);
            }
            if (owner[q]) {
                throw ParseError(
                    "qubit " + std::to_string(q) + " appears in both set " + std::to_string(owner[q]) + " and set " +
                        std::to_string(k + 1),
                    0);
            }
            owner[q] = k + 1;
        }
    }
    for (size_t q = 1; q <= num_qubits_; q++) {
        if (!owner[q]) {
            throw ParseError("qubit " + std::to_string(q) + " is not assigned to any set", 0);
        }
    }
}

Partition Partition::parse(size_t num_qubits, std::string_view text) {
    std::vector<std::vector<size_t>> sets(1);
    size_t pos = 0;
    bool expect_number = true;
    while (pos < text.size()) {
        char c = text[pos];
        if (c == ' ') {
            pos++;
        } else if (c == '|' || c == ',') {
            if (expect_number) {
                throw ParseError("expected a qubit index in partition '" + std::string(text) + "'", pos + 1);
            }
            if (c == '|') {
                sets.emplace_back();
            }
            expect_number = true;
            pos++;
        } else {
            size_t value = 0;
            auto [ptr, ec] = std::from_chars(text.data() + pos, text.data() + text.size(), value);
            if (ec != std::errc() || ptr == text.data() + pos || !expect_number) {
                throw ParseError("unexpected character in partition '" + std::string(text) + "'", pos + 1);
            }
            sets.back().push_back(value);
            pos = ptr - text.data();
            expect_number = false;
        }
    }
    if (expect_number) {
        throw ParseError("partition '" + std::string(text) + "' ends without a qubit index", text.size() + 1);
    }
    return Partition(num_qubits, std::move(sets));
}

Partition Partition::singletons(size_t num_qubits) {
    std::vector<std::vector<size_t>> sets;
    for (size_t q = 1; q <= num_qubits; q++) {
        sets.push_back({q});
    }
    return Partition(num_qubits, std::move(sets));
}

std::vector<Partition> Partition::all(size_t num_qubits) {
    std::vector<Partition> out;
    std::vector<std::vector<size_t>> sets;
    std::function<void(size_t)> place = [&](size_t q) {
        if (q > num_qubits) {
            out.emplace_back(num_qubits, sets);
            return;
        }
        for (size_t k = 0; k < sets.size(); k++) {
            sets[k].push_back(q);
            place(q + 1);
            sets[k].pop_back();
        }
        sets.push_back({q});
        place(q + 1);
        sets.pop_back();
    };
    place(1);
    return out;
}

const std::vector<size_t> &Partition::set(size_t k) const {
    check_qubit_index(k, sets_.size());
    return sets_[k - 1];
}

uint64_t Partition::mask(size_t k) const {
    uint64_t m = 0;
    for (size_t q : set(k)) {
        m |= uint64_t{1} << (q - 1);
    }
    return m;
}

std::string Partition::str() const {
    std::string out;
    for (size_t k = 0; k < sets_.size(); k++) {
        if (k) {
            out += '|';
        }
        for (size_t j = 0; j < sets_[k].size(); j++) {
            if (j) {
                out += ',';
            }
            out += std::to_string(sets_[k][j]);
        }
    }
    return out;
}

std::vector<int> ProtocolRun::outcomes() const {
    std::vector<int> out;
    for (const auto &r : reports) {
        out.push_back(r.outcome);
    }
    return out;
}

int ProtocolRun::outcome_product() const {
    int prod = 1;
    for (const auto &r : reports) {
        prod *= r.outcome;
    }
    return prod;
}

size_t communication_cost(const Partition &partition) {
    return partition.num_sets() >= 2 ? partition.num_sets() - 2 : 0;
}

bool alice_flips(Phase truncated_product) {
    return truncated_product == Phase::i() || truncated_product == Phase::minus_one();
}

std::vector<PartyReport> local_reports(
    const LhvTable &table, const Partition &partition, const PauliString &p, const Assignment &a) {
    if (p.num_qubits != table.num_qubits() || partition.num_qubits() != table.num_qubits() ||
        a.num_vars != table.num_qubits()) {
        throw DimensionError(
            "table, partition, measurement and assignment must all have " + std::to_string(table.num_qubits()) +
            " qubits");
    }
    if (p.phase != Phase::one()) {
        throw std::invalid_argument("local measurement choices carry no sign, got " + p.str());
    }
    std::vector<PartyReport> reports;
    for (size_t k = 1; k <= partition.num_sets(); k++) {
        PartyReport r;
        r.set_index = k;
        for (size_t q : partition.set(k)) {
            Pauli letter = p.get(q);
            if (letter != Pauli::I) {
                r.local *= table.row(q).column(letter);
            }
        }
        r.q = r.local.phase.is_imaginary() ? Phase::i() : Phase::one();
        r.raw_report = discard_i(r.local, a);
        r.outcome = r.raw_report;
        reports.push_back(r);
    }
    return reports;
}

ProtocolRun run_protocol(const LhvTable &table, const Partition &partition, const PauliString &p, const Assignment &a) {
    ProtocolRun run{local_reports(table, partition, p, a), {}};
    size_t l = partition.num_sets();
    Transcript &tr = run.transcript;
    tr.flip_product = l >= 2 ? run.reports[0].q : Phase::one();
    for (size_t k = 2; k < l; k++) {
        const PartyReport &r = run.reports[k - 1];
        tr.messages.push_back(Message{k, r.q == Phase::i()});
        tr.flip_product *= r.q;
    }
    tr.bit_count = tr.messages.size();
    tr.alice_flipped = alice_flips(tr.flip_product);
    if (tr.alice_flipped) {
        run.reports[0].flipped = true;
        run.reports[0].outcome = -run.reports[0].raw_report;
    }
    return run;
}

ConsistencyReport verify_consistency(const LhvTable &table, const Partition &partition, const PauliString &p) {
    ConsistencyReport report;
    report.joint = classify_joint(table, p);
    size_t n = table.num_qubits();
    size_t expected_bits = communication_cost(partition);
    for (uint64_t index = 0; index < (uint64_t{1} << n); index++) {
        Assignment a = Assignment::from_index(n, index);
        ProtocolRun run = run_protocol(table, partition, p, a);
        int product = run.outcome_product();
        report.assignments_checked++;
        report.product_plus_count += product == +1;
        bool ok = !report.joint.is_deterministic() || product == report.joint.value;
        if (run.transcript.bit_count != expected_bits) {
            report.bit_counts_ok = false;
            ok = false;
        }
        if (!ok && !report.witness) {
            report.witness = a;
        }
        report.consistent &= ok;
    }
    if (!report.joint.is_deterministic() && 2 * report.product_plus_count != report.assignments_checked) {
        report.consistent = false;
    }
    return report;
}

}  // namespace ghzlhv
