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

#ifndef GHZLHV_PROTOCOL_H
#define GHZLHV_PROTOCOL_H

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "ghzlhv/classification.h"
#include "ghzlhv/lhv_table.h"
#include "ghzlhv/pauli_string.h"

namespace ghzlhv {

/// Ordered split of qubits {1..n} among l parties. Set 1 belongs to Alice, who applies the sign flip;
/// set l is the one party that never sends a message.
class Partition {
   public:
    /// Throws ParseError if the sets overlap, miss a qubit, mention an out-of-range qubit, or are empty.
    Partition(size_t num_qubits, std::vector<std::vector<size_t>> sets);

    /// Parses "1,2|3|4,5".
    static Partition parse(size_t num_qubits, std::string_view text);
    /// {1}|{2}|...|{n}.
    static Partition singletons(size_t num_qubits);
    /// Every unordered set partition of {1..n} (Bell number many), each set sorted and sets ordered by
    /// their smallest element, so Alice always holds qubit 1.
    static std::vector<Partition> all(size_t num_qubits);

    size_t num_qubits() const {
        return num_qubits_;
    }
    size_t num_sets() const {
        return sets_.size();
    }
    const std::vector<size_t> &set(size_t k) const;
    const std::vector<std::vector<size_t>> &sets() const {
        return sets_;
    }
    /// Bit (q-1) set for each qubit q in set k (1-based k).
    uint64_t mask(size_t k) const;

    std::string str() const;
    bool operator==(const Partition &) const = default;

   private:
    size_t num_qubits_;
    std::vector<std::vector<size_t>> sets_;
};

struct PartyReport {
    size_t set_index = 0;      ///< 1-based.
    SymbolicValue local;       ///< Product of the party's selected table entries.
    int raw_report = +1;       ///< `local` evaluated under the assignment with i discarded.
    Phase q;                   ///< +i if `local` is imaginary (odd number of Y letters), else +1.
    bool flipped = false;      ///< Only Alice (set 1) ever flips.
    int outcome = +1;          ///< The report after Alice's flip.
};

struct Message {
    size_t sender = 0;  ///< Set index, in 2..l-1.
    bool q_is_i = false;

    bool operator==(const Message &) const = default;
};

struct Transcript {
    std::vector<Message> messages;
    size_t bit_count = 0;
    Phase flip_product;  ///< q_1 q_2 ... q_{l-1}.
    bool alice_flipped = false;
};

struct ProtocolRun {
    std::vector<PartyReport> reports;
    Transcript transcript;

    std::vector<int> outcomes() const;
    int outcome_product() const;
};

/// Bits exchanged by a protocol run on `partition`: max(0, l - 2).
size_t communication_cost(const Partition &partition);

/// The flip rule: Alice flips iff the truncated product is +i or -1.
bool alice_flips(Phase truncated_product);

/// Per-party local products and raw reports, before any communication.
/// `p` must have sign +1 and match the partition and table sizes.
std::vector<PartyReport> local_reports(
    const LhvTable &table, const Partition &partition, const PauliString &p, const Assignment &a);

/// Full protocol: parties 2..l-1 send q_k, Alice computes q_1...q_{l-1} and flips on +i or -1.
ProtocolRun run_protocol(const LhvTable &table, const Partition &partition, const PauliString &p, const Assignment &a);

struct ConsistencyReport {
    bool consistent = true;
    Classification joint;
    size_t assignments_checked = 0;
    size_t product_plus_count = 0;  ///< Assignments whose outcome product is +1.
    bool bit_counts_ok = true;
    std::optional<Assignment> witness;  ///< First failing assignment, if any.
};

/// Runs the protocol on all 2^n assignments. If the joint measurement is deterministic the outcome product
/// must equal it every time; if random the product must be +1 on exactly half of the assignments.
ConsistencyReport verify_consistency(const LhvTable &table, const Partition &partition, const PauliString &p);

}  // namespace ghzlhv

#endif
