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

#include "commands.h"

#include <CLI11.hpp>
#include <algorithm>
#include <charconv>
#include <cstdint>
#include <json.hpp>
#include <optional>
#include <ostream>
#include <random>
#include <stdexcept>

#include "ghzlhv/cnot_consistency.h"
#include "ghzlhv/errors.h"
#include "ghzlhv/lhv_table.h"
#include "ghzlhv/oracle.h"
#include "ghzlhv/protocol.h"
#include "ghzlhv/stabilizer_tableau.h"

namespace ghzlhv::cli {

namespace {

using Json = nlohmann::ordered_json;

struct UsageError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

enum class OracleChoice { Analytic, Statevector, Tableau };

const char *oracle_name(OracleChoice o) {
    switch (o) {
        case OracleChoice::Analytic:
            return "analytic";
        case OracleChoice::Statevector:
            return "statevector";
        default:
            return "tableau";
    }
}

struct RunConfig {
    size_t n = 0;
    std::string n_text;
    uint64_t seed = 0;
    std::string observable;
    std::string partition;
    std::string circuit;
    std::string mode;
    OracleChoice oracle = OracleChoice::Analytic;
    size_t trials = 0;
    bool json = false;
    bool evolution = false;
};

// Budgets for exhaustive sweeps in `verify`.
constexpr size_t kExhaustiveJointMax = 8;
constexpr size_t kStatevectorCheckMax = 10;
constexpr size_t kProtocolAllPartitionsMax = 5;
constexpr size_t kProtocolFixedPartitionMax = 6;
constexpr size_t kTableauModeMax = 8;
constexpr size_t kMaxWitnesses = 10;

size_t parse_count(const std::string &text, const char *what) {
    size_t value = 0;
    auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
    if (ec != std::errc() || ptr != text.data() + text.size()) {
        throw UsageError(std::string("invalid ") + what + ": '" + text + "'");
    }
    return value;
}

std::pair<size_t, size_t> parse_range(const std::string &text) {
    auto dash = text.find('-');
    if (dash == std::string::npos) {
        size_t n = parse_count(text, "qubit count");
        return {n, n};
    }
    size_t lo = parse_count(text.substr(0, dash), "qubit range");
    size_t hi = parse_count(text.substr(dash + 1), "qubit range");
    if (lo > hi) {
        throw UsageError("empty qubit range '" + text + "'");
    }
    return {lo, hi};
}

void check_n(size_t n, size_t max) {
    if (n < 1 || n > max) {
        throw UsageError("--n must be in [1, " + std::to_string(max) + "], got " + std::to_string(n));
    }
}

PauliString observable_for(const RunConfig &cfg) {
    PauliString p = parse_pauli(cfg.observable);
    if (p.num_qubits != cfg.n) {
        throw UsageError(
            "observable " + cfg.observable + " has " + std::to_string(p.num_qubits) + " letters but --n is " +
            std::to_string(cfg.n));
    }
    if (!p.is_observable()) {
        throw UsageError("observable " + cfg.observable + " has an imaginary sign");
    }
    return p;
}

// Resolves --n against the observable length when --n was omitted.
void resolve_n(RunConfig &cfg, size_t max) {
    if (cfg.n_text.empty()) {
        if (cfg.observable.empty()) {
            throw UsageError("--n is required");
        }
        cfg.n = parse_pauli(cfg.observable).num_qubits;
    } else {
        cfg.n = parse_count(cfg.n_text, "qubit count");
    }
    check_n(cfg.n, max);
}

PauliString random_pauli(size_t n, std::mt19937_64 &rng) {
    PauliString p = PauliString::identity(n);
    p.xs = rng() & p.qubit_mask();
    p.zs = rng() & p.qubit_mask();
    return p;
}

Assignment random_assignment(size_t n, std::mt19937_64 &rng) {
    return Assignment::from_index(n, rng());
}

Classification oracle_classify(OracleChoice o, const PauliString &p) {
    switch (o) {
        case OracleChoice::Analytic:
            return ghz_classify(p);
        case OracleChoice::Statevector:
            return statevector_classify(p, p.num_qubits);
        default:
            return tableau_classify(tableau_evolve(ghz_circuit(p.num_qubits)), p);
    }
}

Json config_json(const std::string &command, const RunConfig &cfg) {
    Json c;
    c["command"] = command;
    if (command == "verify") {
        c["mode"] = cfg.mode;
        c["n"] = cfg.n_text;
    } else {
        c["n"] = cfg.n;
    }
    if (!cfg.observable.empty()) {
        c["observable"] = cfg.observable;
    }
    if (!cfg.partition.empty()) {
        c["partition"] = cfg.partition;
    }
    if (!cfg.circuit.empty()) {
        c["circuit"] = cfg.circuit;
    }
    if (command == "classify") {
        c["oracle"] = oracle_name(cfg.oracle);
    }
    if (command == "protocol" || command == "verify") {
        c["seed"] = cfg.seed;
        c["trials"] = cfg.trials;
    }
    if (command == "table" || command == "tableau") {
        c["evolution"] = cfg.evolution;
    }
    return c;
}

std::string signed_int(int v) {
    return v > 0 ? "+1" : "-1";
}

// ---------------------------------------------------------------------------------------------------------------------
// table

int cmd_table(RunConfig cfg, std::ostream &out) {
    resolve_n(cfg, kMaxTableQubits);
    Circuit circuit = ghz_circuit(cfg.n);
    std::vector<LhvTable> tables = evolve(initial_table(cfg.n), circuit);
    LhvTable direct = ghz_table(cfg.n);
    bool matches = tables.back() == direct;

    std::vector<std::pair<std::string, const LhvTable *>> shown;
    if (cfg.evolution) {
        shown.emplace_back("initial", &tables[0]);
        for (size_t k = 0; k < circuit.gates.size(); k++) {
            shown.emplace_back("after " + circuit.gates[k].str(), &tables[k + 1]);
        }
    } else {
        shown.emplace_back("ghz", &direct);
    }

    if (cfg.json) {
        Json doc;
        doc["config"] = config_json("table", cfg);
        Json results = Json::array();
        for (const auto &[label, t] : shown) {
            results.push_back({{"step", label}, {"rows", t->row_strings()}});
        }
        doc["results"] = results;
        doc["summary"] = {{"circuit", circuit.str()}, {"circuit_matches_direct_construction", matches}};
        out << doc.dump(2) << "\n";
    } else {
        for (const auto &[label, t] : shown) {
            out << label << ":\n";
            out << "       X | Y | Z\n";
            auto lines = t->row_strings();
            for (size_t q = 0; q < lines.size(); q++) {
                out << "  q" << q + 1 << ":  " << lines[q] << "\n";
            }
            out << "\n";
        }
        out << "circuit " << circuit.str() << (matches ? " matches" : " DOES NOT match")
            << " the direct GHZ construction\n";
    }
    return matches ? kExitOk : kExitFailed;
}

// ---------------------------------------------------------------------------------------------------------------------
// classify

int cmd_classify(RunConfig cfg, std::ostream &out) {
    if (cfg.observable.empty()) {
        throw UsageError("--observable is required");
    }
    resolve_n(cfg, kMaxTableQubits);
    PauliString p = observable_for(cfg);
    if (cfg.oracle == OracleChoice::Statevector && cfg.n > kMaxStateVectorQubits) {
        throw UsageError("the statevector oracle supports at most " + std::to_string(kMaxStateVectorQubits) + " qubits");
    }
    LhvTable table = ghz_table(cfg.n);
    SymbolicValue joint = symbolic_joint(table, p);
    Classification lhv = classify_joint(table, p);
    Classification oracle = oracle_classify(cfg.oracle, p);
    bool agree = lhv == oracle;

    if (cfg.json) {
        Json doc;
        doc["config"] = config_json("classify", cfg);
        doc["results"] = Json::array({{
            {"observable", p.str()},
            {"symbolic_product", joint.str()},
            {"lhv", lhv.str()},
            {"oracle", oracle.str()},
        }});
        doc["summary"] = {{"agree", agree}};
        out << doc.dump(2) << "\n";
    } else {
        out << "observable:          " << p.str() << "\n";
        out << "symbolic product:    " << joint.str() << "\n";
        out << "lhv model:           " << lhv.str() << "\n";
        std::string label = std::string("oracle (") + oracle_name(cfg.oracle) + "):";
        label.resize(std::max<size_t>(label.size() + 1, 21), ' ');
        out << label << oracle.str() << "\n";
        out << (agree ? "agree" : "DISAGREE") << "\n";
    }
    return agree ? kExitOk : kExitFailed;
}

// ---------------------------------------------------------------------------------------------------------------------
// protocol

int cmd_protocol(RunConfig cfg, std::ostream &out) {
    if (cfg.observable.empty()) {
        throw UsageError("--observable is required");
    }
    resolve_n(cfg, kMaxTableQubits);
    PauliString p = observable_for(cfg);
    if (p.phase != Phase::one()) {
        throw UsageError("local measurement choices carry no sign; drop the sign from " + cfg.observable);
    }
    if (cfg.trials < 1) {
        throw UsageError("--trials must be at least 1");
    }
    Partition part = cfg.partition.empty() ? Partition::singletons(cfg.n) : Partition::parse(cfg.n, cfg.partition);
    if (cfg.partition.empty()) {
        cfg.partition = part.str();
    }
    LhvTable table = ghz_table(cfg.n);
    Classification joint = classify_joint(table, p);
    std::mt19937_64 rng(cfg.seed);

    size_t l = part.num_sets();
    size_t product_plus = 0;
    size_t flips = 0;
    size_t mismatches = 0;
    std::vector<size_t> party_plus(l, 0);
    Json trials = Json::array();
    std::vector<std::string> lines;
    size_t bits = 0;
    std::vector<size_t> senders;

    for (size_t trial = 1; trial <= cfg.trials; trial++) {
        Assignment a = random_assignment(cfg.n, rng);
        ProtocolRun run = run_protocol(table, part, p, a);
        int product = run.outcome_product();
        product_plus += product == +1;
        flips += run.transcript.alice_flipped;
        mismatches += joint.is_deterministic() && product != joint.value;
        bits = run.transcript.bit_count;
        senders.clear();
        for (const Message &m : run.transcript.messages) {
            senders.push_back(m.sender);
        }
        std::vector<int> outcomes = run.outcomes();
        for (size_t k = 0; k < l; k++) {
            party_plus[k] += outcomes[k] == +1;
        }
        std::vector<int> r_values;
        for (size_t j = 1; j <= cfg.n; j++) {
            r_values.push_back(a.value(j));
        }

        if (cfg.json) {
            Json msgs = Json::array();
            for (const Message &m : run.transcript.messages) {
                msgs.push_back({{"sender", m.sender}, {"q", m.q_is_i ? "i" : "1"}});
            }
            trials.push_back({
                {"trial", trial},
                {"assignment", r_values},
                {"outcomes", outcomes},
                {"messages", msgs},
                {"flip_product", run.transcript.flip_product.str()},
                {"alice_flipped", run.transcript.alice_flipped},
                {"product", product},
            });
        } else {
            std::string line = "trial " + std::to_string(trial) + ": R=(";
            for (size_t j = 0; j < r_values.size(); j++) {
                line += (j ? "," : "") + signed_int(r_values[j]);
            }
            line += ") outcomes=(";
            for (size_t k = 0; k < outcomes.size(); k++) {
                line += (k ? "," : "") + signed_int(outcomes[k]);
            }
            line += ") p=" + run.transcript.flip_product.str() + " flip=" +
                    (run.transcript.alice_flipped ? "yes" : "no") + " product=" + signed_int(product);
            lines.push_back(line);
        }
    }

    bool ok = mismatches == 0;
    auto freq = [&](size_t count) {
        return static_cast<double>(count) / static_cast<double>(cfg.trials);
    };
    if (cfg.json) {
        Json doc;
        doc["config"] = config_json("protocol", cfg);
        doc["results"] = trials;
        Json party_freq = Json::array();
        for (size_t k = 0; k < l; k++) {
            party_freq.push_back(freq(party_plus[k]));
        }
        doc["summary"] = {
            {"joint", joint.str()},
            {"bits", bits},
            {"senders", senders},
            {"product_plus_frequency", freq(product_plus)},
            {"product_minus_frequency", freq(cfg.trials - product_plus)},
            {"party_plus_frequency", party_freq},
            {"alice_flip_frequency", freq(flips)},
            {"mismatches", mismatches},
            {"consistent", ok},
        };
        out << doc.dump(2) << "\n";
    } else {
        out << "observable " << p.letters() << " on partition " << part.str() << " (seed " << cfg.seed << ")\n";
        for (const auto &line : lines) {
            out << line << "\n";
        }
        out << "joint measurement: " << joint.str() << "\n";
        out << "bits of communication: " << bits << "\n";
        out << "product +1 frequency: " << freq(product_plus) << ", -1 frequency: " << freq(cfg.trials - product_plus)
            << "\n";
        out << "alice flip frequency: " << freq(flips) << "\n";
        out << (ok ? "consistent" : "INCONSISTENT") << " with the joint measurement\n";
    }
    return ok ? kExitOk : kExitFailed;
}

// ---------------------------------------------------------------------------------------------------------------------
// verify

struct Counter {
    size_t checked = 0;
    size_t failed = 0;
    Json witnesses = Json::array();

    void record(bool ok, const std::string &witness) {
        checked++;
        if (!ok) {
            failed++;
            if (witnesses.size() < kMaxWitnesses) {
                witnesses.push_back(witness);
            }
        }
    }
    Json json() const {
        return {{"checked", checked}, {"failed", failed}, {"witnesses", witnesses}};
    }
};

Json verify_joint(size_t n, const RunConfig &cfg, std::mt19937_64 &rng, bool &pass) {
    LhvTable table = ghz_table(n);
    StabilizerTableau tableau = tableau_evolve(ghz_circuit(n));
    bool exhaustive = n <= kExhaustiveJointMax;
    bool with_statevector = n <= kStatevectorCheckMax;
    size_t count = exhaustive ? size_t{1} << (2 * n) : cfg.trials;
    Counter vs_analytic, vs_tableau, vs_statevector;
    for (size_t k = 0; k < count; k++) {
        PauliString p = exhaustive ? PauliString::from_index(n, k) : random_pauli(n, rng);
        Classification lhv = classify_joint(table, p);
        std::string w = p.str();
        vs_analytic.record(lhv == ghz_classify(p), w);
        vs_tableau.record(lhv == tableau_classify(tableau, p), w);
        if (with_statevector) {
            vs_statevector.record(lhv == statevector_classify(p, n), w);
        }
    }
    pass &= vs_analytic.failed == 0 && vs_tableau.failed == 0 && vs_statevector.failed == 0;
    Json r = {{"n", n}, {"sampling", exhaustive ? "exhaustive" : "random"}, {"observables", count}};
    r["analytic"] = vs_analytic.json();
    r["tableau"] = vs_tableau.json();
    r["statevector"] = with_statevector ? vs_statevector.json() : Json(nullptr);
    return r;
}

Json verify_protocol(size_t n, const RunConfig &cfg, bool &pass) {
    std::vector<Partition> partitions;
    if (cfg.partition.empty() || cfg.partition == "singletons") {
        partitions.push_back(Partition::singletons(n));
    } else if (cfg.partition == "all") {
        partitions = Partition::all(n);
    } else {
        partitions.push_back(Partition::parse(n, cfg.partition));
    }
    LhvTable table = ghz_table(n);
    Counter runs;
    size_t deterministic = 0;
    size_t assignments = 0;
    for (const Partition &part : partitions) {
        for (uint64_t k = 0; k < (uint64_t{1} << (2 * n)); k++) {
            PauliString p = PauliString::from_index(n, k);
            ConsistencyReport rep = verify_consistency(table, part, p);
            deterministic += rep.joint.is_deterministic();
            assignments += rep.assignments_checked;
            runs.record(rep.consistent && rep.bit_counts_ok, part.str() + " " + p.letters());
        }
    }
    pass &= runs.failed == 0;
    Json r = {
        {"n", n},
        {"partitions", partitions.size()},
        {"observables", size_t{1} << (2 * n)},
        {"assignments_per_observable", size_t{1} << n},
        {"protocol_runs", assignments},
        {"deterministic_observables", deterministic},
    };
    r["consistency"] = runs.json();
    return r;
}

Json verify_tableau(size_t n, bool &pass) {
    Circuit circuit = ghz_circuit(n);
    Counter structure;
    std::vector<StabilizerTableau> history = tableau_history(circuit);
    for (size_t k = 0; k < history.size(); k++) {
        bool ok = history[k].rank() == n && history[k].pairwise_commuting();
        structure.record(ok, k == 0 ? "initial" : "after " + circuit.gates[k - 1].str());
    }
    const StabilizerTableau &final_tab = history.back();
    std::vector<std::string> expected;
    std::string all_x(n, 'X');
    expected.push_back("+" + all_x);
    for (size_t j = 2; j <= n; j++) {
        std::string g(n, 'I');
        g[0] = 'Z';
        g[j - 1] = 'Z';
        expected.push_back("+" + g);
    }
    std::vector<std::string> got;
    for (const auto &g : final_tab.generators) {
        got.push_back(g.str());
    }
    bool generators_ok = got == expected;

    Counter agreement;
    size_t plus = 0, minus = 0;
    for (uint64_t k = 0; k < (uint64_t{1} << (2 * n)); k++) {
        PauliString p = PauliString::from_index(n, k);
        for (const PauliString &signed_p : {p, -p}) {
            Classification t = tableau_classify(final_tab, signed_p);
            agreement.record(t == ghz_classify(signed_p), signed_p.str());
            plus += t == Classification::deterministic(+1);
            minus += t == Classification::deterministic(-1);
        }
    }
    bool counts_ok = plus == (size_t{1} << n) && minus == (size_t{1} << n);
    pass &= generators_ok && counts_ok && structure.failed == 0 && agreement.failed == 0;
    Json r = {{"n", n}, {"generators", got}, {"generators_match_ghz", generators_ok}};
    r["tableau_structure"] = structure.json();
    r["analytic_agreement"] = agreement.json();
    r["deterministic_plus"] = plus;
    r["deterministic_minus"] = minus;
    r["counts_match"] = counts_ok;
    return r;
}

Json verify_cnot_rules(bool &pass) {
    CnotConsistencyReport rep = check_cnot_consistency();
    Json relations = Json::array();
    size_t holding = 0;
    std::vector<std::string> conditional;
    for (const auto &r : rep.relations) {
        holding += r.holds_under_precondition;
        Json j = {
            {"before", r.before.letters()},
            {"after", r.after.str()},
            {"holds_under_precondition", r.holds_under_precondition},
            {"holds_unconditionally", r.holds_unconditionally},
        };
        if (r.counterexample) {
            j["counterexample"] = r.counterexample->str();
            conditional.push_back(r.before.letters());
        }
        relations.push_back(j);
    }
    bool ok = rep.all_hold_under_precondition() && conditional.size() == 4;
    pass &= ok;
    return {
        {"relations", relations},
        {"configurations", rep.configs_checked},
        {"precondition_configurations", rep.precondition_configs},
        {"holding_under_precondition", holding},
        {"conditional_relations", conditional},
    };
}

int cmd_verify(RunConfig cfg, std::ostream &out) {
    static const std::vector<std::string> kModes = {"joint", "protocol", "cnot-rules", "tableau"};
    if (std::find(kModes.begin(), kModes.end(), cfg.mode) == kModes.end()) {
        throw UsageError("--mode must be one of joint, protocol, cnot-rules, tableau");
    }
    if (cfg.n_text.empty()) {
        cfg.n_text = cfg.mode == "protocol" ? "2-5" : "2-8";
    }
    auto [lo, hi] = parse_range(cfg.n_text);
    if (cfg.mode == "joint") {
        check_n(lo, kMaxPauliQubits);
        check_n(hi, kMaxTableQubits);
    } else if (cfg.mode == "protocol") {
        size_t max = cfg.partition == "all" ? kProtocolAllPartitionsMax : kProtocolFixedPartitionMax;
        check_n(lo, max);
        check_n(hi, max);
        bool explicit_partition = !cfg.partition.empty() && cfg.partition != "all" && cfg.partition != "singletons";
        if (explicit_partition && lo != hi) {
            throw UsageError("an explicit --partition needs a single --n");
        }
    } else if (cfg.mode == "tableau") {
        check_n(lo, kTableauModeMax);
        check_n(hi, kTableauModeMax);
    }
    if (cfg.trials < 1) {
        throw UsageError("--trials must be at least 1");
    }

    std::mt19937_64 rng(cfg.seed);
    bool pass = true;
    Json results = Json::array();
    if (cfg.mode == "cnot-rules") {
        results.push_back(verify_cnot_rules(pass));
    } else {
        for (size_t n = lo; n <= hi; n++) {
            if (cfg.mode == "joint") {
                results.push_back(verify_joint(n, cfg, rng, pass));
            } else if (cfg.mode == "protocol") {
                results.push_back(verify_protocol(n, cfg, pass));
            } else {
                results.push_back(verify_tableau(n, pass));
            }
        }
    }

    if (cfg.json) {
        Json doc;
        doc["config"] = config_json("verify", cfg);
        doc["results"] = results;
        doc["summary"] = {{"passed", pass}};
        out << doc.dump(2) << "\n";
        return pass ? kExitOk : kExitFailed;
    }

    auto line = [&](const std::string &label, const Json &counter) {
        size_t checked = counter["checked"];
        size_t failed = counter["failed"];
        out << "  " << label << ": " << checked - failed << "/" << checked << " agree\n";
    };
    for (const Json &r : results) {
        if (cfg.mode == "cnot-rules") {
            for (const Json &rel : r["relations"]) {
                out << "  " << rel["before"].get<std::string>() << " -> " << rel["after"].get<std::string>() << ": "
                    << (rel["holds_under_precondition"].get<bool>() ? "holds" : "FAILS") << " under XYZ=i"
                    << (rel["holds_unconditionally"].get<bool>() ? ", holds unconditionally" : ", needs XYZ=i")
                    << "\n";
            }
            out << r["holding_under_precondition"].get<size_t>() << "/15 relations hold under the precondition; "
                << r["conditional_relations"].size() << " are falsified without it\n";
            continue;
        }
        size_t n = r["n"];
        out << "n=" << n << ":\n";
        if (cfg.mode == "joint") {
            line("lhv vs analytic", r["analytic"]);
            line("lhv vs tableau", r["tableau"]);
            if (!r["statevector"].is_null()) {
                line("lhv vs statevector", r["statevector"]);
            }
        } else if (cfg.mode == "protocol") {
            size_t checked = r["consistency"]["checked"];
            size_t failed = r["consistency"]["failed"];
            out << "  " << r["partitions"].get<size_t>() << " partition(s) x " << r["observables"].get<size_t>()
                << " observables x " << r["assignments_per_observable"].get<size_t>() << " assignments: "
                << checked - failed << "/" << checked << " consistent\n";
        } else {
            out << "  generators: ";
            for (const Json &g : r["generators"]) {
                out << g.get<std::string>() << " ";
            }
            out << (r["generators_match_ghz"].get<bool>() ? "(match)" : "(MISMATCH)") << "\n";
            line("tableau vs analytic", r["analytic_agreement"]);
            out << "  deterministic +1: " << r["deterministic_plus"].get<size_t>()
                << ", deterministic -1: " << r["deterministic_minus"].get<size_t>() << "\n";
        }
    }
    out << (pass ? "PASS" : "FAIL") << "\n";
    return pass ? kExitOk : kExitFailed;
}

// ---------------------------------------------------------------------------------------------------------------------
// tableau

int cmd_tableau(RunConfig cfg, std::ostream &out) {
    resolve_n(cfg, kMaxPauliQubits);
    Circuit circuit = cfg.circuit.empty() ? ghz_circuit(cfg.n) : parse_circuit(cfg.n, cfg.circuit);
    std::vector<StabilizerTableau> history = tableau_history(circuit);
    std::optional<PauliString> p;
    std::optional<Classification> cls;
    if (!cfg.observable.empty()) {
        p = observable_for(cfg);
        cls = tableau_classify(history.back(), *p);
    }

    auto gens = [](const StabilizerTableau &t) {
        std::vector<std::string> out;
        for (const auto &g : t.generators) {
            out.push_back(g.str());
        }
        return out;
    };
    std::vector<std::pair<std::string, const StabilizerTableau *>> shown;
    if (cfg.evolution) {
        shown.emplace_back("initial", &history[0]);
        for (size_t k = 0; k < circuit.gates.size(); k++) {
            shown.emplace_back("after " + circuit.gates[k].str(), &history[k + 1]);
        }
    } else {
        shown.emplace_back("final", &history.back());
    }

    if (cfg.json) {
        Json doc;
        doc["config"] = config_json("tableau", cfg);
        Json results = Json::array();
        for (const auto &[label, t] : shown) {
            results.push_back({{"step", label}, {"generators", gens(*t)}});
        }
        doc["results"] = results;
        Json summary = {{"circuit", circuit.str()}, {"rank", history.back().rank()}};
        if (p) {
            summary["observable"] = p->str();
            summary["classification"] = cls->str();
        }
        doc["summary"] = summary;
        out << doc.dump(2) << "\n";
    } else {
        for (const auto &[label, t] : shown) {
            out << label << ": <";
            auto g = gens(*t);
            for (size_t k = 0; k < g.size(); k++) {
                out << (k ? ", " : "") << g[k];
            }
            out << ">\n";
        }
        if (p) {
            out << p->str() << ": " << cls->str() << "\n";
        }
    }
    return kExitOk;
}

}  // namespace

int run(const std::vector<std::string> &args, std::ostream &out, std::ostream &err) {
    CLI::App app{"Communication-assisted local hidden-variable simulation of GHZ Pauli measurements"};
    app.name("ghzlhv");
    app.require_subcommand(1);

    RunConfig cfg;
    std::string oracle = "analytic";

    auto add_common = [&](CLI::App *sub) {
        sub->add_flag("--json", cfg.json, "Emit a JSON document with config, results and summary");
    };

    auto *table = app.add_subcommand("table", "Show the LHV table for the n-qubit GHZ state");
    table->add_option("--n", cfg.n_text, "Number of qubits")->required();
    table->add_flag("--evolution", cfg.evolution, "Show every step of the preparation circuit");
    add_common(table);

    auto *classify = app.add_subcommand("classify", "Classify a Pauli product with the LHV model and an oracle");
    classify->add_option("--n", cfg.n_text, "Number of qubits (defaults to the observable length)");
    classify->add_option("--observable", cfg.observable, "Pauli product, e.g. XYY or -ZZI")->required();
    classify->add_option("--oracle", oracle, "analytic, statevector or tableau")
        ->check(CLI::IsMember({"analytic", "statevector", "tableau"}));
    add_common(classify);

    auto *protocol = app.add_subcommand("protocol", "Run the communication-assisted local measurement protocol");
    protocol->add_option("--n", cfg.n_text, "Number of qubits (defaults to the observable length)");
    protocol->add_option("--observable", cfg.observable, "Local measurement choices, e.g. XYY")->required();
    protocol->add_option("--partition", cfg.partition, "Parties, e.g. 1,2|3|4 (default: one qubit each)");
    protocol->add_option("--seed", cfg.seed, "Seed for the random-variable draws");
    protocol->add_option("--trials", cfg.trials, "Number of draws")->default_val(16);
    add_common(protocol);

    auto *verify = app.add_subcommand("verify", "Run an exhaustive verification sweep");
    verify->add_option("--mode", cfg.mode, "joint, protocol, cnot-rules or tableau")->required();
    verify->add_option("--n", cfg.n_text, "Qubit count or range such as 2-8");
    verify->add_option("--partition", cfg.partition, "protocol mode: singletons (default), all, or an explicit split");
    verify->add_option("--seed", cfg.seed, "Seed for sampled observables beyond the exhaustive range");
    verify->add_option("--trials", cfg.trials, "Sampled observables per n beyond the exhaustive range")
        ->default_val(10000);
    add_common(verify);

    auto *tableau = app.add_subcommand("tableau", "Evolve stabilizer generators through an H/CNOT circuit");
    tableau->add_option("--n", cfg.n_text, "Number of qubits")->required();
    tableau->add_option("--circuit", cfg.circuit, "Gates such as \"H(1) CNOT(1,2)\" (default: GHZ circuit)");
    tableau->add_option("--observable", cfg.observable, "Classify this Pauli product on the final state");
    tableau->add_flag("--evolution", cfg.evolution, "Show generators after every gate");
    add_common(tableau);

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::CallForHelp &e) {
        app.exit(e, out, err);
        return kExitOk;
    } catch (const CLI::ParseError &e) {
        app.exit(e, out, err);
        return kExitUsage;
    }
    cfg.oracle = oracle == "statevector" ? OracleChoice::Statevector
                 : oracle == "tableau"   ? OracleChoice::Tableau
                                         : OracleChoice::Analytic;

    try {
        if (table->parsed()) {
            return cmd_table(cfg, out);
        }
        if (classify->parsed()) {
            return cmd_classify(cfg, out);
        }
        if (protocol->parsed()) {
            return cmd_protocol(cfg, out);
        }
        if (verify->parsed()) {
            return cmd_verify(cfg, out);
        }
        return cmd_tableau(cfg, out);
    } catch (const UsageError &e) {
        err << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const ParseError &e) {
        err << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const CapacityError &e) {
        err << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const IndexError &e) {
        err << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const DimensionError &e) {
        err << "error: " << e.what() << "\n";
        return kExitUsage;
    }
}

}  // namespace ghzlhv::cli
