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

#include <pybind11/operators.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "ghzlhv/cnot_consistency.h"
#include "ghzlhv/errors.h"
#include "ghzlhv/lhv_table.h"
#include "ghzlhv/oracle.h"
#include "ghzlhv/protocol.h"
#include "ghzlhv/stabilizer_tableau.h"

namespace py = pybind11;
using namespace ghzlhv;

namespace {

py::dict run_to_dict(const ProtocolRun &run) {
    py::list messages;
    for (const Message &m : run.transcript.messages) {
        messages.append(py::make_tuple(m.sender, m.q_is_i ? "i" : "1"));
    }
    py::dict d;
    d["outcomes"] = run.outcomes();
    d["product"] = run.outcome_product();
    d["messages"] = messages;
    d["bit_count"] = run.transcript.bit_count;
    d["flip_product"] = run.transcript.flip_product.str();
    d["alice_flipped"] = run.transcript.alice_flipped;
    return d;
}

Circuit circuit_for(size_t n, const std::optional<std::string> &text) {
    return text ? parse_circuit(n, *text) : ghz_circuit(n);
}

}  // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "Local hidden-variable model with classical communication for Pauli measurements on GHZ states.";

    py::register_exception<ParseError>(m, "ParseError", PyExc_ValueError);
    py::register_exception<CapacityError>(m, "CapacityError", PyExc_ValueError);
    py::register_exception<DimensionError>(m, "DimensionError", PyExc_ValueError);
    py::register_exception<NotObservableError>(m, "NotObservableError", PyExc_ValueError);
    py::register_exception<PreconditionError>(m, "PreconditionError", PyExc_ValueError);
    py::register_exception<InvariantError>(m, "InvariantError", PyExc_RuntimeError);
    py::register_exception<IndexError>(m, "QubitIndexError", PyExc_IndexError);

    py::class_<PauliString>(m, "PauliString")
        .def(py::init(&parse_pauli), py::arg("text"))
        .def_static("identity", &PauliString::identity, py::arg("num_qubits"))
        .def_readonly("num_qubits", &PauliString::num_qubits)
        .def_property_readonly("letters", &PauliString::letters)
        .def_property_readonly("sign", [](const PauliString &p) { return p.phase.sign_prefix(); })
        .def("is_observable", &PauliString::is_observable)
        .def("commutes", [](const PauliString &a, const PauliString &b) { return commutes(a, b); })
        .def("conjugate_hadamard", &conjugate_hadamard, py::arg("qubit"))
        .def("conjugate_cnot", &conjugate_cnot, py::arg("control"), py::arg("target"))
        .def(py::self * py::self)
        .def(-py::self)
        .def(py::self == py::self)
        .def("__str__", &PauliString::str)
        .def("__repr__", [](const PauliString &p) { return "PauliString('" + p.str() + "')"; });

    py::class_<Classification>(m, "Classification")
        .def_property_readonly("is_deterministic", &Classification::is_deterministic)
        .def_readonly("value", &Classification::value)
        .def(py::self == py::self)
        .def("__str__", &Classification::str)
        .def("__repr__", &Classification::str);

    py::class_<Assignment>(m, "Assignment")
        .def_static("from_values", [](const std::vector<int> &v) { return Assignment::from_values(v); })
        .def_static("from_index", &Assignment::from_index, py::arg("num_vars"), py::arg("index"))
        .def("value", &Assignment::value, py::arg("j"));

    py::class_<LhvTable>(m, "LhvTable")
        .def_property_readonly("num_qubits", &LhvTable::num_qubits)
        .def("row_strings", &LhvTable::row_strings)
        .def("columns_well_typed", &LhvTable::columns_well_typed)
        .def(py::self == py::self)
        .def("__str__", &LhvTable::str);

    m.def(
        "initial_table",
        [](size_t n, bool uniform) {
            return initial_table(n, uniform ? InitialYConvention::Uniform : InitialYConvention::Figure);
        },
        py::arg("n"), py::arg("uniform") = false);
    m.def("ghz_table", &ghz_table, py::arg("n"));
    m.def("apply_hadamard", &apply_hadamard, py::arg("table"), py::arg("qubit"));
    m.def("apply_cnot", &apply_cnot, py::arg("table"), py::arg("control"), py::arg("target"));
    m.def(
        "xyz_product", [](const LhvTable &t, size_t q) { return xyz_product(t, q).phase.str(); }, py::arg("table"),
        py::arg("qubit"));
    m.def("classify_joint", &classify_joint, py::arg("table"), py::arg("observable"));
    m.def("sample_outcome", &sample_outcome, py::arg("table"), py::arg("observable"), py::arg("assignment"));

    m.def("ghz_classify", &ghz_classify, py::arg("observable"));
    m.def("statevector_classify", &statevector_classify, py::arg("observable"), py::arg("n"));

    py::class_<StabilizerTableau>(m, "StabilizerTableau")
        .def_readonly("num_qubits", &StabilizerTableau::num_qubits)
        .def_property_readonly(
            "generators",
            [](const StabilizerTableau &t) {
                std::vector<std::string> out;
                for (const auto &g : t.generators) {
                    out.push_back(g.str());
                }
                return out;
            })
        .def("rank", &StabilizerTableau::rank);
    m.def(
        "tableau_evolve", [](size_t n, std::optional<std::string> circuit) { return tableau_evolve(circuit_for(n, circuit)); },
        py::arg("n"), py::arg("circuit") = py::none(),
        "Evolves <Z_1..Z_n> through a circuit such as \"H(1) CNOT(1,2)\"; defaults to the GHZ circuit.");
    m.def("tableau_classify", &tableau_classify, py::arg("tableau"), py::arg("observable"));
    m.def("ghz_circuit_str", [](size_t n) { return ghz_circuit(n).str(); }, py::arg("n"));

    py::class_<Partition>(m, "Partition")
        .def(py::init(&Partition::parse), py::arg("num_qubits"), py::arg("text"))
        .def_static("singletons", &Partition::singletons, py::arg("num_qubits"))
        .def_static("all", &Partition::all, py::arg("num_qubits"))
        .def_property_readonly("num_sets", &Partition::num_sets)
        .def_property_readonly("sets", &Partition::sets)
        .def("__str__", &Partition::str);

    m.def("communication_cost", &communication_cost, py::arg("partition"));
    m.def(
        "local_reports",
        [](const LhvTable &t, const Partition &part, const PauliString &p, const Assignment &a) {
            py::list out;
            for (const PartyReport &r : local_reports(t, part, p, a)) {
                py::dict d;
                d["set_index"] = r.set_index;
                d["local"] = r.local.str();
                d["raw_report"] = r.raw_report;
                d["q"] = r.q.str();
                out.append(d);
            }
            return out;
        },
        py::arg("table"), py::arg("partition"), py::arg("observable"), py::arg("assignment"));
    m.def(
        "run_protocol",
        [](const LhvTable &t, const Partition &part, const PauliString &p, const Assignment &a) {
            return run_to_dict(run_protocol(t, part, p, a));
        },
        py::arg("table"), py::arg("partition"), py::arg("observable"), py::arg("assignment"));
    m.def(
        "verify_consistency",
        [](const LhvTable &t, const Partition &part, const PauliString &p) {
            ConsistencyReport r = verify_consistency(t, part, p);
            py::dict d;
            d["consistent"] = r.consistent && r.bit_counts_ok;
            d["joint"] = r.joint;
            d["assignments_checked"] = r.assignments_checked;
            d["product_plus_count"] = r.product_plus_count;
            return d;
        },
        py::arg("table"), py::arg("partition"), py::arg("observable"));

    m.def("check_cnot_consistency", [] {
        py::list out;
        for (const CnotRelationCheck &r : check_cnot_consistency().relations) {
            py::dict d;
            d["before"] = r.before.letters();
            d["after"] = r.after.str();
            d["holds_under_precondition"] = r.holds_under_precondition;
            d["holds_unconditionally"] = r.holds_unconditionally;
            out.append(d);
        }
        return out;
    });
}
