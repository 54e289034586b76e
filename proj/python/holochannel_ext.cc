// Copyright 2026 The holochannel Authors
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

#include <pybind11/complex.h>
#include <pybind11/eigen.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "holo/dense/dense_operator.h"
#include "holo/dense/fixed_point.h"
#include "holo/dense/spectrum.h"
#include "holo/diagnostics/entropy.h"
#include "holo/diagnostics/fidelity.h"
#include "holo/holography/appendix.h"
#include "holo/holography/channels.h"
#include "holo/holography/constructions.h"
#include "holo/holography/deformation.h"
#include "holo/holography/overlap.h"
#include "holo/holography/stabilizer_flow.h"
#include "holo/isotns/transfer.h"
#include "holo/runner/run.h"

namespace py = pybind11;
using namespace holo;

namespace {

std::vector<PauliString> parse_all(const std::vector<std::string> &texts) {
    std::vector<PauliString> out;
    for (const auto &t : texts) {
        out.push_back(PauliString::from_str(t));
    }
    return out;
}

py::dict spectrum_dict(const SpectrumReport &r) {
    py::dict d;
    d["magnitudes"] = r.magnitudes;
    d["eigenvalues"] = r.eigenvalues;
    d["sectors"] = r.sectors;
    d["degeneracy"] = r.degeneracy;
    d["gap"] = r.gap;
    d["converged"] = r.converged;
    d["method"] = r.method;
    return d;
}

}  // namespace

PYBIND11_MODULE(_holochannel, m) {
    m.doc() = "Holographic channels, steady states and isoTNS transfer maps";

    py::class_<PauliString>(m, "PauliString")
        .def(py::init(&PauliString::from_str), py::arg("text"))
        .def("__str__", &PauliString::str)
        .def("__repr__", [](const PauliString &p) { return "PauliString('" + p.str() + "')"; })
        .def("__mul__", [](const PauliString &a, const PauliString &b) { return a * b; })
        .def("__eq__", [](const PauliString &a, const PauliString &b) { return a == b; })
        .def("commutes", &PauliString::commutes)
        .def("weight", &PauliString::weight)
        .def_property_readonly("num_qubits", &PauliString::num_qubits)
        .def("matrix", [](const PauliString &p) { return pauli_matrix(p); });

    py::class_<StabilizerGroup>(m, "StabilizerGroup")
        .def(py::init([](const std::vector<std::string> &gens) {
                 auto ps = parse_all(gens);
                 if (ps.empty()) {
                     throw py::value_error("need at least one generator");
                 }
                 return StabilizerGroup(ps[0].num_qubits(), ps);
             }),
             py::arg("generators"))
        .def_property_readonly("rank", &StabilizerGroup::rank)
        .def_property_readonly("num_qubits", &StabilizerGroup::num_qubits)
        .def("contains", [](const StabilizerGroup &g, const std::string &p) { return g.contains(PauliString::from_str(p)); })
        .def("entropy", [](const StabilizerGroup &g, const std::vector<size_t> &region) {
            return stabilizer_entropy(g, region);
        })
        .def("density_matrix", [](const StabilizerGroup &g) { return stabilizer_density(g); })
        .def("to_text", &StabilizerGroup::to_text);

    m.def("noise_to_deformation", [](double p) {
        DeformationParams d = noise_to_deformation(p);
        py::dict out;
        out["p"] = d.p;
        out["g"] = d.g;
        out["zero_noise"] = d.zero_noise;
        return out;
    });

    m.def("ising_steady_state",
          [](size_t L, double p_x, double p_z, double tol) {
              FixedPointOptions fo;
              fo.tol = tol;
              return iterate_to_fixed_point(ising_channel(L, p_x, p_z),
                                            pure_density(product_state(std::string(L, '+'))), fo)
                  .rho;
          },
          py::arg("L"), py::arg("p_x") = 0.5, py::arg("p_z") = 0.5, py::arg("tol") = 1e-12);

    m.def("ring_cmi",
          [](const Mat &rho, size_t L, size_t a, size_t b1, size_t c, size_t b2) {
              return cmi(rho, Partition::ring(L, a, b1, c, b2));
          },
          py::arg("rho"), py::arg("L"), py::arg("a"), py::arg("b1"), py::arg("c"), py::arg("b2"));
    m.def("entropy", [](const Mat &rho) { return von_neumann_entropy(rho); });
    m.def("trace_distance", &trace_distance);
    m.def("fidelity", &uhlmann_fidelity);

    m.def("w_channel_spectrum",
          [](double g, size_t L, size_t k) {
              TransferOperator t = ring_transfer_channel(w_tensor(g), L);
              SpectrumOptions so;
              so.k = k;
              so.sectors = t.sectors();
              return spectrum_dict(leading_spectrum(t.channel, so));
          },
          py::arg("g"), py::arg("L"), py::arg("k") = 8);
    m.def("w_boundary_state", [](double g, size_t L) {
        return boundary_rdm(ring_transfer_channel(w_tensor(g), L), 1);
    });
    m.def("deformed_tc_boundary_state", [](double g, size_t L) { return boundary_rdm(deformed_tc_transfer(g, L), 1); });

    m.def("evolve_ring_circuit", [](size_t L, size_t depth) {
        return evolve_initial_stabilizers(build_1d_channel_circuit(L, depth, 0.5, 0.5));
    });
    m.def("verify_appendix", [](const std::string &which) {
        std::vector<std::tuple<std::string, bool, std::string>> out;
        for (const auto &r : verify_constructions(which)) {
            for (const auto &c : r.checks) {
                out.emplace_back(r.construction + ": " + c.name, c.passed, c.detail);
            }
        }
        return out;
    });
    m.def("overlap_check", [](double g_x, double g_z, size_t Lx, size_t Ly) {
        OverlapResult o = overlap_check(g_x, g_z, Lx, Ly);
        return std::make_pair(o.overlap, o.deviation);
    });

    m.def("run_config",
          [](const std::string &config_json, bool write) {
              RunReport r = run(parse_config(nlohmann::json::parse(config_json)), write);
              return r.to_json().dump();
          },
          py::arg("config_json"), py::arg("write") = false);
}
