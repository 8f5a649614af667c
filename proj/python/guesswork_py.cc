// Copyright 2026 The Guesswork Authors
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

// Python bindings. Numberings cross the boundary as one-based lists.

#include <pybind11/complex.h>
#include <pybind11/eigen.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "guesswork/errors.h"
#include "guesswork/guesswork.h"
#include "guesswork/json_io.h"

namespace py = pybind11;
using namespace guesswork;

namespace {

Numbering to_numbering(const std::vector<int> &one_based) {
    return Numbering::from_one_based(one_based);
}

SolverOptions make_options(unsigned threads, std::optional<std::size_t> factorial_cap) {
    SolverOptions options;
    options.enumeration.threads = threads;
    options.enumeration.factorial_cap = factorial_cap.value_or(factorial_cap_from_env());
    return options;
}

Ensemble from_states(const std::vector<ComplexMatrix> &states) {
    std::vector<HermitianOperator> ops;
    ops.reserve(states.size());
    for (const auto &s : states) {
        ops.emplace_back(s);
    }
    return Ensemble::validate(std::move(ops));
}

}  // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "Minimum guesswork of quantum ensembles under balanced costs";

    auto input_error = py::register_exception<InputError>(m, "InputError", PyExc_ValueError);
    py::register_exception<DimensionError>(m, "DimensionError", input_error.ptr());
    py::register_exception<NotBalancedError>(m, "NotBalancedError", input_error.ptr());
    py::register_exception<CapExceededError>(m, "CapExceededError", input_error.ptr());
    py::register_exception<SolverUnavailableError>(m, "SolverUnavailableError", PyExc_RuntimeError);
    py::register_exception<NumericalError>(m, "NumericalError", PyExc_ArithmeticError);

    py::class_<Ensemble>(m, "Ensemble")
        .def_static("from_states", &from_states, py::arg("states"),
                    "Validate a list of PSD matrices whose traces sum to one.")
        .def_static(
            "from_json", [](const std::string &text) { return ensemble_from_json(Json::parse(text)); },
            py::arg("text"))
        .def("to_json", [](const Ensemble &e) { return dump(ensemble_to_json(e)); })
        .def_property_readonly("dim", &Ensemble::dim)
        .def_property_readonly("size", &Ensemble::size)
        .def_property_readonly("prior", &Ensemble::prior)
        .def_property_readonly("states",
                               [](const Ensemble &e) {
                                   std::vector<ComplexMatrix> out;
                                   for (const auto &s : e.states()) {
                                       out.push_back(s.matrix());
                                   }
                                   return out;
                               })
        .def_property_readonly("bloch",
                               [](const Ensemble &e) {
                                   RealMatrix out(static_cast<Eigen::Index>(e.bloch().size()), 3);
                                   for (std::size_t i = 0; i < e.bloch().size(); ++i) {
                                       for (int k = 0; k < 3; ++k) {
                                           out(static_cast<Eigen::Index>(i), k) = e.bloch()[i].components[k];
                                       }
                                   }
                                   return out;
                               })
        .def("__len__", &Ensemble::size);

    py::class_<CostFunction>(m, "CostFunction")
        .def(py::init<std::vector<double>>(), py::arg("values"))
        .def_property_readonly("values", &CostFunction::values)
        .def_property_readonly("mean", &CostFunction::mean)
        .def("is_balanced", [](const CostFunction &c) { return c.is_balanced(); })
        .def("balancing_permutation", [](const CostFunction &c) { return c.balancing_permutation().one_based(); })
        .def("__len__", &CostFunction::size);
    m.def("identity_cost", &identity_cost, py::arg("size"));
    m.def(
        "cost_gram", [](const CostFunction &c, double shift) { return cost_gram(c, shift); }, py::arg("cost"),
        py::arg("shift") = 0.0);

    m.def(
        "generate_polygon_antiprism",
        [](int size, double h, std::optional<double> lam) { return generate_polygon_antiprism(size, h, lam); },
        py::arg("size"), py::arg("h") = 0.0, py::arg("lam") = std::nullopt);
    m.def("generate_sic", &generate_sic);
    m.def("generate_mub", &generate_mub);
    m.def("generate_random", &generate_random_uniform_prior, py::arg("size"), py::arg("dim") = 2,
          py::arg("seed") = 0);
    m.def("antiprism_h_bound", &antiprism_h_bound, py::arg("size"));
    m.def(
        "is_uniform_prior", [](const Ensemble &e) { return is_uniform_prior(e); }, py::arg("ensemble"));
    m.def(
        "constant_overlap_check", [](const Ensemble &e) { return constant_overlap_check(e); }, py::arg("ensemble"));

    m.def(
        "effective_operator",
        [](const Ensemble &e, const CostFunction &c, const std::vector<int> &n) {
            return effective_operator(e, c, to_numbering(n)).matrix();
        },
        py::arg("ensemble"), py::arg("cost"), py::arg("numbering"));
    m.def(
        "bloch_gram", [](const Ensemble &e) { return bloch_gram(e); }, py::arg("ensemble"));
    m.def(
        "qap_objective",
        [](const Ensemble &e, const CostFunction &c, const std::vector<int> &n) {
            return qap_objective(make_qap_instance(e, c), to_numbering(n));
        },
        py::arg("ensemble"), py::arg("cost"), py::arg("numbering"));
    m.def(
        "brute_force_solve",
        [](const RealMatrix &cost_gram, const RealMatrix &bloch_gram, unsigned threads,
           std::optional<std::size_t> cap) {
            const auto sol = brute_force_solve(QapInstance(cost_gram, bloch_gram),
                                               make_options(threads, cap).enumeration);
            return py::make_tuple(sol.numbering.one_based(), sol.objective);
        },
        py::arg("cost_gram"), py::arg("bloch_gram"), py::arg("threads") = 0, py::arg("factorial_cap") = std::nullopt,
        "Maximize sum C(t,u) B(n(t),n(u)); returns (numbering, objective).");
    m.def(
        "is_benevolent",
        [](const RealMatrix &a) { return benevolence_to_json(is_benevolent(a)).dump(); }, py::arg("matrix"),
        "Benevolence report as a JSON string.");
    m.def(
        "zigzag_numbering", [](std::size_t size) { return zigzag_numbering(size).one_based(); }, py::arg("size"));

    m.def(
        "min_guesswork_qubit_json",
        [](const Ensemble &e, const CostFunction &c, const std::string &method, unsigned threads,
           std::optional<std::size_t> cap) {
            const auto choice = parse_method_choice(method);
            const auto options = make_options(threads, cap);
            py::gil_scoped_release release;
            return dump(report_to_json(min_guesswork_qubit(e, c, choice, options)));
        },
        py::arg("ensemble"), py::arg("cost"), py::arg("method") = "auto", py::arg("threads") = 0,
        py::arg("factorial_cap") = std::nullopt);
    m.def(
        "min_guesswork_general_json",
        [](const Ensemble &e, const CostFunction &c, unsigned threads,
           std::optional<std::size_t> cap) -> std::optional<std::string> {
            const auto options = make_options(threads, cap);
            py::gil_scoped_release release;
            auto report = min_guesswork_general(e, c, std::nullopt, options);
            if (!report) {
                return std::nullopt;
            }
            return dump(report_to_json(*report));
        },
        py::arg("ensemble"), py::arg("cost"), py::arg("threads") = 0, py::arg("factorial_cap") = std::nullopt);
    m.def(
        "simulate_optimal_json",
        [](const Ensemble &e, const CostFunction &c, std::uint64_t samples, std::uint64_t seed) {
            py::gil_scoped_release release;
            const auto report = min_guesswork_qubit(e, c);
            return dump(simulation_to_json(simulate(e, c, report.measurement, samples, seed)));
        },
        py::arg("ensemble"), py::arg("cost"), py::arg("samples"), py::arg("seed") = 0,
        "Monte Carlo at the optimal qubit measurement.");
}
