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

#include "guesswork/json_io.h"

#include <fstream>
#include <sstream>

#include "guesswork/errors.h"

namespace guesswork {

namespace {

Json numbering_to_json(const Numbering &n) {
    return Json(n.one_based());
}

template <class T>
T get_field(const Json &j, const char *key) {
    if (!j.contains(key)) {
        throw InputError(std::string("missing field '") + key + "'");
    }
    try {
        return j.at(key).get<T>();
    } catch (const nlohmann::json::exception &err) {
        throw InputError(std::string("bad field '") + key + "': " + err.what());
    }
}

}  // namespace

Json matrix_to_json(const ComplexMatrix &m) {
    Json rows = Json::array();
    for (Eigen::Index i = 0; i < m.rows(); ++i) {
        Json row = Json::array();
        for (Eigen::Index j = 0; j < m.cols(); ++j) {
            row.push_back(Json::array({m(i, j).real(), m(i, j).imag()}));
        }
        rows.push_back(std::move(row));
    }
    return rows;
}

HermitianOperator operator_from_json(const Json &j) {
    if (!j.is_array() || j.empty()) {
        throw InputError("matrix must be a non-empty array of rows");
    }
    const auto d = static_cast<Eigen::Index>(j.size());
    ComplexMatrix m(d, d);
    for (Eigen::Index i = 0; i < d; ++i) {
        const Json &row = j[i];
        if (!row.is_array() || static_cast<Eigen::Index>(row.size()) != d) {
            throw InputError("matrix must be square");
        }
        for (Eigen::Index k = 0; k < d; ++k) {
            const Json &entry = row[k];
            if (entry.is_number()) {
                m(i, k) = entry.get<double>();
            } else if (entry.is_array() && entry.size() == 2 && entry[0].is_number() && entry[1].is_number()) {
                m(i, k) = Complex(entry[0].get<double>(), entry[1].get<double>());
            } else {
                throw InputError("matrix entries must be [re, im] pairs");
            }
        }
    }
    return HermitianOperator(std::move(m));
}

Json ensemble_to_json(const Ensemble &e, const std::optional<EnsembleFamilySpec> &generator) {
    Json j;
    j["dim"] = e.dim();
    Json states = Json::array();
    for (const auto &s : e.states()) {
        states.push_back(matrix_to_json(s.matrix()));
    }
    j["states"] = std::move(states);
    if (generator) {
        j["generator"] = family_spec_to_json(*generator);
    }
    return j;
}

Ensemble ensemble_from_json(const Json &j) {
    if (!j.is_object()) {
        throw InputError("ensemble JSON must be an object");
    }
    std::vector<HermitianOperator> states;
    if (j.contains("states")) {
        const Json &list = j.at("states");
        if (!list.is_array()) {
            throw InputError("'states' must be an array");
        }
        for (const Json &s : list) {
            states.push_back(operator_from_json(s));
        }
    } else if (j.contains("bloch")) {
        const Json &list = j.at("bloch");
        if (!list.is_array()) {
            throw InputError("'bloch' must be an array");
        }
        for (const Json &s : list) {
            const auto v = get_field<std::vector<double>>(s, "v");
            if (v.size() != 3) {
                throw InputError("Bloch vectors must have three components");
            }
            states.push_back(from_bloch(get_field<double>(s, "trace"), BlochVector{{v[0], v[1], v[2]}}));
        }
    } else {
        throw InputError("ensemble JSON needs 'states' or 'bloch'");
    }
    if (j.contains("dim") && !states.empty() && get_field<std::size_t>(j, "dim") != states.front().dim()) {
        throw DimensionError("'dim' does not match the state matrices");
    }
    return Ensemble::validate(std::move(states));
}

std::optional<EnsembleFamilySpec> generator_from_json(const Json &j) {
    if (!j.is_object() || !j.contains("generator")) {
        return std::nullopt;
    }
    return family_spec_from_json(j.at("generator"));
}

Json family_spec_to_json(const EnsembleFamilySpec &spec) {
    Json j;
    j["family"] = std::string(family_name(spec.family));
    j["M"] = spec.size;
    j["h"] = spec.h;
    if (spec.lambda) {
        j["lambda"] = *spec.lambda;
    } else {
        j["lambda"] = "pure";
    }
    if (spec.family == Family::kRandom) {
        j["seed"] = spec.seed;
        j["dim"] = spec.dim;
    }
    return j;
}

EnsembleFamilySpec family_spec_from_json(const Json &j) {
    if (!j.is_object()) {
        throw InputError("family spec must be an object");
    }
    EnsembleFamilySpec spec;
    spec.family = parse_family(get_field<std::string>(j, "family"));
    if (spec.family == Family::kSic) {
        spec.size = 4;
        spec.h = antiprism_h_bound(4);
    } else if (spec.family == Family::kMub) {
        spec.size = 6;
        spec.h = antiprism_h_bound(6);
    } else {
        spec.size = get_field<int>(j, "M");
    }
    if (j.contains("h")) {
        spec.h = get_field<double>(j, "h");
    }
    if (j.contains("lambda")) {
        const Json &lam = j.at("lambda");
        if (lam.is_string()) {
            if (lam.get<std::string>() != "pure") {
                throw InputError("lambda must be a number or \"pure\"");
            }
            spec.lambda.reset();
        } else {
            spec.lambda = get_field<double>(j, "lambda");
        }
    }
    if (j.contains("seed")) {
        spec.seed = get_field<std::uint64_t>(j, "seed");
    }
    if (j.contains("dim")) {
        spec.dim = get_field<int>(j, "dim");
    }
    return spec;
}

CostFunction cost_from_json(const Json &j) {
    if (!j.is_object()) {
        throw InputError("cost JSON must be an object");
    }
    if (j.contains("identity")) {
        const int m = get_field<int>(j, "identity");
        if (m < 1) {
            throw InputError("identity cost size must be positive");
        }
        return identity_cost(static_cast<std::size_t>(m));
    }
    return CostFunction(get_field<std::vector<double>>(j, "values"));
}

Json cost_to_json(const CostFunction &c) {
    return Json{{"values", c.values()}};
}

Json measurement_to_json(const NumberingMeasurement &m) {
    Json elements = Json::array();
    for (const auto &[n, element] : m.elements()) {
        elements.push_back(Json{{"numbering", numbering_to_json(n)}, {"matrix", matrix_to_json(element.matrix())}});
    }
    return Json{{"elements", std::move(elements)}};
}

Json benevolence_to_json(const BenevolenceReport &r) {
    Json j;
    j["is_benevolent"] = r.is_benevolent();
    j["is_symmetric_toeplitz"] = r.is_symmetric_toeplitz;
    j["property1_ok"] = r.property1_ok;
    j["property2_ok"] = r.property2_ok;
    j["failing_index"] = r.failing_index ? Json(*r.failing_index) : Json(nullptr);
    j["witness_permutation"] = r.witness_permutation ? numbering_to_json(*r.witness_permutation) : Json(nullptr);
    return j;
}

Json report_to_json(const GuessworkReport &r) {
    Json j;
    j["value"] = r.value;
    j["mean_cost"] = r.mean_cost;
    j["trace_norm_term"] = r.trace_norm_term;
    j["numbering"] = numbering_to_json(r.optimal_numbering);
    j["method"] = std::string(method_name(r.method));
    j["condition_verified"] = r.condition_verified;
    j["measurement"] = measurement_to_json(r.measurement);
    if (r.diagnostics) {
        j["diagnostics"] = benevolence_to_json(*r.diagnostics);
    }
    if (!r.notes.empty()) {
        j["notes"] = r.notes;
    }
    return j;
}

Json simulation_to_json(const SimulationResult &r) {
    Json j;
    j["estimate"] = r.estimate;
    j["std_error"] = r.std_error ? Json(*r.std_error) : Json(nullptr);
    j["samples"] = r.samples;
    return j;
}

std::string dump(const Json &j) {
    return j.dump(2) + "\n";
}

Json read_json_file(const std::filesystem::path &path) {
    std::ifstream in(path);
    if (!in) {
        throw InputError("cannot read " + path.string());
    }
    try {
        return Json::parse(in);
    } catch (const nlohmann::json::parse_error &err) {
        throw InputError("invalid JSON in " + path.string() + ": " + err.what());
    }
}

void write_json_file(const std::filesystem::path &path, const Json &j) {
    std::ofstream out(path, std::ios::binary);
    if (!out) {
        throw InputError("cannot write " + path.string());
    }
    out << dump(j);
}

}  // namespace guesswork
