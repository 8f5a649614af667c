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

#ifndef GUESSWORK_JSON_IO_H
#define GUESSWORK_JSON_IO_H

#include <filesystem>
#include <optional>
#include <string>

#include "json.hpp"

#include "guesswork/costs.h"
#include "guesswork/ensembles.h"
#include "guesswork/guesswork.h"
#include "guesswork/operators.h"

namespace guesswork {

using Json = nlohmann::ordered_json;

/// Complex matrices are row-major nested arrays of [re, im] pairs.
Json matrix_to_json(const ComplexMatrix &m);
HermitianOperator operator_from_json(const Json &j);

/// Writes {"dim": d, "states": [...]}; `generator` (if given) is stored under
/// "generator" so later tools can recognize the family.
Json ensemble_to_json(const Ensemble &e, const std::optional<EnsembleFamilySpec> &generator = std::nullopt);
/// Accepts the "states" form or the qubit {"bloch": [{"trace": p, "v": [x,y,z]}]} form.
Ensemble ensemble_from_json(const Json &j);
/// The "generator" block of an ensemble file, if present.
std::optional<EnsembleFamilySpec> generator_from_json(const Json &j);

Json family_spec_to_json(const EnsembleFamilySpec &spec);
/// {"family": ..., "M": n, "h": x, "lambda": "pure" | x, "seed": s, "dim": d}.
EnsembleFamilySpec family_spec_from_json(const Json &j);

/// {"values": [...]} or {"identity": M}.
CostFunction cost_from_json(const Json &j);
Json cost_to_json(const CostFunction &c);

Json measurement_to_json(const NumberingMeasurement &m);
Json benevolence_to_json(const BenevolenceReport &r);
Json report_to_json(const GuessworkReport &r);
Json simulation_to_json(const SimulationResult &r);

/// Deterministic text form (two-space indent, trailing newline).
std::string dump(const Json &j);

Json read_json_file(const std::filesystem::path &path);
void write_json_file(const std::filesystem::path &path, const Json &j);

}  // namespace guesswork

#endif
