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

#include "guesswork/ensembles.h"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <sstream>

#include "guesswork/errors.h"
#include "guesswork/rng.h"

namespace guesswork {

Ensemble Ensemble::validate(std::vector<HermitianOperator> states, double tol) {
    if (states.empty()) {
        throw InputError("ensemble must contain at least one state");
    }
    const std::size_t dim = states.front().dim();
    double total = 0.0;
    for (std::size_t m = 0; m < states.size(); ++m) {
        if (states[m].dim() != dim) {
            std::ostringstream msg;
            msg << "mixed dimensions: state " << m << " has dimension " << states[m].dim() << ", expected " << dim;
            throw DimensionError(msg.str());
        }
        const double lo = states[m].min_eigenvalue();
        if (lo < -tol) {
            std::ostringstream msg;
            msg << "state " << m << " is not PSD (min eigenvalue " << lo << ")";
            throw InputError(msg.str());
        }
        total += states[m].trace();
    }
    if (std::abs(total - 1.0) > tol) {
        std::ostringstream msg;
        msg.precision(17);
        msg << "total trace = " << total << ", expected 1";
        throw InputError(msg.str());
    }

    Ensemble e;
    e.dim_ = dim;
    e.average_ = HermitianOperator(dim);
    for (const auto &s : states) {
        e.prior_.push_back(s.trace());
        e.average_ += s;
        if (dim == 2) {
            e.bloch_.push_back(pauli_vector(s));
        }
    }
    e.average_ *= 1.0 / static_cast<double>(states.size());
    e.states_ = std::move(states);
    return e;
}

std::string_view family_name(Family f) {
    switch (f) {
        case Family::kPolygonAntiprism:
            return "polygon_antiprism";
        case Family::kSic:
            return "sic";
        case Family::kMub:
            return "mub";
        case Family::kRandom:
            return "random";
    }
    return "unknown";
}

Family parse_family(std::string_view name) {
    for (Family f : {Family::kPolygonAntiprism, Family::kSic, Family::kMub, Family::kRandom}) {
        if (family_name(f) == name) {
            return f;
        }
    }
    throw InputError("unknown ensemble family '" + std::string(name) +
                     "' (expected polygon_antiprism, sic, mub, or random)");
}

Ensemble generate_polygon_antiprism(int size, double h, std::optional<double> lambda) {
    if (size < 2) {
        throw InputError("polygon/anti-prism needs at least 2 states");
    }
    if (!(h >= 0.0) || !std::isfinite(h)) {
        throw InputError("anti-prism height h must be a finite non-negative number");
    }
    const double m = static_cast<double>(size);
    const double scale = lambda.value_or(1.0 / (m * std::sqrt(1.0 + h * h)));
    if (!(scale > 0.0)) {
        throw InputError("lambda must be positive");
    }
    // Each state has trace 1/M and Bloch length scale * sqrt(1 + h^2).
    if (scale * std::sqrt(1.0 + h * h) > 1.0 / m * (1.0 + 1e-12)) {
        std::ostringstream msg;
        msg << "lambda * sqrt(1 + h^2) = " << scale * std::sqrt(1.0 + h * h) << " exceeds 1/M = " << 1.0 / m
            << "; states would not be PSD";
        throw InputError(msg.str());
    }
    std::vector<HermitianOperator> states;
    states.reserve(size);
    for (int k = 0; k < size; ++k) {
        const double angle = 2.0 * std::numbers::pi * k / m;
        const double sign = (k % 2 == 0) ? 1.0 : -1.0;
        BlochVector v{{scale * std::cos(angle), scale * std::sin(angle), scale * sign * h}};
        states.push_back(from_bloch(1.0 / m, v));
    }
    return Ensemble::validate(std::move(states));
}

Ensemble generate_sic() {
    return generate_polygon_antiprism(4, antiprism_h_bound(4));
}

Ensemble generate_mub() {
    return generate_polygon_antiprism(6, antiprism_h_bound(6));
}

Ensemble generate_random_uniform_prior(int size, int dim, std::uint64_t seed) {
    if (size < 2 || dim < 2) {
        throw InputError("random ensembles need M >= 2 and dim >= 2");
    }
    Rng rng(seed);
    const double weight = 1.0 / size;
    std::vector<HermitianOperator> states;
    states.reserve(size);
    for (int k = 0; k < size; ++k) {
        if (dim == 2) {
            const double z = rng.uniform(-1.0, 1.0);
            const double phi = rng.uniform(0.0, 2.0 * std::numbers::pi);
            const double radius = rng.uniform(0.0, weight);
            const double rho = std::sqrt(std::max(0.0, 1.0 - z * z));
            BlochVector v{{radius * rho * std::cos(phi), radius * rho * std::sin(phi), radius * z}};
            states.push_back(from_bloch(weight, v));
        } else {
            ComplexMatrix g(dim, dim);
            for (int i = 0; i < dim; ++i) {
                for (int j = 0; j < dim; ++j) {
                    const double re = rng.normal();
                    const double im = rng.normal();
                    g(i, j) = Complex(re, im);
                }
            }
            ComplexMatrix w = g * g.adjoint();
            w *= weight / w.trace().real();
            states.emplace_back(std::move(w), 1e-9);
        }
    }
    return Ensemble::validate(std::move(states));
}

Ensemble generate(const EnsembleFamilySpec &spec) {
    switch (spec.family) {
        case Family::kPolygonAntiprism:
            return generate_polygon_antiprism(spec.size, spec.h, spec.lambda);
        case Family::kSic:
            return generate_sic();
        case Family::kMub:
            return generate_mub();
        case Family::kRandom:
            return generate_random_uniform_prior(spec.size, spec.dim, spec.seed);
    }
    throw InputError("unknown ensemble family");
}

double antiprism_h_bound(int size) {
    if (size < 2) {
        throw InputError("h-bound needs M >= 2");
    }
    if (size % 2 == 1) {
        return 0.0;
    }
    if (size == 2) {
        // Two antipodal states: every h keeps -Gram benevolent.
        return std::numeric_limits<double>::infinity();
    }
    const double step = 2.0 * std::numbers::pi / size;
    if ((size / 2) % 2 == 0) {
        return std::sqrt((1.0 - std::cos(step)) / 2.0);
    }
    return std::sqrt((std::cos(step) - std::cos(2.0 * step)) / 2.0);
}

bool is_uniform_prior(const Ensemble &e, double tol) {
    const double target = 1.0 / static_cast<double>(e.size());
    return std::all_of(e.prior().begin(), e.prior().end(), [&](double p) { return std::abs(p - target) <= tol; });
}

bool constant_overlap_check(const Ensemble &e, double tol) {
    if (e.dim() != 2) {
        throw DimensionError("constant-overlap check requires a qubit ensemble");
    }
    const BlochVector center = pauli_vector(e.average_state());
    std::vector<double> overlaps;
    overlaps.reserve(e.size());
    for (const auto &v : e.bloch()) {
        overlaps.push_back(center.dot(v));
    }
    double mean = 0.0;
    for (double x : overlaps) {
        mean += x;
    }
    mean /= static_cast<double>(overlaps.size());
    return std::all_of(overlaps.begin(), overlaps.end(), [&](double x) { return std::abs(x - mean) <= tol; });
}

}  // namespace guesswork
