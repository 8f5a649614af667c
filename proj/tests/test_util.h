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

#ifndef GUESSWORK_TESTS_TEST_UTIL_H
#define GUESSWORK_TESTS_TEST_UTIL_H

#include <vector>

#include "guesswork/costs.h"
#include "guesswork/ensembles.h"
#include "guesswork/rng.h"
#include "oracle.h"

namespace guesswork::test_support {

/// Balanced by construction: values come in pairs mean +/- d (plus the mean
/// itself when M is odd), then shuffled.
inline CostFunction random_balanced_cost(std::size_t size, Rng &rng) {
    const double mean = rng.uniform(-2.0, 3.0);
    std::vector<double> v;
    for (std::size_t i = 0; i < size / 2; ++i) {
        const double d = rng.uniform(0.0, 2.0);
        v.push_back(mean + d);
        v.push_back(mean - d);
    }
    if (size % 2 == 1) {
        v.push_back(mean);
    }
    for (std::size_t i = v.size(); i > 1; --i) {
        std::swap(v[i - 1], v[rng.below(i)]);
    }
    return CostFunction(std::move(v));
}

inline std::vector<oracle::Qubit> raw_states(const Ensemble &e) {
    std::vector<oracle::Qubit> out;
    for (const auto &s : e.states()) {
        out.push_back({s(0, 0), s(0, 1), s(1, 0), s(1, 1)});
    }
    return out;
}

inline HermitianOperator random_hermitian(std::size_t dim, Rng &rng) {
    ComplexMatrix m(dim, dim);
    for (std::size_t i = 0; i < dim; ++i) {
        for (std::size_t j = 0; j < dim; ++j) {
            m(i, j) = Complex(rng.normal(), rng.normal());
        }
    }
    return HermitianOperator(ComplexMatrix((m + m.adjoint()) * 0.5));
}

}  // namespace guesswork::test_support

#endif
