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

#include "guesswork/costs.h"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "guesswork/errors.h"

namespace guesswork {

namespace {

std::vector<int> stable_argsort(std::span<const double> values) {
    std::vector<int> order(values.size());
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(), [&](int a, int b) { return values[a] < values[b]; });
    return order;
}

double mean_of(std::span<const double> values) {
    if (values.empty()) {
        return 0.0;
    }
    return std::accumulate(values.begin(), values.end(), 0.0) / static_cast<double>(values.size());
}

}  // namespace

std::optional<Numbering> balance_certificate(std::span<const double> values, double tol) {
    const std::size_t m = values.size();
    if (m == 0) {
        return std::nullopt;
    }
    const double mean = mean_of(values);
    const auto order = stable_argsort(values);
    // tau(order[m-1-k]) = order[k] requires gamma(order[k]) = 2 mean - gamma(order[m-1-k]).
    std::vector<int> tau(m);
    for (std::size_t k = 0; k < m; ++k) {
        const int lo = order[k];
        const int hi = order[m - 1 - k];
        if (std::abs(values[lo] + values[hi] - 2.0 * mean) > 2.0 * tol) {
            return std::nullopt;
        }
        tau[hi] = lo;
    }
    // tau is an involution, so sigma_gamma = tau^{-1} = tau.
    return invert(Numbering(std::move(tau)));
}

CostFunction::CostFunction(std::vector<double> values, double tol)
    : values_(std::move(values)), mean_(mean_of(values_)), balancing_(balance_certificate(values_, tol)) {
    if (values_.empty()) {
        throw InputError("cost function must have at least one value");
    }
    for (double v : values_) {
        if (!std::isfinite(v)) {
            throw InputError("cost function has non-finite values");
        }
    }
    sorting_ = Numbering(stable_argsort(values_));
}

const Numbering &CostFunction::balancing_permutation() const {
    if (!balancing_) {
        throw NotBalancedError("cost not balanced: no permutation sigma with (gamma + gamma o sigma^-1)/2 = mean");
    }
    return *balancing_;
}

double CostFunction::default_shift() const {
    return mean_ - *std::min_element(values_.begin(), values_.end());
}

CostFunction identity_cost(std::size_t size) {
    if (size == 0) {
        throw InputError("identity cost needs at least one position");
    }
    std::vector<double> v(size);
    std::iota(v.begin(), v.end(), 1.0);
    return CostFunction(std::move(v));
}

CostFunction permute_cost(const CostFunction &c, const Numbering &sigma) {
    if (sigma.size() != c.size()) {
        throw DimensionError("permutation size does not match cost size");
    }
    std::vector<double> v(c.size());
    for (std::size_t t = 0; t < v.size(); ++t) {
        v[t] = c(sigma(t));
    }
    return CostFunction(std::move(v));
}

RealMatrix cost_gram(const CostFunction &c, double shift) {
    Eigen::VectorXd f(c.size());
    for (std::size_t t = 0; t < c.size(); ++t) {
        f(t) = c(t) - c.mean() + shift;
    }
    return f * f.transpose();
}

}  // namespace guesswork
