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

#ifndef GUESSWORK_COSTS_H
#define GUESSWORK_COSTS_H

#include <optional>
#include <span>
#include <vector>

#include "guesswork/numbering.h"
#include "guesswork/operators.h"

namespace guesswork {

inline constexpr double kBalanceTol = 1e-10;

/// Finds sigma with gamma(sigma^{-1}(t)) = 2 mean - gamma(t) for every t.
///
/// The k-th smallest value is paired with the k-th largest after a stable
/// sort, so the certificate is deterministic (and an involution). Returns
/// nullopt when the value multiset is not symmetric about its mean.
std::optional<Numbering> balance_certificate(std::span<const double> values, double tol = kBalanceTol);

/// Cost gamma(t) paid when the t-th query is the first correct one.
class CostFunction {
   public:
    explicit CostFunction(std::vector<double> values, double tol = kBalanceTol);

    std::size_t size() const { return values_.size(); }
    const std::vector<double> &values() const { return values_; }
    double operator()(std::size_t t) const { return values_[t]; }
    double mean() const { return mean_; }
    bool is_balanced() const { return balancing_.has_value(); }
    /// sigma_gamma; throws NotBalancedError when absent.
    const Numbering &balancing_permutation() const;
    const std::optional<Numbering> &maybe_balancing_permutation() const { return balancing_; }
    /// sigma_1 with gamma o sigma_1 non-decreasing (stable).
    const Numbering &sorting_permutation() const { return sorting_; }
    /// Smallest shift k with gamma - mean + k >= 0.
    double default_shift() const;

   private:
    std::vector<double> values_;
    double mean_ = 0.0;
    std::optional<Numbering> balancing_;
    Numbering sorting_;
};

/// gamma(t) = t.
CostFunction identity_cost(std::size_t size);

/// gamma o sigma.
CostFunction permute_cost(const CostFunction &c, const Numbering &sigma);

/// Rank-one matrix G_ij = (gamma(i) - mean + shift)(gamma(j) - mean + shift).
RealMatrix cost_gram(const CostFunction &c, double shift = 0.0);

}  // namespace guesswork

#endif
