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

#ifndef GUESSWORK_QAP_H
#define GUESSWORK_QAP_H

#include <optional>

#include "guesswork/costs.h"
#include "guesswork/ensembles.h"
#include "guesswork/enumeration.h"
#include "guesswork/numbering.h"
#include "guesswork/operators.h"

namespace guesswork {

/// Maximize sum_{t,t'} cost_gram(t,t') * bloch_gram(n(t), n(t')) over numberings n.
struct QapInstance {
    RealMatrix cost_gram;
    RealMatrix bloch_gram;

    /// Throws InputError unless both matrices are symmetric and the same size.
    QapInstance(RealMatrix cost_gram, RealMatrix bloch_gram);

    std::size_t size() const { return static_cast<std::size_t>(cost_gram.rows()); }
};

/// Gram(v o rho) and Gram(gamma - mean) for a qubit ensemble.
QapInstance make_qap_instance(const Ensemble &e, const CostFunction &c);

/// G_ij = v(rho(i)) . v(rho(j)). Throws DimensionError for non-qubit ensembles.
RealMatrix bloch_gram(const Ensemble &e);

double qap_objective(const QapInstance &inst, const Numbering &n);

struct QapSolution {
    Numbering numbering;
    double objective = 0.0;
};

/// Exhaustive search over all M! numberings. Ties (within 1e-12 relative to
/// the optimum) go to the lexicographically smallest mapping, independent of
/// thread count. Throws CapExceededError when M exceeds the cap.
QapSolution brute_force_solve(const QapInstance &inst, const EnumerationOptions &options = {});

struct BenevolenceReport {
    bool is_symmetric_toeplitz = false;
    bool property1_ok = false;
    bool property2_ok = false;
    /// One-based row index m + 1 of the first failing entry, if any.
    std::optional<int> failing_index;
    /// sigma_2 such that A relabeled by sigma_2 is benevolent.
    std::optional<Numbering> witness_permutation;

    bool is_benevolent() const { return is_symmetric_toeplitz && property1_ok && property2_ok; }
};

/// Checks symmetry and Toeplitz structure, then with a = first column:
/// Property 1: a[m] non-decreasing for m = 1..floor(M/2);
/// Property 2: a[M - m] >= a[m] for m = 1..floor(M/2) (zero-based offsets).
/// The witness is the identity when the matrix itself is benevolent.
BenevolenceReport is_benevolent(const RealMatrix &a, double tol = kSpectralTol);

/// Searches for sigma_2 with B(i, j) = A(sigma_2(i), sigma_2(j)) benevolent.
/// Rotations and reflections of the index circle are tried first, then a
/// depth-first search that prunes partial labelings breaking the Toeplitz
/// pattern. Throws CapExceededError when M exceeds the cap.
std::optional<Numbering> find_benevolent_permutation(const RealMatrix &a, double tol = kSpectralTol,
                                                     std::size_t factorial_cap = kDefaultFactorialCap);

/// is_benevolent on A, falling back to find_benevolent_permutation to fill
/// the witness when A itself is not benevolent.
BenevolenceReport diagnose_benevolence(const RealMatrix &a, double tol = kSpectralTol,
                                       std::size_t factorial_cap = kDefaultFactorialCap);

/// Zig-zag numbering: n^{-1}(m) = 2m - 1 for m <= ceil(M/2), else 2(M + 1 - m)
/// (one-based). For M = 5 this is (1, 5, 2, 4, 3).
Numbering zigzag_numbering(std::size_t size);

/// Closed-form optimum n* = sigma_2 o zigzag o sigma_1^{-1} when -bloch_gram is
/// permutationally equivalent to a benevolent matrix and the Gram row sums
/// (M times v(average) . v(rho(m))) are constant. Returns nullopt otherwise.
/// Throws NotBalancedError for unbalanced costs.
std::optional<QapSolution> benevolent_solve(const CostFunction &c, const RealMatrix &bloch_gram,
                                            double tol = kSpectralTol,
                                            std::size_t factorial_cap = kDefaultFactorialCap);

}  // namespace guesswork

#endif
