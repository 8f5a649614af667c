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

#ifndef GUESSWORK_GUESSWORK_H
#define GUESSWORK_GUESSWORK_H

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <utility>

#include "guesswork/costs.h"
#include "guesswork/ensembles.h"
#include "guesswork/enumeration.h"
#include "guesswork/numbering.h"
#include "guesswork/operators.h"
#include "guesswork/qap.h"

namespace guesswork {

/// A POVM whose outcomes are numberings. Only nonzero elements are stored.
class NumberingMeasurement {
   public:
    /// Throws InputError unless every element is PSD and they sum to identity.
    NumberingMeasurement(std::size_t dim, std::map<Numbering, HermitianOperator> elements,
                         double tol = kSpectralTol);

    std::size_t dim() const { return dim_; }
    const std::map<Numbering, HermitianOperator> &elements() const { return elements_; }
    /// Size M of the numberings, 0 for an empty map (never valid).
    std::size_t numbering_size() const;

   private:
    std::size_t dim_;
    std::map<Numbering, HermitianOperator> elements_;
};

enum class SolveMethod { kBruteForce, kBenevolent, kConditionCheckOnly };
enum class MethodChoice { kAuto, kBrute, kBenevolent };

std::string_view method_name(SolveMethod m);
MethodChoice parse_method_choice(std::string_view name);

struct GuessworkReport {
    double value = 0.0;
    Numbering optimal_numbering;
    NumberingMeasurement measurement;
    SolveMethod method = SolveMethod::kBruteForce;
    bool condition_verified = false;
    double mean_cost = 0.0;
    /// Half the trace norm of the effective operator at the optimum.
    double trace_norm_term = 0.0;
    std::optional<BenevolenceReport> diagnostics;
    /// Human-readable notes (fallbacks taken, cross-check results).
    std::vector<std::string> notes;
};

struct SolverOptions {
    EnumerationOptions enumeration{};
    double tol = kSpectralTol;
    /// In auto mode, compare the benevolent optimum with brute force when M
    /// is at most this (and within the factorial cap).
    std::size_t cross_check_max = 8;
};

/// E(n) = 2 sum_t (gamma(t) - mean) rho(n(t)).
HermitianOperator effective_operator(const Ensemble &e, const CostFunction &c, const Numbering &n);

/// sum_t gamma(t) sum_n Tr[pi(n) rho(n(t))]. Also evaluates
/// mean + 1/2 sum_n Tr[pi(n) E(n)] and throws NumericalError if the two
/// disagree beyond 1e-10 (scaled by the cost magnitude).
double guesswork_value(const Ensemble &e, const CostFunction &c, const NumberingMeasurement &m);

/// mean + 1/2 sum_n Tr[pi(n) E(n)].
double guesswork_value_via_effective(const Ensemble &e, const CostFunction &c, const NumberingMeasurement &m);

/// Two elements: (Pi_- + Pi_0 / 2)(E(n)) at n = n_star and n = n_star o sigma_gamma.
/// If the two numberings coincide the measurement is the single element I.
NumberingMeasurement optimal_two_outcome_measurement(const Ensemble &e, const CostFunction &c,
                                                     const Numbering &n_star, double tol = kSpectralTol);

/// True iff |E(n_star)| - E(n) is PSD (within tol) for every numbering n.
bool condition_check(const Ensemble &e, const CostFunction &c, const Numbering &n_star, double tol = kSpectralTol,
                     const EnumerationOptions &options = {});

/// Minimum guesswork of a qubit ensemble with uniform prior via the QAP
/// reduction. Throws DimensionError, InputError (non-uniform prior),
/// NotBalancedError, CapExceededError or SolverUnavailableError.
GuessworkReport min_guesswork_qubit(const Ensemble &e, const CostFunction &c, MethodChoice method = MethodChoice::kAuto,
                                    const SolverOptions &options = {});

/// Lex-first numbering maximizing ||E(n)||_1 over all M! numberings.
Numbering max_trace_norm_numbering(const Ensemble &e, const CostFunction &c, const EnumerationOptions &options = {});

/// Any dimension: take the numbering maximizing ||E(n)||_1 (or `candidate`),
/// and return a report only if the sufficient optimality condition holds.
std::optional<GuessworkReport> min_guesswork_general(const Ensemble &e, const CostFunction &c,
                                                     std::optional<Numbering> candidate = std::nullopt,
                                                     const SolverOptions &options = {});

/// Best candidate by ||E(n)||_1 and its (achievable) value mean - ||E||_1 / 2,
/// without certification. Used when the condition fails or M is too large.
GuessworkReport unverified_candidate_report(const Ensemble &e, const CostFunction &c, const Numbering &candidate,
                                            const SolverOptions &options = {});

/// Local search on the QAP objective starting from the zig-zag numbering.
/// Heuristic; used only when neither exact path is available.
Numbering heuristic_qap_candidate(const QapInstance &inst);

/// (rho o sigma2, gamma o sigma1).
std::pair<Ensemble, CostFunction> permute_problem(const Ensemble &e, const CostFunction &c, const Numbering &sigma1,
                                                  const Numbering &sigma2);

struct SimulationResult {
    double estimate = 0.0;
    /// nullopt when fewer than two samples were drawn.
    std::optional<double> std_error;
    std::uint64_t samples = 0;
};

/// Monte Carlo of the single-measurement strategy: draw a label m0 from the
/// prior, an outcome n from Tr[pi(n) rho(m0)] / Tr[rho(m0)], and pay
/// gamma(n^{-1}(m0)). Deterministic in `seed`.
SimulationResult simulate(const Ensemble &e, const CostFunction &c, const NumberingMeasurement &m,
                          std::uint64_t samples, std::uint64_t seed);

}  // namespace guesswork

#endif
