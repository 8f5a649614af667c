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

#include "guesswork/guesswork.h"

#include <algorithm>
#include <cmath>
#include <sstream>

#include <Eigen/Eigenvalues>

#include "guesswork/errors.h"
#include "guesswork/rng.h"

namespace guesswork {

namespace {

constexpr double kIdentityTol = 1e-12;
constexpr double kCrossMethodTol = 1e-9;

void require_same_size(const Ensemble &e, const CostFunction &c) {
    if (e.size() != c.size()) {
        std::ostringstream msg;
        msg << "cost has " << c.size() << " values but the ensemble has " << e.size() << " states";
        throw DimensionError(msg.str());
    }
}

// Precomputed 2 (gamma(t) - mean) and the raw state matrices, for building
// E(n) inside enumeration loops without re-validating Hermiticity.
struct EffectiveBuilder {
    std::vector<double> weights;
    std::vector<ComplexMatrix> states;
    Eigen::Index dim;

    EffectiveBuilder(const Ensemble &e, const CostFunction &c) : dim(static_cast<Eigen::Index>(e.dim())) {
        for (std::size_t t = 0; t < c.size(); ++t) {
            weights.push_back(2.0 * (c(t) - c.mean()));
        }
        for (const auto &s : e.states()) {
            states.push_back(s.matrix());
        }
    }

    ComplexMatrix operator()(const int *map) const {
        ComplexMatrix out = ComplexMatrix::Zero(dim, dim);
        for (std::size_t t = 0; t < weights.size(); ++t) {
            out += weights[t] * states[map[t]];
        }
        return out;
    }
};

double min_eigenvalue_of(const ComplexMatrix &m) {
    return Eigen::SelfAdjointEigenSolver<ComplexMatrix>(m, Eigen::EigenvaluesOnly).eigenvalues()(0);
}

double trace_norm_of(const ComplexMatrix &m) {
    return Eigen::SelfAdjointEigenSolver<ComplexMatrix>(m, Eigen::EigenvaluesOnly).eigenvalues().cwiseAbs().sum();
}

double cost_scale(const CostFunction &c) {
    double s = 1.0;
    for (double v : c.values()) {
        s = std::max(s, std::abs(v));
    }
    return s;
}

GuessworkReport build_report(const Ensemble &e, const CostFunction &c, const Numbering &n_star, SolveMethod method,
                             bool verified, double tol) {
    const HermitianOperator effective = effective_operator(e, c, n_star);
    const double trace_norm_term = 0.5 * trace_norm(effective);
    const double value = e.dim() == 2 && is_uniform_prior(e, tol)
                             ? c.mean() - 0.5 * pauli_vector(effective).norm()
                             : c.mean() - trace_norm_term;
    NumberingMeasurement measurement = optimal_two_outcome_measurement(e, c, n_star, tol);

    // The closed form and the direct expectation of the constructed
    // measurement must agree.
    const double direct = guesswork_value(e, c, measurement);
    if (std::abs(direct - value) > kCrossMethodTol * cost_scale(c)) {
        std::ostringstream msg;
        msg.precision(17);
        msg << "closed-form guesswork " << value << " disagrees with measured value " << direct;
        throw NumericalError(msg.str());
    }
    return GuessworkReport{
        .value = value,
        .optimal_numbering = n_star,
        .measurement = std::move(measurement),
        .method = method,
        .condition_verified = verified,
        .mean_cost = c.mean(),
        .trace_norm_term = trace_norm_term,
        .diagnostics = std::nullopt,
        .notes = {},
    };
}

}  // namespace

NumberingMeasurement::NumberingMeasurement(std::size_t dim, std::map<Numbering, HermitianOperator> elements,
                                           double tol)
    : dim_(dim), elements_(std::move(elements)) {
    if (elements_.empty()) {
        throw InputError("measurement has no elements");
    }
    const std::size_t size = elements_.begin()->first.size();
    HermitianOperator total(dim_);
    for (const auto &[n, element] : elements_) {
        if (n.size() != size) {
            throw DimensionError("measurement outcomes are numberings of different sizes");
        }
        if (element.dim() != dim_) {
            throw DimensionError("measurement element has the wrong dimension");
        }
        const double lo = element.min_eigenvalue();
        if (lo < -tol) {
            std::ostringstream msg;
            msg << "measurement element is not PSD (min eigenvalue " << lo << ")";
            throw InputError(msg.str());
        }
        total += element;
    }
    const double dev = total.max_abs_diff(HermitianOperator::identity(dim_));
    if (dev > tol) {
        std::ostringstream msg;
        msg << "measurement elements do not sum to the identity (deviation " << dev << ")";
        throw InputError(msg.str());
    }
}

std::size_t NumberingMeasurement::numbering_size() const {
    return elements_.empty() ? 0 : elements_.begin()->first.size();
}

std::string_view method_name(SolveMethod m) {
    switch (m) {
        case SolveMethod::kBruteForce:
            return "brute_force";
        case SolveMethod::kBenevolent:
            return "benevolent";
        case SolveMethod::kConditionCheckOnly:
            return "condition_check_only";
    }
    return "unknown";
}

MethodChoice parse_method_choice(std::string_view name) {
    if (name == "auto") {
        return MethodChoice::kAuto;
    }
    if (name == "brute") {
        return MethodChoice::kBrute;
    }
    if (name == "benevolent") {
        return MethodChoice::kBenevolent;
    }
    throw InputError("unknown method '" + std::string(name) + "' (expected auto, brute, or benevolent)");
}

HermitianOperator effective_operator(const Ensemble &e, const CostFunction &c, const Numbering &n) {
    require_same_size(e, c);
    if (n.size() != e.size()) {
        throw DimensionError("numbering size does not match the ensemble");
    }
    return HermitianOperator(EffectiveBuilder(e, c)(n.map().data()));
}

double guesswork_value_via_effective(const Ensemble &e, const CostFunction &c, const NumberingMeasurement &m) {
    require_same_size(e, c);
    if (m.numbering_size() != e.size() || m.dim() != e.dim()) {
        throw DimensionError("measurement does not match the ensemble");
    }
    double total = 0.0;
    for (const auto &[n, element] : m.elements()) {
        total += trace_product(element, effective_operator(e, c, n));
    }
    return c.mean() + 0.5 * total;
}

double guesswork_value(const Ensemble &e, const CostFunction &c, const NumberingMeasurement &m) {
    require_same_size(e, c);
    if (m.numbering_size() != e.size() || m.dim() != e.dim()) {
        throw DimensionError("measurement does not match the ensemble");
    }
    double direct = 0.0;
    for (std::size_t t = 0; t < c.size(); ++t) {
        double q = 0.0;
        for (const auto &[n, element] : m.elements()) {
            q += trace_product(element, e.state(n(t)));
        }
        direct += c(t) * q;
    }
    const double via_effective = guesswork_value_via_effective(e, c, m);
    if (std::abs(direct - via_effective) > 1e-10 * cost_scale(c)) {
        std::ostringstream msg;
        msg.precision(17);
        msg << "guesswork self-check failed: direct " << direct << " vs effective-operator form " << via_effective;
        throw NumericalError(msg.str());
    }
    return direct;
}

NumberingMeasurement optimal_two_outcome_measurement(const Ensemble &e, const CostFunction &c,
                                                     const Numbering &n_star, double tol) {
    const Numbering &sigma = c.balancing_permutation();
    const Numbering partner = compose(n_star, sigma);
    std::map<Numbering, HermitianOperator> elements;
    if (partner == n_star) {
        elements.emplace(n_star, HermitianOperator::identity(e.dim()));
    } else {
        for (const Numbering *n : {&n_star, &partner}) {
            const SpectralParts parts = spectral_parts(effective_operator(e, c, *n), tol);
            elements.emplace(*n, parts.negative_projector + 0.5 * parts.null_projector);
        }
    }
    return NumberingMeasurement(e.dim(), std::move(elements), tol);
}

bool condition_check(const Ensemble &e, const CostFunction &c, const Numbering &n_star, double tol,
                     const EnumerationOptions &options) {
    (void)c.balancing_permutation();
    require_same_size(e, c);
    require_within_cap(e.size(), options.factorial_cap, "optimality condition check");
    const ComplexMatrix dominant = absolute_value(effective_operator(e, c, n_star)).matrix();
    const EffectiveBuilder build(e, c);
    return parallel_all_of(
        e.size(), [&](const std::vector<int> &perm) { return min_eigenvalue_of(dominant - build(perm.data())) >= -tol; },
        options.threads);
}

GuessworkReport min_guesswork_qubit(const Ensemble &e, const CostFunction &c, MethodChoice method,
                                    const SolverOptions &options) {
    if (e.dim() != 2) {
        throw DimensionError("qubit solver requires a qubit ensemble, got dimension " + std::to_string(e.dim()));
    }
    if (!is_uniform_prior(e, options.tol)) {
        throw InputError("qubit solver requires a uniform prior Tr[rho(m)] = 1/M");
    }
    require_same_size(e, c);
    (void)c.balancing_permutation();

    const QapInstance inst = make_qap_instance(e, c);
    const std::size_t size = e.size();
    const std::size_t cap = options.enumeration.factorial_cap;
    std::vector<std::string> notes;

    std::optional<QapSolution> benevolent;
    if (method != MethodChoice::kBrute) {
        try {
            benevolent = benevolent_solve(c, inst.bloch_gram, options.tol, cap);
        } catch (const CapExceededError &) {
            notes.emplace_back("benevolent structure search skipped: M exceeds the factorial cap");
        }
    }

    std::optional<QapSolution> chosen;
    SolveMethod used = SolveMethod::kBruteForce;
    bool verified = true;
    switch (method) {
        case MethodChoice::kBrute:
            chosen = brute_force_solve(inst, options.enumeration);
            break;
        case MethodChoice::kBenevolent:
            if (!benevolent) {
                throw SolverUnavailableError("no benevolent structure found for -Gram(v o rho)");
            }
            chosen = benevolent;
            used = SolveMethod::kBenevolent;
            break;
        case MethodChoice::kAuto:
            if (benevolent) {
                chosen = benevolent;
                used = SolveMethod::kBenevolent;
                if (size <= options.cross_check_max && size <= cap) {
                    QapSolution exact = brute_force_solve(inst, options.enumeration);
                    if (std::abs(exact.objective - benevolent->objective) >
                        kCrossMethodTol * std::max(1.0, std::abs(exact.objective))) {
                        notes.emplace_back("benevolent optimum disagreed with brute force; using brute force");
                        chosen = std::move(exact);
                        used = SolveMethod::kBruteForce;
                    } else {
                        notes.emplace_back("benevolent optimum cross-checked against brute force");
                    }
                }
            } else if (size <= cap) {
                chosen = brute_force_solve(inst, options.enumeration);
            } else {
                Numbering guess = heuristic_qap_candidate(inst);
                chosen = QapSolution{guess, qap_objective(inst, guess)};
                used = SolveMethod::kConditionCheckOnly;
                verified = false;
                notes.emplace_back("no exact path available: heuristic candidate, value is an unverified upper bound");
            }
            break;
    }

    GuessworkReport report = build_report(e, c, chosen->numbering, used, verified, options.tol);
    RealMatrix negated = -inst.bloch_gram;
    report.diagnostics = size <= cap ? diagnose_benevolence(negated, options.tol, cap) : is_benevolent(negated, options.tol);
    report.notes = std::move(notes);
    return report;
}

Numbering max_trace_norm_numbering(const Ensemble &e, const CostFunction &c, const EnumerationOptions &options) {
    require_same_size(e, c);
    require_within_cap(e.size(), options.factorial_cap, "trace-norm maximization");
    const EffectiveBuilder build(e, c);
    return parallel_argmax(
               e.size(), [&](const std::vector<int> &perm) { return trace_norm_of(build(perm.data())); }, 1e-12,
               options.threads)
        .numbering;
}

std::optional<GuessworkReport> min_guesswork_general(const Ensemble &e, const CostFunction &c,
                                                     std::optional<Numbering> candidate,
                                                     const SolverOptions &options) {
    require_same_size(e, c);
    (void)c.balancing_permutation();
    require_within_cap(e.size(), options.enumeration.factorial_cap, "general guesswork solver");
    if (!candidate) {
        candidate = max_trace_norm_numbering(e, c, options.enumeration);
    }
    if (!condition_check(e, c, *candidate, options.tol, options.enumeration)) {
        return std::nullopt;
    }
    return build_report(e, c, *candidate, SolveMethod::kConditionCheckOnly, true, options.tol);
}

GuessworkReport unverified_candidate_report(const Ensemble &e, const CostFunction &c, const Numbering &candidate,
                                            const SolverOptions &options) {
    GuessworkReport report =
        build_report(e, c, candidate, SolveMethod::kConditionCheckOnly, false, options.tol);
    report.notes.emplace_back("optimality condition not verified: value is an upper bound on the minimum guesswork");
    return report;
}

Numbering heuristic_qap_candidate(const QapInstance &inst) {
    const std::size_t size = inst.size();
    std::vector<int> map = zigzag_numbering(size).map();
    auto score = [&](const std::vector<int> &m) { return qap_objective(inst, Numbering(m)); };
    double best = score(map);
    // First-improvement pairwise swaps until no swap helps.
    bool improved = true;
    while (improved) {
        improved = false;
        for (std::size_t i = 0; i < size; ++i) {
            for (std::size_t j = i + 1; j < size; ++j) {
                std::swap(map[i], map[j]);
                const double s = score(map);
                if (s > best + 1e-15) {
                    best = s;
                    improved = true;
                } else {
                    std::swap(map[i], map[j]);
                }
            }
        }
    }
    return Numbering(std::move(map));
}

std::pair<Ensemble, CostFunction> permute_problem(const Ensemble &e, const CostFunction &c, const Numbering &sigma1,
                                                  const Numbering &sigma2) {
    require_same_size(e, c);
    if (sigma1.size() != c.size() || sigma2.size() != e.size()) {
        throw DimensionError("permutation sizes do not match the problem");
    }
    std::vector<HermitianOperator> states;
    states.reserve(e.size());
    for (std::size_t m = 0; m < e.size(); ++m) {
        states.push_back(e.state(sigma2(m)));
    }
    return {Ensemble::validate(std::move(states)), permute_cost(c, sigma1)};
}

SimulationResult simulate(const Ensemble &e, const CostFunction &c, const NumberingMeasurement &m,
                          std::uint64_t samples, std::uint64_t seed) {
    require_same_size(e, c);
    if (m.numbering_size() != e.size() || m.dim() != e.dim()) {
        throw DimensionError("measurement does not match the ensemble");
    }
    if (samples == 0) {
        throw InputError("simulation needs at least one sample");
    }
    const std::size_t labels = e.size();
    std::vector<const Numbering *> outcomes;
    std::vector<const HermitianOperator *> elements;
    for (const auto &[n, element] : m.elements()) {
        outcomes.push_back(&n);
        elements.push_back(&element);
    }

    // Cumulative outcome distribution per label and the cost paid for each
    // (label, outcome) pair.
    std::vector<std::vector<double>> outcome_cdf(labels);
    std::vector<std::vector<double>> cost(labels);
    for (std::size_t label = 0; label < labels; ++label) {
        const double weight = e.prior()[label];
        double acc = 0.0;
        for (std::size_t k = 0; k < outcomes.size(); ++k) {
            const double p = weight > 0.0 ? std::max(0.0, trace_product(*elements[k], e.state(label)) / weight) : 0.0;
            acc += p;
            outcome_cdf[label].push_back(acc);
            const Numbering inv = invert(*outcomes[k]);
            cost[label].push_back(c(inv(label)));
        }
        for (double &x : outcome_cdf[label]) {
            x = acc > 0.0 ? x / acc : 1.0;
        }
    }
    std::vector<double> label_cdf;
    double acc = 0.0;
    for (double p : e.prior()) {
        acc += std::max(0.0, p);
        label_cdf.push_back(acc);
    }
    for (double &x : label_cdf) {
        x /= acc;
    }

    auto draw = [](const std::vector<double> &cdf, double u) {
        const auto it = std::upper_bound(cdf.begin(), cdf.end(), u);
        return it == cdf.end() ? cdf.size() - 1 : static_cast<std::size_t>(it - cdf.begin());
    };

    Rng rng(seed);
    double mean = 0.0;
    double m2 = 0.0;
    for (std::uint64_t i = 1; i <= samples; ++i) {
        const std::size_t label = draw(label_cdf, rng.uniform());
        const std::size_t outcome = draw(outcome_cdf[label], rng.uniform());
        const double x = cost[label][outcome];
        const double delta = x - mean;
        mean += delta / static_cast<double>(i);
        m2 += delta * (x - mean);
    }
    SimulationResult result{mean, std::nullopt, samples};
    if (samples >= 2) {
        const double variance = m2 / static_cast<double>(samples - 1);
        result.std_error = std::sqrt(variance / static_cast<double>(samples));
    }
    return result;
}

}  // namespace guesswork
