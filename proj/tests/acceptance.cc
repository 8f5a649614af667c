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

// Acceptance suite: one PASS/FAIL line per criterion, nonzero exit on any failure.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <string>
#include <vector>

#include "guesswork/errors.h"
#include "guesswork/guesswork.h"
#include "guesswork/json_io.h"
#include "guesswork/rng.h"
#include "oracle.h"
#include "test_util.h"

using namespace guesswork;

namespace {

struct Outcome {
    bool pass;
    std::string detail;
};

struct Instance {
    Ensemble ensemble;
    CostFunction cost;
};

const double kTrineValue = 2.0 - 1.0 / std::sqrt(3.0);
const double kSicValue = 2.5 - 0.5 * std::sqrt(5.0 / 3.0);
const double kMubValue = 3.5 - std::sqrt(35.0) / 6.0;

std::string sci(double x) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.3g", x);
    return buf;
}

// 100 qubit uniform-prior instances with M in 2..6, plus 30 qutrit ones.
std::vector<Instance> random_suite(int dim, int count, std::uint64_t seed) {
    Rng rng(seed);
    std::vector<Instance> out;
    for (int i = 0; i < count; ++i) {
        const auto m = 2 + rng.below(5);
        out.push_back({generate_random_uniform_prior(static_cast<int>(m), dim, seed * 1000 + i),
                       test_support::random_balanced_cost(m, rng)});
    }
    return out;
}

const std::vector<Instance> &qubit_suite() {
    static const auto suite = random_suite(2, 100, 1);
    return suite;
}

const std::vector<Instance> &qutrit_suite() {
    static const auto suite = random_suite(3, 30, 2);
    return suite;
}

std::vector<Instance> full_suite() {
    auto all = qubit_suite();
    all.insert(all.end(), qutrit_suite().begin(), qutrit_suite().end());
    return all;
}

// Optimal numbering for qubits; trace-norm argmax otherwise.
Numbering best_numbering(const Instance &inst) {
    if (inst.ensemble.dim() == 2) {
        return brute_force_solve(make_qap_instance(inst.ensemble, inst.cost)).numbering;
    }
    return max_trace_norm_numbering(inst.ensemble, inst.cost);
}

Outcome oracle_equivalence() {
    double worst = 0.0;
    int count = 0;
    for (int m = 3; m <= 8; ++m) {
        for (double frac : {0.0, 0.5, 1.0}) {
            const auto e = generate_polygon_antiprism(m, frac * antiprism_h_bound(m));
            const auto c = identity_cost(m);
            const auto fast = benevolent_solve(c, bloch_gram(e));
            if (!fast) {
                return {false, "benevolent path unavailable at M=" + std::to_string(m)};
            }
            const auto exact = brute_force_solve(make_qap_instance(e, c));
            worst = std::max(worst, std::abs(fast->objective - exact.objective));
            ++count;
        }
    }
    return {worst <= 1e-12, std::to_string(count) + " instances, max |diff| " + sci(worst)};
}

Outcome frozen_values() {
    struct Case {
        const char *name;
        Ensemble e;
        double closed_form;
    };
    const Case cases[] = {{"trine", generate_polygon_antiprism(3, 0.0), kTrineValue},
                          {"sic", generate_sic(), kSicValue},
                          {"mub", generate_mub(), kMubValue}};
    bool ok = true;
    std::string detail;
    for (const auto &[name, e, closed_form] : cases) {
        std::vector<double> gamma(e.size());
        for (std::size_t t = 0; t < gamma.size(); ++t) {
            gamma[t] = static_cast<double>(t + 1);
        }
        const double by_oracle = oracle::min_guesswork(test_support::raw_states(e), gamma).value;
        const double by_library = min_guesswork_qubit(e, identity_cost(e.size())).value;
        ok = ok && std::abs(by_oracle - closed_form) <= 1e-9 && std::abs(by_library - closed_form) <= 1e-9;
        char buf[96];
        std::snprintf(buf, sizeof buf, "%s %.10f ", name, by_library);
        detail += buf;
    }
    return {ok, detail};
}

Outcome norm_identity() {
    Rng rng(3);
    double worst = 0.0;
    for (const auto &inst : qubit_suite()) {
        const auto qap = make_qap_instance(inst.ensemble, inst.cost);
        for (int k = 0; k < 20; ++k) {
            const auto n = Numbering::random(inst.ensemble.size(), rng);
            const double v = pauli_vector(effective_operator(inst.ensemble, inst.cost, n)).norm();
            worst = std::max(worst, std::abs(v * v - 4.0 * qap_objective(qap, n)));
        }
    }
    return {worst <= 1e-9, "2000 numberings, max |diff| " + sci(worst)};
}

Outcome antisymmetry() {
    Rng rng(4);
    double worst = 0.0;
    for (const auto &inst : full_suite()) {
        const auto sigma = inst.cost.balancing_permutation();
        for (int k = 0; k < 20; ++k) {
            const auto n = Numbering::random(inst.ensemble.size(), rng);
            const auto sum = effective_operator(inst.ensemble, inst.cost, n) +
                             effective_operator(inst.ensemble, inst.cost, compose(n, sigma));
            worst = std::max(worst, sum.max_abs_diff(HermitianOperator(inst.ensemble.dim())));
        }
    }
    return {worst <= 1e-12, "130 instances incl. dim 3, max entry " + sci(worst)};
}

Outcome measurement_validity() {
    double min_eig = 0.0;
    double completeness = 0.0;
    for (const auto &inst : full_suite()) {
        const auto meas = optimal_two_outcome_measurement(inst.ensemble, inst.cost, best_numbering(inst));
        HermitianOperator total(inst.ensemble.dim());
        for (const auto &[n, element] : meas.elements()) {
            min_eig = std::min(min_eig, element.min_eigenvalue());
            total += element;
        }
        completeness = std::max(completeness, total.max_abs_diff(HermitianOperator::identity(inst.ensemble.dim())));
    }
    return {min_eig >= -1e-10 && completeness <= 1e-10,
            "min eigenvalue " + sci(min_eig) + ", completeness error " + sci(completeness)};
}

Outcome value_consistency() {
    double worst = 0.0;
    for (const auto &inst : full_suite()) {
        const auto n = best_numbering(inst);
        const auto meas = optimal_two_outcome_measurement(inst.ensemble, inst.cost, n);
        const double closed =
            inst.cost.mean() - 0.5 * trace_norm(effective_operator(inst.ensemble, inst.cost, n));
        worst = std::max(worst, std::abs(guesswork_value(inst.ensemble, inst.cost, meas) - closed));
    }
    return {worst <= 1e-10, "max |diff| " + sci(worst)};
}

Outcome condition_at_argmax() {
    int checked = 0;
    int failed = 0;
    for (const auto &inst : qubit_suite()) {
        if (inst.ensemble.size() > 5) {
            continue;
        }
        ++checked;
        if (!condition_check(inst.ensemble, inst.cost, best_numbering(inst))) {
            ++failed;
        }
    }
    return {failed == 0, std::to_string(checked) + " instances, " + std::to_string(failed) + " failures"};
}

Outcome covariance() {
    Rng rng(5);
    double worst = 0.0;
    int pairs = 0;
    for (const auto &inst : qubit_suite()) {
        const std::size_t m = inst.ensemble.size();
        if (m > 5) {
            continue;
        }
        const double base = min_guesswork_qubit(inst.ensemble, inst.cost, MethodChoice::kBrute).value;
        for (int k = 0; k < 20; ++k) {
            const auto [e, c] = permute_problem(inst.ensemble, inst.cost, Numbering::random(m, rng),
                                                Numbering::random(m, rng));
            worst = std::max(worst, std::abs(min_guesswork_qubit(e, c, MethodChoice::kBrute).value - base));
            ++pairs;
        }
    }
    return {worst <= 1e-10, std::to_string(pairs) + " pairs, max |diff| " + sci(worst)};
}

Outcome h_bound_boundary() {
    bool ok = true;
    std::string detail;
    for (int m : {4, 6, 8}) {
        const double bound = antiprism_h_bound(m);
        const RealMatrix at = -bloch_gram(generate_polygon_antiprism(m, bound));
        const RealMatrix above = -bloch_gram(generate_polygon_antiprism(m, bound + 0.05));
        const bool accepts = diagnose_benevolence(at).is_benevolent();
        const auto rejected = is_benevolent(above);
        ok = ok && accepts && !rejected.property1_ok && !find_benevolent_permutation(above);
        detail += "M=" + std::to_string(m) + (accepts ? " accept" : " REJECT") +
                  (rejected.property1_ok ? "/P1 holds " : "/P1 fails ");
    }
    return {ok, detail};
}

Outcome monte_carlo() {
    struct Case {
        const char *name;
        Ensemble e;
        std::uint64_t seed;
    };
    const Case cases[] = {{"trine", generate_polygon_antiprism(3, 0.0), 42},
                          {"sic", generate_sic(), 43},
                          {"mub", generate_mub(), 44}};
    bool ok = true;
    std::string detail;
    for (const auto &[name, e, seed] : cases) {
        const auto c = identity_cost(e.size());
        const auto report = min_guesswork_qubit(e, c);
        const auto start = std::chrono::steady_clock::now();
        const auto sim = simulate(e, c, report.measurement, 1000000, seed);
        const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        const double z = (sim.estimate - report.value) / *sim.std_error;
        ok = ok && std::abs(z) <= 4.0 && secs < 30.0;
        char buf[96];
        std::snprintf(buf, sizeof buf, "%s z=%+.2f (%.2fs) ", name, z, secs);
        detail += buf;
    }
    return {ok, detail};
}

Outcome determinism() {
    std::vector<Ensemble> inputs{generate_mub(), generate_random_uniform_prior(7, 2, 9),
                                 generate_random_uniform_prior(8, 2, 10)};
    Rng rng(6);
    int compared = 0;
    for (const auto &e : inputs) {
        const auto c = test_support::random_balanced_cost(e.size(), rng);
        std::string first;
        for (unsigned threads : {1u, 4u, 4u, 7u}) {
            SolverOptions options;
            options.enumeration.threads = threads;
            const auto report = min_guesswork_qubit(e, c, MethodChoice::kBrute, options);
            const auto sim = simulate(e, c, report.measurement, 20000, 77);
            const std::string text = dump(report_to_json(report)) + dump(simulation_to_json(sim));
            if (first.empty()) {
                first = text;
            } else if (text != first) {
                return {false, "reports differ at threads=" + std::to_string(threads)};
            }
            ++compared;
        }
    }
    return {true, std::to_string(compared) + " runs byte-identical across 1/4/7 threads"};
}

}  // namespace

int main() {
    struct Criterion {
        const char *name;
        std::function<Outcome()> run;
        double budget_seconds;
    };
    const Criterion criteria[] = {
        {"benevolent equals brute force on polygon/anti-prism families", oracle_equivalence, 60.0},
        {"trine, SIC and MUB values reproduced and pinned", frozen_values, 0.0},
        {"squared Pauli norm equals four times the assignment objective", norm_identity, 0.0},
        {"effective operator is antisymmetric under the balancing permutation", antisymmetry, 0.0},
        {"two-outcome measurements are valid POVMs", measurement_validity, 0.0},
        {"direct value equals mean minus half trace norm", value_consistency, 0.0},
        {"optimality condition holds at the qubit argmax", condition_at_argmax, 0.0},
        {"minimum guesswork is covariant under relabeling", covariance, 0.0},
        {"benevolence switches off just above the h-bound", h_bound_boundary, 0.0},
        {"Monte Carlo agrees with the analytic value", monte_carlo, 0.0},
        {"reports are byte-identical across runs and thread counts", determinism, 0.0},
    };
    int failures = 0;
    int index = 0;
    for (const auto &criterion : criteria) {
        ++index;
        const auto start = std::chrono::steady_clock::now();
        Outcome outcome;
        try {
            outcome = criterion.run();
        } catch (const std::exception &err) {
            outcome = {false, std::string("exception: ") + err.what()};
        }
        const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        if (criterion.budget_seconds > 0.0 && secs >= criterion.budget_seconds) {
            outcome.pass = false;
            outcome.detail += " (over time budget)";
        }
        failures += outcome.pass ? 0 : 1;
        std::printf("%s  %2d  %-68s %s [%.2fs]\n", outcome.pass ? "PASS" : "FAIL", index, criterion.name,
                    outcome.detail.c_str(), secs);
    }
    std::printf("%d/%d criteria passed\n", index - failures, index);
    return failures == 0 ? 0 : 1;
}
