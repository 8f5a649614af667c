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

// Command-line front end: generate, solve, check and simulate.

#include <cmath>
#include <cstdio>
#include <filesystem>
#include <iostream>
#include <optional>
#include <string>

#include "CLI11.hpp"

#include "guesswork/errors.h"
#include "guesswork/guesswork.h"
#include "guesswork/json_io.h"

namespace gw = guesswork;

namespace {

enum ExitCode : int { kOk = 0, kInputError = 2, kUnverified = 3, kNumericalFailure = 4 };

std::string fmt(double x) {
    if (std::isinf(x)) {
        return x > 0 ? "inf" : "-inf";
    }
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.10f", x);
    return buf;
}

std::string join(const std::vector<int> &v) {
    std::string out = "(";
    for (std::size_t i = 0; i < v.size(); ++i) {
        out += (i ? "," : "") + std::to_string(v[i]);
    }
    return out + ")";
}

void row(const std::string &key, const std::string &value) {
    std::printf("  %-22s %s\n", key.c_str(), value.c_str());
}

void require_readable(const std::string &path) {
    if (!std::filesystem::is_regular_file(path)) {
        throw gw::InputError("cannot read " + path);
    }
}

void require_positive_tol(double tol) {
    if (!(tol > 0.0)) {
        throw gw::InputError("--tol must be positive");
    }
}

gw::CostFunction load_cost(const std::string &arg, std::size_t size) {
    gw::CostFunction c = arg == "identity" ? gw::identity_cost(size) : gw::cost_from_json(gw::read_json_file(arg));
    if (c.size() != size) {
        throw gw::DimensionError("cost has " + std::to_string(c.size()) + " entries but the ensemble has " +
                                 std::to_string(size) + " states");
    }
    return c;
}

void maybe_write(const std::string &out, const gw::Json &j) {
    if (!out.empty()) {
        gw::write_json_file(out, j);
    }
}

struct SolveOutcome {
    gw::GuessworkReport report;
    int exit_code;
};

// Qubit uniform-prior ensembles go through the assignment reduction; any
// other ensemble uses the trace-norm argmax plus the optimality check.
SolveOutcome solve(const gw::Ensemble &e, const gw::CostFunction &c, gw::MethodChoice method, double tol) {
    gw::SolverOptions options;
    options.tol = tol;
    options.enumeration.factorial_cap = gw::factorial_cap_from_env();
    const bool qubit_path = e.dim() == 2 && gw::is_uniform_prior(e, tol);
    if (qubit_path || method != gw::MethodChoice::kAuto) {
        auto report = gw::min_guesswork_qubit(e, c, method, options);
        const int code = report.condition_verified ? kOk : kUnverified;
        return {std::move(report), code};
    }
    (void)c.balancing_permutation();
    const auto candidate = gw::max_trace_norm_numbering(e, c, options.enumeration);
    if (auto report = gw::min_guesswork_general(e, c, candidate, options)) {
        return {std::move(*report), kOk};
    }
    return {gw::unverified_candidate_report(e, c, candidate, options), kUnverified};
}

void print_report(const gw::GuessworkReport &r) {
    std::printf("minimum guesswork\n");
    row("value", fmt(r.value) + (r.condition_verified ? "" : "  (unverified upper bound)"));
    row("mean cost", fmt(r.mean_cost));
    row("trace-norm term", fmt(r.trace_norm_term));
    row("optimal numbering", join(r.optimal_numbering.one_based()));
    row("method", std::string(gw::method_name(r.method)));
    row("condition verified", r.condition_verified ? "yes" : "no");
    row("measurement outcomes", std::to_string(r.measurement.elements().size()));
    for (const auto &note : r.notes) {
        row("note", note);
    }
}

int cmd_generate(const std::string &family, std::optional<int> m, double h, const std::string &lambda,
                 std::uint64_t seed, int dim, const std::string &out) {
    gw::EnsembleFamilySpec spec;
    spec.family = gw::parse_family(family);
    spec.h = h;
    spec.seed = seed;
    spec.dim = dim;
    if (lambda != "pure") {
        try {
            std::size_t used = 0;
            spec.lambda = std::stod(lambda, &used);
            if (used != lambda.size()) {
                throw std::invalid_argument(lambda);
            }
        } catch (const std::logic_error &) {
            throw gw::InputError("--lambda must be a number or 'pure'");
        }
    }
    switch (spec.family) {
        case gw::Family::kSic:
        case gw::Family::kMub:
            spec.size = spec.family == gw::Family::kSic ? 4 : 6;
            if (m && *m != spec.size) {
                throw gw::InputError(std::string(gw::family_name(spec.family)) + " has M = " +
                                     std::to_string(spec.size));
            }
            spec.h = gw::antiprism_h_bound(spec.size);
            break;
        case gw::Family::kPolygonAntiprism:
        case gw::Family::kRandom:
            if (!m) {
                throw gw::InputError("--m is required for family " + family);
            }
            spec.size = *m;
            break;
    }
    if (spec.family == gw::Family::kPolygonAntiprism && spec.size >= 2) {
        const double bound = gw::antiprism_h_bound(spec.size);
        if (spec.size % 2 == 1 && h > 0.0) {
            throw gw::InputError("h-bound is 0 for odd M = " + std::to_string(spec.size) + "; got h = " + fmt(h));
        }
        if (h > bound) {
            std::fprintf(stderr, "warning: h = %s exceeds the h-bound %s; the Gram matrix is not benevolent\n",
                         fmt(h).c_str(), fmt(bound).c_str());
        }
    }

    const gw::Ensemble e = gw::generate(spec);
    const gw::Json j = gw::ensemble_to_json(e, spec);
    std::FILE *table = out.empty() ? stderr : stdout;
    std::fprintf(table, "generated ensemble\n");
    std::fprintf(table, "  %-22s %s\n", "family", std::string(gw::family_name(spec.family)).c_str());
    std::fprintf(table, "  %-22s %zu\n", "M", e.size());
    std::fprintf(table, "  %-22s %zu\n", "dim", e.dim());
    std::fprintf(table, "  %-22s %s\n", "uniform prior", gw::is_uniform_prior(e) ? "yes" : "no");
    if (spec.family != gw::Family::kRandom) {
        const double bound = gw::antiprism_h_bound(spec.size);
        std::fprintf(table, "  %-22s %s (bound %s, %s)\n", "h", fmt(spec.h).c_str(), fmt(bound).c_str(),
                     spec.h <= bound + gw::kSpectralTol ? "within" : "above");
    }
    if (out.empty()) {
        std::fputs(gw::dump(j).c_str(), stdout);
    } else {
        gw::write_json_file(out, j);
    }
    return kOk;
}

int cmd_solve(const std::string &ensemble, const std::string &cost, const std::string &method, double tol,
              const std::string &out) {
    require_positive_tol(tol);
    require_readable(ensemble);
    if (cost != "identity") {
        require_readable(cost);
    }
    const auto choice = gw::parse_method_choice(method);
    const gw::Ensemble e = gw::ensemble_from_json(gw::read_json_file(ensemble));
    const gw::CostFunction c = load_cost(cost, e.size());
    auto [report, code] = solve(e, c, choice, tol);
    print_report(report);
    maybe_write(out, gw::report_to_json(report));
    return code;
}

int cmd_check(const std::string &ensemble, double tol, const std::string &out) {
    require_positive_tol(tol);
    require_readable(ensemble);
    const gw::Json raw = gw::read_json_file(ensemble);
    const gw::Ensemble e = gw::ensemble_from_json(raw);
    const auto generator = gw::generator_from_json(raw);

    gw::Json j;
    j["M"] = e.size();
    j["dim"] = e.dim();
    j["uniform_prior"] = gw::is_uniform_prior(e, tol);
    std::printf("ensemble structure\n");
    row("M", std::to_string(e.size()));
    row("dim", std::to_string(e.dim()));
    row("uniform prior", j["uniform_prior"].get<bool>() ? "yes" : "no");
    if (e.dim() != 2) {
        std::printf("  notice: dim = %zu, Bloch-vector checks skipped (qubits only)\n", e.dim());
        j["bloch_checks"] = "skipped";
    } else {
        const bool overlap = gw::constant_overlap_check(e, tol);
        const gw::RealMatrix neg = -gw::bloch_gram(e);
        const auto report =
            gw::diagnose_benevolence(neg, tol, gw::factorial_cap_from_env());
        j["constant_overlap"] = overlap;
        j["benevolence"] = gw::benevolence_to_json(report);
        row("constant overlap", overlap ? "yes" : "no");
        std::printf("benevolence of -Gram(Bloch)\n");
        row("benevolent", report.is_benevolent() ? "yes" : "no");
        row("symmetric Toeplitz", report.is_symmetric_toeplitz ? "yes" : "no");
        row("property1_ok", report.property1_ok ? "yes" : "no");
        row("property2_ok", report.property2_ok ? "yes" : "no");
        row("failing index", report.failing_index ? std::to_string(*report.failing_index) : "none");
        row("witness permutation",
            report.witness_permutation ? join(report.witness_permutation->one_based()) : "none");
    }
    if (generator && generator->family != gw::Family::kRandom) {
        const double bound = gw::antiprism_h_bound(generator->size);
        const bool within = generator->h <= bound + tol;
        j["h"] = generator->h;
        j["h_bound"] = std::isinf(bound) ? gw::Json(nullptr) : gw::Json(bound);
        j["h_within_bound"] = within;
        std::printf("generator\n");
        row("family", std::string(gw::family_name(generator->family)));
        row("h", fmt(generator->h));
        row("h-bound", fmt(bound));
        row("h within bound", within ? "yes" : "no");
    }
    maybe_write(out, j);
    return kOk;
}

int cmd_simulate(const std::string &ensemble, const std::string &cost, std::uint64_t samples, std::uint64_t seed,
                 double tol, const std::string &out) {
    require_positive_tol(tol);
    require_readable(ensemble);
    if (cost != "identity") {
        require_readable(cost);
    }
    if (samples == 0) {
        throw gw::InputError("--samples must be positive");
    }
    const gw::Ensemble e = gw::ensemble_from_json(gw::read_json_file(ensemble));
    const gw::CostFunction c = load_cost(cost, e.size());
    auto [report, code] = solve(e, c, gw::MethodChoice::kAuto, tol);
    const auto sim = gw::simulate(e, c, report.measurement, samples, seed);

    std::optional<double> z;
    if (sim.std_error && *sim.std_error > 0.0) {
        z = (sim.estimate - report.value) / *sim.std_error;
    } else if (sim.std_error && sim.estimate == report.value) {
        z = 0.0;
    }
    std::printf("monte carlo guesswork\n");
    row("samples", std::to_string(sim.samples));
    row("seed", std::to_string(seed));
    row("estimate", fmt(sim.estimate));
    row("std error", sim.std_error ? fmt(*sim.std_error) : "unavailable");
    row("analytic value", fmt(report.value) + (report.condition_verified ? "" : "  (unverified upper bound)"));
    row("z-score", z ? fmt(*z) : "unavailable");

    gw::Json j = gw::simulation_to_json(sim);
    j["seed"] = seed;
    j["analytic_value"] = report.value;
    j["z_score"] = z ? gw::Json(*z) : gw::Json(nullptr);
    j["numbering"] = report.optimal_numbering.one_based();
    j["condition_verified"] = report.condition_verified;
    maybe_write(out, j);
    return code;
}

}  // namespace

int main(int argc, char **argv) {
    CLI::App app{"Minimum guesswork of quantum ensembles under balanced costs"};
    app.require_subcommand(1);

    std::string family, lambda = "pure", out, ensemble, cost = "identity", method = "auto";
    std::optional<int> m;
    double h = 0.0, tol = gw::kSpectralTol;
    std::uint64_t seed = 0, samples = 100000;
    int dim = 2;

    auto *generate = app.add_subcommand("generate", "Write an ensemble JSON file for a named family");
    generate->set_help_flag("--help", "Print this help message and exit");
    generate->add_option("--family", family, "polygon_antiprism | sic | mub | random")->required();
    generate->add_option("--m", m, "Number of states");
    generate->add_option("--h", h, "Anti-prism height");
    generate->add_option("--lambda", lambda, "Bloch scale: a number or 'pure'");
    generate->add_option("--seed", seed, "Seed for the random family");
    generate->add_option("--dim", dim, "Hilbert-space dimension for the random family");
    generate->add_option("--out", out, "Output path (JSON goes to stdout if omitted)");

    auto *solve_cmd = app.add_subcommand("solve", "Compute the minimum guesswork and the optimal measurement");
    solve_cmd->add_option("--ensemble", ensemble, "Ensemble JSON")->required();
    solve_cmd->add_option("--cost", cost, "'identity' or a cost JSON file");
    solve_cmd->add_option("--method", method, "auto | brute | benevolent");
    solve_cmd->add_option("--tol", tol, "Spectral tolerance");
    solve_cmd->add_option("--out", out, "Report JSON path");

    auto *check = app.add_subcommand("check", "Report structural properties of an ensemble");
    check->add_option("--ensemble", ensemble, "Ensemble JSON")->required();
    check->add_option("--tol", tol, "Tolerance");
    check->add_option("--out", out, "Structure JSON path");

    auto *simulate = app.add_subcommand("simulate", "Monte Carlo estimate at the optimal measurement");
    simulate->add_option("--ensemble", ensemble, "Ensemble JSON")->required();
    simulate->add_option("--cost", cost, "'identity' or a cost JSON file");
    simulate->add_option("--samples", samples, "Number of samples");
    simulate->add_option("--seed", seed, "Sampler seed");
    simulate->add_option("--tol", tol, "Spectral tolerance");
    simulate->add_option("--out", out, "Estimate JSON path");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError &err) {
        const int code = app.exit(err);
        return code == 0 ? kOk : kInputError;
    }

    try {
        if (*generate) {
            return cmd_generate(family, m, h, lambda, seed, dim, out);
        }
        if (*solve_cmd) {
            return cmd_solve(ensemble, cost, method, tol, out);
        }
        if (*check) {
            return cmd_check(ensemble, tol, out);
        }
        return cmd_simulate(ensemble, cost, samples, seed, tol, out);
    } catch (const gw::InputError &err) {
        std::fprintf(stderr, "error: %s\n", err.what());
        return kInputError;
    } catch (const gw::SolverUnavailableError &err) {
        std::fprintf(stderr, "error: %s\n", err.what());
        return kInputError;
    } catch (const gw::NumericalError &err) {
        std::fprintf(stderr, "numerical failure: %s\n", err.what());
        return kNumericalFailure;
    } catch (const std::exception &err) {
        std::fprintf(stderr, "internal error: %s\n", err.what());
        return kNumericalFailure;
    }
}
