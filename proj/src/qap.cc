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

#include "guesswork/qap.h"

#include <cmath>
#include <cstdlib>
#include <string>

#include "guesswork/errors.h"

namespace guesswork {

namespace {

constexpr double kTieTol = 1e-12;

bool is_symmetric(const RealMatrix &m, double tol) {
    if (m.rows() != m.cols()) {
        return false;
    }
    for (Eigen::Index i = 0; i < m.rows(); ++i) {
        for (Eigen::Index j = i + 1; j < m.cols(); ++j) {
            if (std::abs(m(i, j) - m(j, i)) > tol) {
                return false;
            }
        }
    }
    return true;
}

// Shared by qap_objective and the brute-force scan so both produce
// bit-identical values for the same numbering.
double objective_of(const RealMatrix &cost, const RealMatrix &bloch, const int *map, std::size_t size) {
    double total = 0.0;
    for (std::size_t t = 0; t < size; ++t) {
        double row = 0.0;
        for (std::size_t u = 0; u < size; ++u) {
            row += cost(t, u) * bloch(map[t], map[u]);
        }
        total += row;
    }
    return total;
}

// B(i, j) = A(sigma(i), sigma(j)).
RealMatrix relabel(const RealMatrix &a, const std::vector<int> &sigma) {
    const auto m = a.rows();
    RealMatrix b(m, m);
    for (Eigen::Index i = 0; i < m; ++i) {
        for (Eigen::Index j = 0; j < m; ++j) {
            b(i, j) = a(sigma[i], sigma[j]);
        }
    }
    return b;
}

class BenevolentSearch {
   public:
    BenevolentSearch(const RealMatrix &a, double tol)
        : a_(a), tol_(tol), size_(static_cast<std::size_t>(a.rows())), sigma_(size_), used_(size_, false) {}

    std::optional<Numbering> run() {
        if (extend(0)) {
            return Numbering(sigma_);
        }
        return std::nullopt;
    }

   private:
    double b(std::size_t i, std::size_t j) const { return a_(sigma_[i], sigma_[j]); }

    // Checks every constraint that involves position k and earlier positions.
    bool consistent(std::size_t k) const {
        if (std::abs(b(k, k) - b(0, 0)) > tol_) {
            return false;
        }
        for (std::size_t j = 0; j < k; ++j) {
            if (std::abs(b(k, j) - b(j, k)) > tol_) {
                return false;
            }
            if (std::abs(b(k, j) - b(k - j, 0)) > tol_) {
                return false;
            }
        }
        // Property 1 on the first-column prefix that is already fixed.
        if (k >= 2 && k <= size_ / 2 && b(k - 1, 0) > b(k, 0) + tol_) {
            return false;
        }
        return true;
    }

    bool extend(std::size_t k) {
        if (k == size_) {
            return is_benevolent(relabel(a_, sigma_), tol_).is_benevolent();
        }
        for (std::size_t v = 0; v < size_; ++v) {
            if (used_[v]) {
                continue;
            }
            sigma_[k] = static_cast<int>(v);
            used_[v] = true;
            if (consistent(k) && extend(k + 1)) {
                return true;
            }
            used_[v] = false;
        }
        return false;
    }

    const RealMatrix &a_;
    double tol_;
    std::size_t size_;
    std::vector<int> sigma_;
    std::vector<bool> used_;
};

}  // namespace

std::size_t factorial_cap_from_env() {
    const char *raw = std::getenv("GUESSWORK_FACTORIAL_CAP");
    if (raw == nullptr || *raw == '\0') {
        return kDefaultFactorialCap;
    }
    char *end = nullptr;
    const long value = std::strtol(raw, &end, 10);
    if (end == raw || *end != '\0' || value < 1) {
        return kDefaultFactorialCap;
    }
    return static_cast<std::size_t>(value);
}

void require_within_cap(std::size_t size, std::size_t cap, const char *what) {
    if (size > cap) {
        throw CapExceededError(std::string(what) + ": M = " + std::to_string(size) + " exceeds the factorial cap " +
                               std::to_string(cap) +
                               " (raise GUESSWORK_FACTORIAL_CAP or use the benevolent fast path)");
    }
}

QapInstance::QapInstance(RealMatrix cost, RealMatrix bloch) : cost_gram(std::move(cost)), bloch_gram(std::move(bloch)) {
    if (cost_gram.rows() != bloch_gram.rows() || cost_gram.cols() != bloch_gram.cols()) {
        throw DimensionError("QAP matrices must have equal size");
    }
    if (!is_symmetric(cost_gram, kHermiticityTol) || !is_symmetric(bloch_gram, kHermiticityTol)) {
        throw InputError("QAP matrices must be square and symmetric");
    }
}

RealMatrix bloch_gram(const Ensemble &e) {
    if (e.dim() != 2) {
        throw DimensionError("Bloch Gram matrix requires a qubit ensemble");
    }
    const auto m = static_cast<Eigen::Index>(e.size());
    RealMatrix g(m, m);
    for (Eigen::Index i = 0; i < m; ++i) {
        for (Eigen::Index j = 0; j < m; ++j) {
            g(i, j) = e.bloch()[i].dot(e.bloch()[j]);
        }
    }
    return g;
}

QapInstance make_qap_instance(const Ensemble &e, const CostFunction &c) {
    if (c.size() != e.size()) {
        throw DimensionError("cost has " + std::to_string(c.size()) + " values but the ensemble has " +
                             std::to_string(e.size()) + " states");
    }
    return QapInstance(cost_gram(c), bloch_gram(e));
}

double qap_objective(const QapInstance &inst, const Numbering &n) {
    if (n.size() != inst.size()) {
        throw DimensionError("numbering size does not match the QAP instance");
    }
    return objective_of(inst.cost_gram, inst.bloch_gram, n.map().data(), n.size());
}

QapSolution brute_force_solve(const QapInstance &inst, const EnumerationOptions &options) {
    require_within_cap(inst.size(), options.factorial_cap, "brute-force QAP");
    const std::size_t size = inst.size();
    auto best = parallel_argmax(
        size,
        [&](const std::vector<int> &perm) { return objective_of(inst.cost_gram, inst.bloch_gram, perm.data(), size); },
        kTieTol, options.threads);
    return {std::move(best.numbering), best.score};
}

BenevolenceReport is_benevolent(const RealMatrix &a, double tol) {
    BenevolenceReport report;
    if (a.rows() != a.cols() || a.rows() == 0) {
        return report;
    }
    const auto m = a.rows();
    report.is_symmetric_toeplitz = true;
    for (Eigen::Index i = 0; i < m && report.is_symmetric_toeplitz; ++i) {
        for (Eigen::Index j = 0; j < m; ++j) {
            const Eigen::Index lag = i >= j ? i - j : j - i;
            if (std::abs(a(i, j) - a(lag, 0)) > tol || std::abs(a(i, j) - a(j, i)) > tol) {
                report.is_symmetric_toeplitz = false;
                report.failing_index = static_cast<int>(i + 1);
                break;
            }
        }
    }
    if (!report.is_symmetric_toeplitz) {
        return report;
    }

    const Eigen::Index half = m / 2;
    report.property1_ok = true;
    for (Eigen::Index k = 1; k < half; ++k) {
        if (a(k, 0) > a(k + 1, 0) + tol) {
            report.property1_ok = false;
            report.failing_index = static_cast<int>(k);
            break;
        }
    }
    report.property2_ok = true;
    for (Eigen::Index k = 1; k <= half; ++k) {
        if (a(m - k, 0) < a(k, 0) - tol) {
            report.property2_ok = false;
            if (!report.failing_index) {
                report.failing_index = static_cast<int>(k);
            }
            break;
        }
    }
    if (report.is_benevolent()) {
        report.witness_permutation = Numbering::identity(static_cast<std::size_t>(m));
    }
    return report;
}

std::optional<Numbering> find_benevolent_permutation(const RealMatrix &a, double tol, std::size_t factorial_cap) {
    if (a.rows() != a.cols() || a.rows() == 0) {
        return std::nullopt;
    }
    const auto size = static_cast<std::size_t>(a.rows());
    const int m = static_cast<int>(size);

    // Rotations and reflections of the cyclic labeling; the identity comes first.
    for (int reflect = 0; reflect < 2; ++reflect) {
        for (int shift = 0; shift < m; ++shift) {
            std::vector<int> sigma(size);
            for (int i = 0; i < m; ++i) {
                sigma[i] = reflect ? ((shift - i) % m + m) % m : (i + shift) % m;
            }
            if (is_benevolent(relabel(a, sigma), tol).is_benevolent()) {
                return Numbering(std::move(sigma));
            }
        }
    }

    require_within_cap(size, factorial_cap, "benevolent permutation search");
    return BenevolentSearch(a, tol).run();
}

BenevolenceReport diagnose_benevolence(const RealMatrix &a, double tol, std::size_t factorial_cap) {
    BenevolenceReport report = is_benevolent(a, tol);
    if (!report.is_benevolent()) {
        report.witness_permutation = find_benevolent_permutation(a, tol, factorial_cap);
    }
    return report;
}

Numbering zigzag_numbering(std::size_t size) {
    // Zero-based form of the one-based inverse definition.
    std::vector<int> inverse(size);
    const std::size_t upper = (size + 1) / 2;
    for (std::size_t m = 1; m <= size; ++m) {
        inverse[m - 1] = static_cast<int>(m <= upper ? 2 * m - 1 : 2 * (size + 1 - m)) - 1;
    }
    return invert(Numbering(std::move(inverse)));
}

std::optional<QapSolution> benevolent_solve(const CostFunction &c, const RealMatrix &bloch, double tol,
                                            std::size_t factorial_cap) {
    (void)c.balancing_permutation();
    QapInstance inst(cost_gram(c), bloch);

    // Row sums equal M v(average) . v(rho(i)); the shift argument behind the
    // closed form needs them constant.
    const Eigen::VectorXd row_sums = bloch.rowwise().sum();
    if ((row_sums.array() - row_sums.mean()).abs().maxCoeff() > tol) {
        return std::nullopt;
    }

    auto sigma2 = find_benevolent_permutation(-bloch, tol, factorial_cap);
    if (!sigma2) {
        return std::nullopt;
    }
    Numbering n_star = compose(compose(*sigma2, zigzag_numbering(c.size())), invert(c.sorting_permutation()));
    const double value = qap_objective(inst, n_star);
    return QapSolution{std::move(n_star), value};
}

}  // namespace guesswork
