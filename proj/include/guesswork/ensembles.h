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

#ifndef GUESSWORK_ENSEMBLES_H
#define GUESSWORK_ENSEMBLES_H

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "guesswork/operators.h"

namespace guesswork {

/// Finite list of PSD operators rho(m) with sum_m Tr[rho(m)] = 1.
///
/// Only obtainable through `validate` (or the generators, which call it), so
/// every instance satisfies the ensemble invariants.
class Ensemble {
   public:
    static Ensemble validate(std::vector<HermitianOperator> states, double tol = kSpectralTol);

    std::size_t dim() const { return dim_; }
    std::size_t size() const { return states_.size(); }
    const std::vector<HermitianOperator> &states() const { return states_; }
    const HermitianOperator &state(std::size_t m) const { return states_[m]; }
    /// prior[m] = Tr[rho(m)].
    const std::vector<double> &prior() const { return prior_; }
    /// (1/M) sum_m rho(m).
    const HermitianOperator &average_state() const { return average_; }
    /// Pauli vectors of the states; empty unless dim() == 2.
    const std::vector<BlochVector> &bloch() const { return bloch_; }

   private:
    Ensemble() = default;

    std::size_t dim_ = 0;
    std::vector<HermitianOperator> states_;
    std::vector<double> prior_;
    HermitianOperator average_;
    std::vector<BlochVector> bloch_;
};

enum class Family { kPolygonAntiprism, kSic, kMub, kRandom };

std::string_view family_name(Family f);
/// Throws InputError for unknown names.
Family parse_family(std::string_view name);

struct EnsembleFamilySpec {
    Family family = Family::kPolygonAntiprism;
    int size = 3;  // number of states M
    double h = 0.0;
    /// Bloch radius scale; nullopt means pure states, lambda = 1 / (M sqrt(1 + h^2)).
    std::optional<double> lambda;
    std::uint64_t seed = 0;
    int dim = 2;  // random family only
};

/// Bloch vectors lambda (cos(2 pi k / M), sin(2 pi k / M), (-1)^k h) for
/// k = 0..M-1, each with trace 1/M. h = 0 gives a regular polygon, even M
/// with h > 0 an anti-prism. Throws InputError if a state would not be PSD.
Ensemble generate_polygon_antiprism(int size, double h, std::optional<double> lambda = std::nullopt);
/// Tetrahedron: M = 4 with h at its bound.
Ensemble generate_sic();
/// Octahedron: M = 6 with h at its bound.
Ensemble generate_mub();
/// Each state has trace exactly 1/M. For dim 2 the Bloch direction is
/// uniform on the sphere and the radius uniform in [0, 1/M]; for dim > 2 the
/// state is a normalized Wishart (Ginibre G G^dagger) sample.
Ensemble generate_random_uniform_prior(int size, int dim, std::uint64_t seed);
Ensemble generate(const EnsembleFamilySpec &spec);

/// Largest h for which the anti-prism of M states stays benevolent:
/// 0 for odd M, sqrt((1 - cos(2 pi/M))/2) when M/2 is even,
/// sqrt((cos(2 pi/M) - cos(4 pi/M))/2) when M/2 is odd. M = 2 imposes no
/// bound and returns +infinity.
double antiprism_h_bound(int size);

bool is_uniform_prior(const Ensemble &e, double tol = kSpectralTol);

/// Whether v(average) . v(rho(m)) is the same for every m. Qubits only.
bool constant_overlap_check(const Ensemble &e, double tol = kSpectralTol);

}  // namespace guesswork

#endif
