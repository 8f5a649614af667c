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

#ifndef GUESSWORK_OPERATORS_H
#define GUESSWORK_OPERATORS_H

#include <array>
#include <complex>
#include <cstddef>
#include <span>
#include <vector>

#include <Eigen/Dense>

namespace guesswork {

using Complex = std::complex<double>;
using ComplexMatrix = Eigen::MatrixXcd;
using RealMatrix = Eigen::MatrixXd;

inline constexpr double kHermiticityTol = 1e-12;
inline constexpr double kSpectralTol = 1e-10;

/// Dense Hermitian operator on a small (d <= 16) Hilbert space.
///
/// Construction validates Hermiticity entrywise and then stores the exactly
/// Hermitian part (A + A^dagger) / 2, so downstream eigen-solvers never see
/// rounding asymmetry.
class HermitianOperator {
   public:
    HermitianOperator() : HermitianOperator(1) {}
    explicit HermitianOperator(std::size_t dim);
    explicit HermitianOperator(ComplexMatrix entries, double tol = kHermiticityTol);

    static HermitianOperator identity(std::size_t dim);
    static HermitianOperator diagonal(std::span<const double> values);
    static HermitianOperator diagonal(std::initializer_list<double> values);

    std::size_t dim() const { return static_cast<std::size_t>(m_.rows()); }
    const ComplexMatrix &matrix() const { return m_; }
    Complex operator()(std::size_t i, std::size_t j) const { return m_(i, j); }

    double trace() const;
    /// Ascending eigenvalues.
    std::vector<double> eigenvalues() const;
    double min_eigenvalue() const;
    /// Largest absolute entry of the difference.
    double max_abs_diff(const HermitianOperator &other) const;

    HermitianOperator &operator+=(const HermitianOperator &rhs);
    HermitianOperator &operator-=(const HermitianOperator &rhs);
    HermitianOperator &operator*=(double s);
    friend HermitianOperator operator+(HermitianOperator a, const HermitianOperator &b) { return a += b; }
    friend HermitianOperator operator-(HermitianOperator a, const HermitianOperator &b) { return a -= b; }
    friend HermitianOperator operator*(double s, HermitianOperator a) { return a *= s; }
    friend HermitianOperator operator-(HermitianOperator a) { return a *= -1.0; }

   private:
    ComplexMatrix m_;
};

/// Real 3-vector of Pauli coordinates (Tr[A sigma_x], Tr[A sigma_y], Tr[A sigma_z]).
struct BlochVector {
    std::array<double, 3> components{0.0, 0.0, 0.0};

    double operator[](std::size_t k) const { return components[k]; }
    double &operator[](std::size_t k) { return components[k]; }
    double dot(const BlochVector &other) const;
    double norm() const;
};

struct SpectralParts {
    HermitianOperator negative_projector;
    HermitianOperator null_projector;
    HermitianOperator positive_projector;
    std::vector<double> eigenvalues;  // ascending
};

/// Pauli coordinates of a 2x2 operator using the standard (unnormalized)
/// Pauli matrices, for which trace_norm(A) == |pauli_vector(A)| on traceless A.
/// Throws DimensionError when A.dim() != 2.
BlochVector pauli_vector(const HermitianOperator &a);

/// (trace * I + v . sigma) / 2.
HermitianOperator from_bloch(double trace, const BlochVector &v);

/// Eigenvalues with |lambda| <= tol are classified as null.
SpectralParts spectral_parts(const HermitianOperator &a, double tol = kSpectralTol);

double trace_norm(const HermitianOperator &a);

bool is_psd(const HermitianOperator &a, double tol = kSpectralTol);

/// |A| = A_+ - A_-.
HermitianOperator absolute_value(const HermitianOperator &a);

/// Tr[A B] for Hermitian A, B (real up to rounding; imaginary part dropped).
double trace_product(const HermitianOperator &a, const HermitianOperator &b);

}  // namespace guesswork

#endif
