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

#include "guesswork/operators.h"

#include <algorithm>
#include <cmath>
#include <sstream>

#include <Eigen/Eigenvalues>

#include "guesswork/errors.h"

namespace guesswork {

namespace {

const ComplexMatrix &pauli(std::size_t k) {
    static const std::array<ComplexMatrix, 3> paulis = [] {
        std::array<ComplexMatrix, 3> p;
        for (auto &m : p) {
            m = ComplexMatrix::Zero(2, 2);
        }
        p[0](0, 1) = 1.0;
        p[0](1, 0) = 1.0;
        p[1](0, 1) = Complex(0.0, -1.0);
        p[1](1, 0) = Complex(0.0, 1.0);
        p[2](0, 0) = 1.0;
        p[2](1, 1) = -1.0;
        return p;
    }();
    return paulis[k];
}

Eigen::SelfAdjointEigenSolver<ComplexMatrix> eigensolve(const ComplexMatrix &m, bool vectors) {
    return Eigen::SelfAdjointEigenSolver<ComplexMatrix>(m, vectors ? Eigen::ComputeEigenvectors : Eigen::EigenvaluesOnly);
}

}  // namespace

HermitianOperator::HermitianOperator(std::size_t dim) : m_(ComplexMatrix::Zero(dim, dim)) {
    if (dim == 0) {
        throw DimensionError("operator dimension must be at least 1");
    }
}

HermitianOperator::HermitianOperator(ComplexMatrix entries, double tol) {
    if (entries.rows() != entries.cols()) {
        throw DimensionError("operator matrix must be square");
    }
    if (entries.rows() == 0) {
        throw DimensionError("operator dimension must be at least 1");
    }
    for (Eigen::Index i = 0; i < entries.rows(); ++i) {
        for (Eigen::Index j = 0; j < entries.cols(); ++j) {
            if (!std::isfinite(entries(i, j).real()) || !std::isfinite(entries(i, j).imag())) {
                throw InputError("operator has non-finite entries");
            }
            if (std::abs(entries(i, j) - std::conj(entries(j, i))) > tol) {
                std::ostringstream msg;
                msg << "operator is not Hermitian at (" << i << ", " << j << ")";
                throw InputError(msg.str());
            }
        }
    }
    m_ = (entries + entries.adjoint()) * 0.5;
}

HermitianOperator HermitianOperator::identity(std::size_t dim) {
    HermitianOperator out(dim);
    out.m_.setIdentity();
    return out;
}

HermitianOperator HermitianOperator::diagonal(std::span<const double> values) {
    HermitianOperator out(values.size());
    for (std::size_t i = 0; i < values.size(); ++i) {
        out.m_(i, i) = values[i];
    }
    return out;
}

HermitianOperator HermitianOperator::diagonal(std::initializer_list<double> values) {
    return diagonal(std::span<const double>(values.begin(), values.size()));
}

double HermitianOperator::trace() const {
    return m_.trace().real();
}

std::vector<double> HermitianOperator::eigenvalues() const {
    auto solver = eigensolve(m_, false);
    const auto &ev = solver.eigenvalues();
    return {ev.data(), ev.data() + ev.size()};
}

double HermitianOperator::min_eigenvalue() const {
    return eigensolve(m_, false).eigenvalues()(0);
}

double HermitianOperator::max_abs_diff(const HermitianOperator &other) const {
    if (other.dim() != dim()) {
        throw DimensionError("operator dimensions differ");
    }
    return (m_ - other.m_).cwiseAbs().maxCoeff();
}

HermitianOperator &HermitianOperator::operator+=(const HermitianOperator &rhs) {
    if (rhs.dim() != dim()) {
        throw DimensionError("operator dimensions differ");
    }
    m_ += rhs.m_;
    return *this;
}

HermitianOperator &HermitianOperator::operator-=(const HermitianOperator &rhs) {
    if (rhs.dim() != dim()) {
        throw DimensionError("operator dimensions differ");
    }
    m_ -= rhs.m_;
    return *this;
}

HermitianOperator &HermitianOperator::operator*=(double s) {
    m_ *= s;
    return *this;
}

double BlochVector::dot(const BlochVector &other) const {
    return components[0] * other.components[0] + components[1] * other.components[1] +
           components[2] * other.components[2];
}

double BlochVector::norm() const {
    return std::sqrt(dot(*this));
}

BlochVector pauli_vector(const HermitianOperator &a) {
    if (a.dim() != 2) {
        throw DimensionError("Pauli vector requires a 2x2 operator, got dimension " + std::to_string(a.dim()));
    }
    BlochVector v;
    for (std::size_t k = 0; k < 3; ++k) {
        v[k] = (a.matrix() * pauli(k)).trace().real();
    }
    return v;
}

HermitianOperator from_bloch(double trace, const BlochVector &v) {
    ComplexMatrix m = trace * ComplexMatrix::Identity(2, 2);
    for (std::size_t k = 0; k < 3; ++k) {
        m += v[k] * pauli(k);
    }
    return HermitianOperator(m * 0.5);
}

SpectralParts spectral_parts(const HermitianOperator &a, double tol) {
    auto solver = eigensolve(a.matrix(), true);
    const auto &values = solver.eigenvalues();
    const auto &vectors = solver.eigenvectors();
    const auto d = static_cast<Eigen::Index>(a.dim());

    ComplexMatrix neg = ComplexMatrix::Zero(d, d);
    ComplexMatrix null = ComplexMatrix::Zero(d, d);
    ComplexMatrix pos = ComplexMatrix::Zero(d, d);
    for (Eigen::Index k = 0; k < d; ++k) {
        ComplexMatrix proj = vectors.col(k) * vectors.col(k).adjoint();
        if (values(k) < -tol) {
            neg += proj;
        } else if (values(k) > tol) {
            pos += proj;
        } else {
            null += proj;
        }
    }
    return SpectralParts{
        HermitianOperator(std::move(neg)),
        HermitianOperator(std::move(null)),
        HermitianOperator(std::move(pos)),
        {values.data(), values.data() + values.size()},
    };
}

double trace_norm(const HermitianOperator &a) {
    double total = 0.0;
    for (double x : a.eigenvalues()) {
        total += std::abs(x);
    }
    return total;
}

bool is_psd(const HermitianOperator &a, double tol) {
    return a.min_eigenvalue() >= -tol;
}

HermitianOperator absolute_value(const HermitianOperator &a) {
    auto solver = eigensolve(a.matrix(), true);
    const auto &vectors = solver.eigenvectors();
    ComplexMatrix m = vectors * solver.eigenvalues().cwiseAbs().cast<Complex>().asDiagonal() * vectors.adjoint();
    return HermitianOperator(std::move(m));
}

double trace_product(const HermitianOperator &a, const HermitianOperator &b) {
    if (a.dim() != b.dim()) {
        throw DimensionError("operator dimensions differ");
    }
    // Tr[AB] = sum_ij A_ij B_ji = sum_ij A_ij conj(B_ij) for Hermitian B.
    return (a.matrix().array() * b.matrix().array().conjugate()).sum().real();
}

}  // namespace guesswork
