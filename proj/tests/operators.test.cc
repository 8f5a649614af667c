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

#include <cmath>

#include "gtest/gtest.h"

#include "guesswork/errors.h"
#include "test_util.h"

using namespace guesswork;

TEST(operators, rejects_non_hermitian) {
    ComplexMatrix m(2, 2);
    m << 1.0, 0.5, 0.4, 1.0;
    EXPECT_THROW(HermitianOperator{m}, InputError);
    ComplexMatrix rect(2, 3);
    rect.setZero();
    EXPECT_THROW(HermitianOperator{rect}, DimensionError);
    EXPECT_THROW(HermitianOperator(std::size_t{0}), DimensionError);
}

TEST(operators, pauli_vector_examples) {
    auto v = pauli_vector(HermitianOperator::identity(2));
    EXPECT_EQ(v.norm(), 0.0);

    v = pauli_vector(HermitianOperator::diagonal({0.5, -0.5}));
    EXPECT_NEAR(v[0], 0.0, 1e-15);
    EXPECT_NEAR(v[1], 0.0, 1e-15);
    EXPECT_NEAR(v[2], 1.0, 1e-15);

    auto a = HermitianOperator::diagonal({-0.5, 0.5});
    EXPECT_NEAR(trace_norm(a), 1.0, 1e-15);
    EXPECT_NEAR(pauli_vector(a).norm(), 1.0, 1e-15);

    EXPECT_THROW(pauli_vector(HermitianOperator::identity(3)), DimensionError);
}

TEST(operators, pauli_vector_off_diagonal) {
    ComplexMatrix m(2, 2);
    m << 0.0, Complex(0.3, -0.2), Complex(0.3, 0.2), 0.0;
    auto v = pauli_vector(HermitianOperator(m));
    EXPECT_NEAR(v[0], 0.6, 1e-15);
    EXPECT_NEAR(v[1], 0.4, 1e-15);
    EXPECT_NEAR(v[2], 0.0, 1e-15);
}

TEST(operators, from_bloch_examples) {
    auto mixed = from_bloch(1.0, BlochVector{});
    EXPECT_LT(mixed.max_abs_diff(HermitianOperator::diagonal({0.5, 0.5})), 1e-15);

    auto pure = from_bloch(1.0 / 3, BlochVector{{1.0 / 3, 0.0, 0.0}});
    auto ev = pure.eigenvalues();
    EXPECT_NEAR(ev[0], 0.0, 1e-15);
    EXPECT_NEAR(ev[1], 1.0 / 3, 1e-15);
}

TEST(operators, from_bloch_round_trip) {
    Rng rng(11);
    for (int i = 0; i < 100; ++i) {
        auto a = test_support::random_hermitian(2, rng);
        auto back = from_bloch(a.trace(), pauli_vector(a));
        EXPECT_LT(back.max_abs_diff(a), 1e-12);
    }
}

TEST(operators, spectral_parts_examples) {
    auto parts = spectral_parts(HermitianOperator::diagonal({-0.5, 0.5}), 1e-10);
    EXPECT_LT(parts.negative_projector.max_abs_diff(HermitianOperator::diagonal({1.0, 0.0})), 1e-12);
    EXPECT_LT(parts.null_projector.max_abs_diff(HermitianOperator(2)), 1e-12);
    EXPECT_LT(parts.positive_projector.max_abs_diff(HermitianOperator::diagonal({0.0, 1.0})), 1e-12);

    parts = spectral_parts(HermitianOperator(2), 1e-10);
    EXPECT_LT(parts.null_projector.max_abs_diff(HermitianOperator::identity(2)), 1e-12);

    parts = spectral_parts(HermitianOperator::diagonal({3.0, -1.0, 0.0}), 1e-10);
    EXPECT_NEAR(parts.negative_projector.trace(), 1.0, 1e-12);
    EXPECT_NEAR(parts.null_projector.trace(), 1.0, 1e-12);
    EXPECT_NEAR(parts.positive_projector.trace(), 1.0, 1e-12);
}

TEST(operators, spectral_parts_properties) {
    Rng rng(5);
    for (std::size_t dim : {2u, 3u, 5u}) {
        for (int i = 0; i < 30; ++i) {
            auto a = test_support::random_hermitian(dim, rng);
            auto p = spectral_parts(a, 1e-10);
            const ComplexMatrix &n = p.negative_projector.matrix();
            const ComplexMatrix &z = p.null_projector.matrix();
            const ComplexMatrix &q = p.positive_projector.matrix();
            for (const ComplexMatrix *proj : {&n, &z, &q}) {
                EXPECT_LT((*proj * *proj - *proj).cwiseAbs().maxCoeff(), 1e-10);
            }
            EXPECT_LT((n + z + q - ComplexMatrix::Identity(dim, dim)).cwiseAbs().maxCoeff(), 1e-10);
            EXPECT_LT((n * q).cwiseAbs().maxCoeff(), 1e-10);
            EXPECT_LT((n * z).cwiseAbs().maxCoeff(), 1e-10);
            EXPECT_LT((z * q).cwiseAbs().maxCoeff(), 1e-10);

            // Reconstruction from eigenvalues: A = A_+ - A_- where A_+ = (|A| + A)/2.
            auto abs_a = absolute_value(a);
            EXPECT_NEAR(trace_product(abs_a, p.positive_projector) - trace_product(abs_a, p.negative_projector),
                        a.trace(), 1e-10);
            auto recon = 0.5 * (abs_a + a);
            EXPECT_LT((recon.matrix() - q * a.matrix()).cwiseAbs().maxCoeff(), 1e-10);
        }
    }
}

TEST(operators, trace_norm_examples) {
    EXPECT_NEAR(trace_norm(HermitianOperator::identity(2)), 2.0, 1e-15);
    Rng rng(3);
    for (int i = 0; i < 50; ++i) {
        auto a = test_support::random_hermitian(3, rng);
        EXPECT_GE(trace_norm(a) + 1e-12, std::abs(a.trace()));
    }
}

TEST(operators, traceless_qubit_norm_identity) {
    Rng rng(17);
    for (int i = 0; i < 200; ++i) {
        BlochVector v{{rng.normal(), rng.normal(), rng.normal()}};
        auto a = from_bloch(0.0, v);
        EXPECT_NEAR(trace_norm(a), pauli_vector(a).norm(), 1e-10);
    }
}

TEST(operators, is_psd_examples) {
    EXPECT_TRUE(is_psd(HermitianOperator::diagonal({0.5, 0.5}), 1e-10));
    EXPECT_FALSE(is_psd(HermitianOperator::diagonal({1.0, -0.1}), 1e-10));
    // Eigenvalues (t +/- |v|) / 2.
    EXPECT_TRUE(is_psd(from_bloch(1.0 / 3, BlochVector{{0.0, 1.0 / 3, 0.0}}), 1e-10));
    EXPECT_FALSE(is_psd(from_bloch(1.0 / 3, BlochVector{{0.0, 1.0 / 3 + 0.01, 0.0}}), 1e-10));
}
