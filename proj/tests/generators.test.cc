// Copyright 2026 The paulinoise Authors
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

#include "paulinoise/generators.h"

#include <cmath>
#include <numbers>

#include "gtest/gtest.h"
#include "paulinoise/errors.h"
#include "paulinoise/extraction.h"
#include "testing/oracles.h"

using namespace paulinoise;
namespace pt = paulinoise::testing;

namespace {

PauliLabel L(const char *s) {
    return PauliLabel::from_string(s);
}

}  // namespace

TEST(gen_ez, examples) {
    EXPECT_TRUE(gen_ez(0).matrix().isIdentity());
    DenseOperator q = gen_ez(std::numbers::pi / 2);
    EXPECT_NEAR(std::abs(q(0, 0) - complex_t(0, -1)), 0, 1e-15);
    EXPECT_NEAR(std::abs(q(1, 1) - complex_t(0, 1)), 0, 1e-15);
    EXPECT_EQ(q(0, 1), complex_t(0));
    EXPECT_TRUE(gen_ez(0.3).is_unitary(1e-15));
    EXPECT_THROW(gen_ez(NAN), ValidationError);
}

TEST(gen_overrotated_cz, examples) {
    DenseOperator cz = gen_overrotated_cz(0);
    EXPECT_EQ(cz.matrix().diagonal(), Eigen::Vector4cd(1, 1, 1, -1));
    DenseOperator o = gen_overrotated_cz(0.05);
    EXPECT_NEAR(std::abs(o(3, 3) + std::polar(1.0, -0.05)), 0, 1e-15);
    EXPECT_TRUE(o.is_unitary(1e-15));
    EXPECT_THROW(gen_overrotated_cz(INFINITY), ValidationError);
}

TEST(gen_random_unitary, deterministic_and_unitary) {
    for (std::size_t n = 1; n <= 4; n++) {
        DenseOperator a = gen_random_unitary(n, 1234);
        DenseOperator b = gen_random_unitary(n, 1234);
        EXPECT_EQ(a.matrix(), b.matrix());
        EXPECT_EQ(a.dim(), std::size_t{1} << n);
        EXPECT_LE(a.unitarity_defect(), 1e-10);
    }
    EXPECT_NE(gen_random_unitary(2, 1).matrix(), gen_random_unitary(2, 2).matrix());
}

TEST(gen_random_unitary, first_entry_is_pinned) {
    // mt19937_64 with seed 0 is fixed by the standard; the first column is
    // the normalized first Gaussian vector, so its first entry is reproducible.
    std::mt19937_64 rng(0);
    auto uniform = [&] { return double(rng() >> 11) * 0x1.0p-53; };
    double u1 = 1 - uniform(), u2 = uniform();
    double r = std::sqrt(-2 * std::log(u1));
    double g0 = r * std::cos(2 * std::numbers::pi * u2);
    double g1 = r * std::sin(2 * std::numbers::pi * u2);
    double u3 = 1 - uniform(), u4 = uniform();
    double r2 = std::sqrt(-2 * std::log(u3));
    double g2 = r2 * std::cos(2 * std::numbers::pi * u4);
    double g3 = r2 * std::sin(2 * std::numbers::pi * u4);
    complex_t a(g0, g1), b(g2, g3);
    double norm = std::sqrt(std::norm(a) + std::norm(b));
    DenseOperator u = gen_random_unitary(1, 0);
    EXPECT_NEAR(std::abs(u(0, 0) - a / norm), 0, 1e-15);
    EXPECT_NEAR(std::abs(u(1, 0) - b / norm), 0, 1e-15);
}

TEST(gen_random_unitary, caps) {
    EXPECT_THROW(gen_random_unitary(0, 1), ValidationError);
    Limits small;
    small.max_qubits = 2;
    EXPECT_THROW(gen_random_unitary(3, 1, small), SizeLimitError);
}

TEST(gen_random_unitary, coefficient_spread) {
    // A Haar unitary on two qubits has E|u_P|^2 = 1/16 for every P.
    std::vector<double> mean(16, 0);
    const int samples = 400;
    for (int s = 0; s < samples; s++) {
        auto c = pauli_coefficients(gen_random_unitary(2, 10000 + s));
        for (std::size_t k = 0; k < 16; k++) {
            mean[k] += std::norm(c[k]) / samples;
        }
    }
    for (double m : mean) {
        EXPECT_NEAR(m, 1.0 / 16, 0.02);
    }
}

TEST(gen_pauli_channel, examples) {
    SuperOperator id = gen_pauli_channel({{L("I"), 1.0}});
    EXPECT_TRUE(id.matrix().isIdentity());

    SuperOperator uniform = gen_pauli_channel(std::vector<double>{0.25, 0.25, 0.25, 0.25});
    EXPECT_NEAR(entanglement_fidelity(uniform), 0.25, 1e-15);
    Eigen::Matrix2cd rho;
    rho << 0.7, complex_t(0.1, 0.2), complex_t(0.1, -0.2), 0.3;
    EXPECT_LE((uniform.apply(rho) - 0.5 * Eigen::Matrix2cd::Identity()).cwiseAbs().maxCoeff(),
              1e-15);

    SuperOperator zx = gen_pauli_channel({{L("II"), 0.9}, {L("ZX"), 0.1}});
    EXPECT_EQ(zx.dim(), 4u);
    EXPECT_NEAR(entanglement_fidelity(zx), 0.9, 1e-15);
    EXPECT_TRUE(zx.physicality().has_value());
}

TEST(gen_pauli_channel, matches_oracle) {
    std::mt19937_64 rng(3);
    for (std::size_t n = 1; n <= 2; n++) {
        auto e = pt::random_simplex(std::size_t{1} << (2 * n), rng);
        EXPECT_LE((gen_pauli_channel(e).matrix() - pt::oracle_pauli_channel(e, n)).cwiseAbs().maxCoeff(), 1e-14);
    }
}

TEST(gen_pauli_channel, errors) {
    EXPECT_THROW(gen_pauli_channel(std::map<PauliLabel, double>{}), ValidationError);
    EXPECT_THROW(gen_pauli_channel({{L("I"), 0.9}}), ValidationError);
    EXPECT_THROW(gen_pauli_channel({{L("I"), 1.1}, {L("X"), -0.1}}), ValidationError);
    EXPECT_THROW(gen_pauli_channel({{L("I"), 0.5}, {L("XX"), 0.5}}), ValidationError);
    EXPECT_THROW(gen_pauli_channel(std::vector<double>{1, 0, 0}), ValidationError);
    EXPECT_THROW(gen_pauli_channel(std::vector<double>{NAN, 0, 0, 1}), ValidationError);
    EXPECT_NO_THROW(gen_pauli_channel(std::vector<double>{1 - 1e-13, 0, 0, 0}));
}

TEST(average_channel, examples) {
    SuperOperator single = average_channel({{1.0, gen_ez(0.1)}});
    EXPECT_EQ(single.matrix(), lift_unitary(gen_ez(0.1)).matrix());

    SuperOperator deph = average_channel({{0.5, gen_ez(0.1)}, {0.5, gen_ez(-0.1)}});
    double c = std::cos(0.1), s = std::sin(0.1);
    SuperOperator expected = gen_pauli_channel(std::vector<double>{c * c, 0, 0, s * s});
    EXPECT_LE((deph.matrix() - expected.matrix()).cwiseAbs().maxCoeff(), 1e-15);
}

TEST(average_channel, symmetric_ensembles_are_pauli_diagonal) {
    for (double eps : {0.01, 0.1, 0.5}) {
        CoefficientMatrix w = coefficient_matrix(average_channel({{0.5, gen_ez(eps)}, {0.5, gen_ez(-eps)}}));
        Eigen::MatrixXcd off = w.matrix();
        off.diagonal().setZero();
        EXPECT_LE(off.cwiseAbs().maxCoeff(), 1e-12);
    }
    // Twirling a random unitary over the Pauli group.
    DenseOperator u = gen_random_unitary(1, 77);
    std::vector<EnsembleMember> twirl;
    for (const auto &p : pauli_basis(1)) {
        DenseOperator pm = materialize(p);
        twirl.push_back({0.25, pm * u * pm});
    }
    CoefficientMatrix w = coefficient_matrix(average_channel(twirl));
    Eigen::MatrixXcd off = w.matrix();
    off.diagonal().setZero();
    EXPECT_LE(off.cwiseAbs().maxCoeff(), 1e-12);
}

TEST(average_channel, errors) {
    EXPECT_THROW(average_channel({}), ValidationError);
    EXPECT_THROW(average_channel({{0.5, gen_ez(0.1)}}), ValidationError);
    EXPECT_THROW(average_channel({{0.5, gen_ez(0.1)}, {0.5, gen_overrotated_cz(0)}}), DimensionError);
    EXPECT_THROW(average_channel({{1.5, gen_ez(0.1)}, {-0.5, gen_ez(0.2)}}), ValidationError);
    DenseOperator bad(2.0 * Eigen::MatrixXcd::Identity(2, 2));
    EXPECT_THROW(average_channel({{1.0, bad}}), PhysicalityError);
}
