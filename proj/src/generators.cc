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

#include <bit>
#include <cmath>
#include <numbers>
#include <random>

#include "paulinoise/errors.h"

namespace paulinoise {

namespace {

constexpr double SIMPLEX_TOL = 1e-12;

class GaussianStream {
   public:
    explicit GaussianStream(std::uint64_t seed) : rng_(seed) {}

    double uniform() { return static_cast<double>(rng_() >> 11) * 0x1.0p-53; }

    double next() {
        if (has_spare_) {
            has_spare_ = false;
            return spare_;
        }
        double u1 = 1.0 - uniform();
        double u2 = uniform();
        double r = std::sqrt(-2.0 * std::log(u1));
        double t = 2.0 * std::numbers::pi * u2;
        spare_ = r * std::sin(t);
        has_spare_ = true;
        return r * std::cos(t);
    }

   private:
    std::mt19937_64 rng_;
    double spare_ = 0;
    bool has_spare_ = false;
};

void check_simplex(const std::vector<double> &probs, std::string_view what) {
    double total = 0;
    for (double p : probs) {
        if (!std::isfinite(p) || p < 0) {
            throw ValidationError(std::string(what) + ": probabilities must be finite and nonnegative.");
        }
        total += p;
    }
    if (std::abs(total - 1) > SIMPLEX_TOL) {
        throw ValidationError(
            std::string(what) + ": probabilities sum to " + std::to_string(total) + ", expected 1 within 1e-12.");
    }
}

}  // namespace

DenseOperator gen_ez(double epsilon) {
    if (!std::isfinite(epsilon)) {
        throw ValidationError("gen_ez: epsilon must be finite.");
    }
    Eigen::MatrixXcd m = Eigen::MatrixXcd::Zero(2, 2);
    m(0, 0) = std::polar(1.0, -epsilon);
    m(1, 1) = std::polar(1.0, epsilon);
    return DenseOperator(std::move(m));
}

DenseOperator gen_overrotated_cz(double theta) {
    if (!std::isfinite(theta)) {
        throw ValidationError("gen_overrotated_cz: theta must be finite.");
    }
    Eigen::MatrixXcd m = Eigen::MatrixXcd::Identity(4, 4);
    m(3, 3) = -std::polar(1.0, -theta);
    return DenseOperator(std::move(m));
}

DenseOperator gen_random_unitary(std::size_t n, std::uint64_t seed, const Limits &limits) {
    check_qubit_count(n, limits.max_qubits, "gen_random_unitary");
    auto d = Eigen::Index{1} << n;
    GaussianStream gauss(seed);
    Eigen::MatrixXcd m(d, d);
    for (Eigen::Index c = 0; c < d; c++) {
        for (Eigen::Index r = 0; r < d; r++) {
            double re = gauss.next();
            double im = gauss.next();
            m(r, c) = complex_t(re, im) / std::numbers::sqrt2;
        }
    }
    for (Eigen::Index c = 0; c < d; c++) {
        for (Eigen::Index k = 0; k < c; k++) {
            complex_t proj = m.col(k).dot(m.col(c));
            m.col(c) -= proj * m.col(k);
        }
        m.col(c) /= m.col(c).norm();
    }
    return DenseOperator(std::move(m));
}

SuperOperator gen_pauli_channel(const std::map<PauliLabel, double> &probabilities, const Limits &limits) {
    if (probabilities.empty()) {
        throw ValidationError("gen_pauli_channel: no probabilities given.");
    }
    std::size_t n = probabilities.begin()->first.num_qubits();
    check_qubit_count(n, limits.max_superop_qubits, "gen_pauli_channel");
    std::vector<double> dense(std::size_t{1} << (2 * n), 0.0);
    for (const auto &[label, p] : probabilities) {
        if (label.num_qubits() != n) {
            throw ValidationError("gen_pauli_channel: labels have mixed lengths (" + label.str() + ").");
        }
        dense[label.index()] = p;
    }
    return gen_pauli_channel(dense, limits);
}

SuperOperator gen_pauli_channel(const std::vector<double> &probabilities, const Limits &limits) {
    std::size_t count = probabilities.size();
    if (count < 4 || !std::has_single_bit(count) || (std::countr_zero(count) & 1) != 0) {
        throw ValidationError("gen_pauli_channel: expected 4^n probabilities, got " + std::to_string(count) + ".");
    }
    std::size_t n = static_cast<std::size_t>(std::countr_zero(count)) / 2;
    check_qubit_count(n, limits.max_superop_qubits, "gen_pauli_channel");
    check_simplex(probabilities, "gen_pauli_channel");

    std::uint64_t d = std::uint64_t{1} << n;
    auto side = static_cast<Eigen::Index>(d * d);
    Eigen::MatrixXcd m = Eigen::MatrixXcd::Zero(side, side);
    for (std::uint64_t k = 0; k < count; k++) {
        double e = probabilities[k];
        if (e == 0) {
            continue;
        }
        PauliLabel p = PauliLabel::from_index(n, k);
        for (std::uint64_t j = 0; j < d; j++) {
            BasisImage pj = pauli_image(p, j);
            for (std::uint64_t l = 0; l < d; l++) {
                BasisImage pl = pauli_image(p, l);
                m(static_cast<Eigen::Index>(pj.index * d + pl.index), static_cast<Eigen::Index>(j * d + l)) +=
                    e * pj.amplitude * std::conj(pl.amplitude);
            }
        }
    }
    SuperOperator s(d, std::move(m));
    s.record_physicality({true, true});
    return s;
}

SuperOperator average_channel(const std::vector<EnsembleMember> &members, const Tolerances &tol, const Limits &limits) {
    if (members.empty()) {
        throw ValidationError("average_channel: ensemble is empty.");
    }
    std::vector<double> weights;
    for (const auto &m : members) {
        weights.push_back(m.weight);
        if (m.unitary.dim() != members.front().unitary.dim()) {
            throw DimensionError("average_channel: ensemble members have different dimensions.");
        }
    }
    check_simplex(weights, "average_channel");
    std::size_t dim = members.front().unitary.dim();
    auto side = static_cast<Eigen::Index>(dim * dim);
    Eigen::MatrixXcd acc = Eigen::MatrixXcd::Zero(side, side);
    for (const auto &m : members) {
        acc += m.weight * lift_unitary(m.unitary, tol, false, limits).matrix();
    }
    SuperOperator s(dim, std::move(acc));
    s.record_physicality({true, true});
    return s;
}

}  // namespace paulinoise
