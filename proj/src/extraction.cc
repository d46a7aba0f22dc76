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

#include "paulinoise/extraction.h"

#include <algorithm>
#include <bit>
#include <cmath>
#include <numeric>

#include "paulinoise/errors.h"

namespace paulinoise {

namespace {

std::size_t require_qubits(std::size_t dim, std::size_t cap, std::string_view what) {
    auto n = qubits_for_dim(dim);
    if (!n.has_value()) {
        throw DimensionError(
            std::string(what) + ": dimension " + std::to_string(dim) +
            " is not a power of two; supply a leakage specification for non-qubit spaces.");
    }
    check_qubit_count(*n, cap, what);
    return *n;
}

double checked_leakage(double leakage, std::string_view what) {
    constexpr double slack = 1e-9;
    if (!(leakage >= -slack && leakage <= 1 + slack)) {
        throw PhysicalityError(
            std::string(what) + ": leakage weight " + std::to_string(leakage) + " is outside [0, 1].");
    }
    return std::clamp(leakage, 0.0, 1.0);
}

}  // namespace

double PauliNoiseModel::total_probability() const {
    return std::accumulate(probabilities.begin(), probabilities.end(), 0.0);
}

LeakageSpec::LeakageSpec(std::size_t full_dim, std::vector<std::size_t> comp_indices)
    : full_dim_(full_dim), comp_indices_(std::move(comp_indices)), num_qubits_(0) {
    if (comp_indices_.size() < 2 || !std::has_single_bit(comp_indices_.size())) {
        throw ValidationError(
            "Leakage spec: computational subspace has " + std::to_string(comp_indices_.size()) +
            " indices; the count must be a power of two (at least 2).");
    }
    for (std::size_t k = 0; k < comp_indices_.size(); k++) {
        if (comp_indices_[k] >= full_dim_) {
            throw ValidationError(
                "Leakage spec: index " + std::to_string(comp_indices_[k]) + " is outside [0, " +
                std::to_string(full_dim_) + ").");
        }
        if (k > 0 && comp_indices_[k] <= comp_indices_[k - 1]) {
            throw ValidationError("Leakage spec: indices must be distinct and sorted ascending.");
        }
    }
    num_qubits_ = static_cast<std::size_t>(std::countr_zero(comp_indices_.size()));
}

DenseOperator error_unitary(const DenseOperator &u, const DenseOperator &u0, const ExtractionOptions &opts) {
    if (u.dim() != u0.dim()) {
        throw DimensionError(
            "error_unitary: implementation has dimension " + std::to_string(u.dim()) + " but target has " +
            std::to_string(u0.dim()) + ".");
    }
    if (!opts.allow_nonphysical) {
        require_unitary(u, opts.tol.unitarity, "Implemented gate");
        require_unitary(u0, opts.tol.unitarity, "Target gate");
    }
    return u * u0.adjoint();
}

std::vector<complex_t> pauli_coefficients(
    const DenseOperator &u_err, const ExtractionOptions &opts, std::optional<std::size_t> norm_dim) {
    std::size_t n = require_qubits(u_err.dim(), opts.limits.max_qubits, "pauli_coefficients");
    std::vector<complex_t> out;
    for (const PauliLabel &p : pauli_basis(n, opts.limits)) {
        out.push_back(frobenius_inner(materialize(p), u_err, norm_dim));
    }
    return out;
}

complex_t pauli_coefficient_via_bitstrings(const PauliLabel &p, const StateMap &oracle) {
    std::uint64_t d = std::uint64_t{1} << p.num_qubits();
    auto di = static_cast<Eigen::Index>(d);
    complex_t acc = 0;
    for (std::uint64_t b = 0; b < d; b++) {
        Eigen::VectorXcd psi = Eigen::VectorXcd::Zero(di);
        psi(static_cast<Eigen::Index>(b)) = 1;
        Eigen::VectorXcd evolved = oracle(psi);
        if (evolved.size() != di) {
            throw DimensionError(
                "pauli_coefficient_via_bitstrings: oracle returned a state of length " +
                std::to_string(evolved.size()) + ", expected " + std::to_string(d) + ".");
        }
        // <b| P |psi> = P[b, b ^ x] psi[b ^ x], and P[b, b ^ x] is the
        // amplitude P picks up acting on |b ^ x>.
        std::uint64_t k = b ^ p.flip_mask();
        acc += pauli_image(p, k).amplitude * evolved(static_cast<Eigen::Index>(k));
    }
    return acc / static_cast<double>(d);
}

SuperOperator error_channel(const SuperOperator &u_channel, const DenseOperator &u0, const ExtractionOptions &opts) {
    if (u_channel.dim() != u0.dim()) {
        throw DimensionError(
            "error_channel: channel acts on dimension " + std::to_string(u_channel.dim()) +
            " but target has dimension " + std::to_string(u0.dim()) + ".");
    }
    return compose(u_channel, lift_unitary(u0.adjoint(), opts.tol, opts.allow_nonphysical, opts.limits));
}

CoefficientMatrix coefficient_matrix(const SuperOperator &s, const ExtractionOptions &opts) {
    std::size_t n = require_qubits(s.dim(), opts.limits.max_superop_qubits, "coefficient_matrix");
    auto basis = pauli_basis(n, opts.limits);
    auto count = static_cast<Eigen::Index>(basis.size());
    Eigen::MatrixXcd w(count, count);
    for (Eigen::Index p = 0; p < count; p++) {
        for (Eigen::Index q = 0; q < count; q++) {
            w(p, q) = pauli_pair_coefficient(s, basis[p], basis[q]);
        }
    }
    return CoefficientMatrix(n, std::move(w));
}

std::vector<double> diagonal_weights_via_fidelity(const SuperOperator &s, const ExtractionOptions &opts) {
    std::size_t n = require_qubits(s.dim(), opts.limits.max_superop_qubits, "diagonal_weights_via_fidelity");
    std::uint64_t d = s.dim();
    std::vector<double> out;
    for (const PauliLabel &p : pauli_basis(n, opts.limits)) {
        // F_ent(P^ o s) = E_{a,b} <a| P s(|a><b|) P |b>. With P|b> = beta |b ^ x>
        // and <a|P = alpha <a ^ x| (alpha = amplitude of P on |a ^ x>), the
        // summand is alpha beta s(|a><b|)[a ^ x, b ^ x].
        std::uint64_t x = p.flip_mask();
        complex_t acc = 0;
        for (std::uint64_t a = 0; a < d; a++) {
            complex_t alpha = pauli_image(p, a ^ x).amplitude;
            for (std::uint64_t b = 0; b < d; b++) {
                complex_t beta = pauli_image(p, b).amplitude;
                acc += alpha * beta * s((a ^ x) * d + (b ^ x), a * d + b);
            }
        }
        acc /= static_cast<double>(d * d);
        if (!opts.allow_nonphysical && std::abs(acc.imag()) > opts.tol.realness) {
            throw PhysicalityError(
                "Fidelity-route weight for " + p.str() + " has imaginary part " + std::to_string(acc.imag()) +
                " exceeding tolerance " + std::to_string(opts.tol.realness) + ".");
        }
        out.push_back(acc.real());
    }
    return out;
}

double coherent_residual(const CoefficientMatrix &w) {
    double total = w.matrix().squaredNorm();
    double diag = w.matrix().diagonal().squaredNorm();
    return std::max(0.0, total - diag);
}

PauliNoiseModel nearest_pauli_channel(const CoefficientMatrix &w, double leakage_weight, const ExtractionOptions &opts) {
    Eigen::VectorXcd diag = w.diagonal();
    // Summing only off-diagonal entries avoids cancellation in total - diag.
    double residual = 0;
    for (Eigen::Index p = 0; p < w.matrix().rows(); p++) {
        for (Eigen::Index q = 0; q < w.matrix().cols(); q++) {
            if (p != q) {
                residual += std::norm(w.matrix()(p, q));
            }
        }
    }
    return nearest_pauli_channel(
        std::span<const complex_t>(diag.data(), static_cast<std::size_t>(diag.size())), leakage_weight, residual,
        opts);
}

PauliNoiseModel nearest_pauli_channel(
    std::span<const complex_t> diagonal,
    double leakage_weight,
    double coherent_residual_sq,
    const ExtractionOptions &opts) {
    std::size_t count = diagonal.size();
    if (count < 4 || !std::has_single_bit(count) || (std::countr_zero(count) & 1) != 0) {
        throw DimensionError(
            "nearest_pauli_channel: " + std::to_string(count) + " diagonal weights is not 4^n for any n >= 1.");
    }
    PauliNoiseModel model;
    model.num_qubits = static_cast<std::size_t>(std::countr_zero(count)) / 2;
    model.probabilities.resize(count);
    double mismatch = 0;
    for (std::size_t k = 0; k < count; k++) {
        complex_t wpp = diagonal[k];
        if (!opts.allow_nonphysical) {
            if (std::abs(wpp.imag()) > opts.tol.realness) {
                throw PhysicalityError(
                    "Diagonal weight for " + PauliLabel::from_index(model.num_qubits, k).str() +
                    " has imaginary part " + std::to_string(wpp.imag()) + " exceeding tolerance " +
                    std::to_string(opts.tol.realness) + ".");
            }
            if (wpp.real() < -opts.tol.negative_floor) {
                throw PhysicalityError(
                    "Diagonal weight for " + PauliLabel::from_index(model.num_qubits, k).str() + " is " +
                    std::to_string(wpp.real()) + " < -" + std::to_string(opts.tol.negative_floor) +
                    "; the channel is not physical.");
            }
        }
        double e = std::clamp(wpp.real(), 0.0, 1.0);
        model.probabilities[k] = e;
        mismatch += std::norm(wpp - e);
    }
    model.leakage_weight = checked_leakage(leakage_weight, "nearest_pauli_channel");
    model.diagnostics.identity_prob = model.probabilities[0];
    model.diagnostics.coherent_residual_sq = coherent_residual_sq;
    model.diagnostics.distance_to_source = std::sqrt(coherent_residual_sq + mismatch);
    return model;
}

LeakageProjection leakage_project(
    const DenseOperator &u_err_full, const LeakageSpec &spec, const ExtractionOptions &opts) {
    if (u_err_full.dim() != spec.full_dim()) {
        throw DimensionError(
            "leakage_project: operator dimension " + std::to_string(u_err_full.dim()) +
            " does not match leakage spec full dimension " + std::to_string(spec.full_dim()) + ".");
    }
    auto k = static_cast<Eigen::Index>(spec.comp_dim());
    Eigen::MatrixXcd block(k, k);
    for (Eigen::Index r = 0; r < k; r++) {
        for (Eigen::Index c = 0; c < k; c++) {
            block(r, c) = u_err_full(spec.comp_indices()[r], spec.comp_indices()[c]);
        }
    }
    DenseOperator projected(std::move(block));
    double retained = 0;
    for (complex_t u : pauli_coefficients(projected, opts, spec.comp_dim())) {
        retained += std::norm(u);
    }
    double leakage = checked_leakage(1 - retained, "leakage_project");
    return {std::move(projected), leakage};
}

PauliNoiseModel extract_from_error_unitary(
    const DenseOperator &u_err, double leakage_weight, const ExtractionOptions &opts) {
    auto coeffs = pauli_coefficients(u_err, opts);
    std::vector<complex_t> diag;
    diag.reserve(coeffs.size());
    double sum_sq = 0;
    double sum_fourth = 0;
    for (complex_t u : coeffs) {
        double p = std::norm(u);
        diag.emplace_back(p, 0);
        sum_sq += p;
        sum_fourth += p * p;
    }
    // Lifting gives w_PQ = u_P conj(u_Q), so the off-diagonal mass is
    // (sum |u_P|^2)^2 - sum |u_P|^4.
    double residual = std::max(0.0, sum_sq * sum_sq - sum_fourth);
    return nearest_pauli_channel(diag, leakage_weight, residual, opts);
}

PauliNoiseModel extract_from_error_channel(const SuperOperator &s_err, const ExtractionOptions &opts) {
    CoefficientMatrix w = coefficient_matrix(s_err, opts);
    double retained = w.diagonal().real().sum();
    double leakage = 1 - retained;
    if (opts.allow_nonphysical) {
        leakage = std::clamp(leakage, 0.0, 1.0);
    }
    return nearest_pauli_channel(w, leakage, opts);
}

}  // namespace paulinoise
