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

#include "paulinoise/pauli.h"

#include <bit>
#include <cmath>

#include "paulinoise/errors.h"

namespace paulinoise {

namespace {

constexpr char PAULI_CHARS[4] = {'I', 'X', 'Y', 'Z'};

int pauli_digit(char c) {
    switch (c) {
        case 'I':
            return 0;
        case 'X':
            return 1;
        case 'Y':
            return 2;
        case 'Z':
            return 3;
        default:
            return -1;
    }
}

Eigen::Matrix2cd single_qubit_matrix(char c) {
    const complex_t i{0, 1};
    Eigen::Matrix2cd m;
    switch (c) {
        case 'X':
            m << 0, 1, 1, 0;
            break;
        case 'Y':
            m << 0, -i, i, 0;
            break;
        case 'Z':
            m << 1, 0, 0, -1;
            break;
        default:
            m << 1, 0, 0, 1;
            break;
    }
    return m;
}

}  // namespace

PauliLabel PauliLabel::from_string(std::string_view chars) {
    if (chars.empty()) {
        throw ValidationError("Pauli label must have at least one character.");
    }
    if (chars.size() > MAX_LENGTH) {
        throw ValidationError(
            "Pauli label '" + std::string(chars) + "' is longer than " + std::to_string(MAX_LENGTH) + " qubits.");
    }
    PauliLabel result;
    result.chars_ = std::string(chars);
    std::size_t n = chars.size();
    for (std::size_t k = 0; k < n; k++) {
        int d = pauli_digit(chars[k]);
        if (d < 0) {
            throw ValidationError(
                "Pauli label '" + std::string(chars) + "' contains '" + std::string(1, chars[k]) +
                "'; expected only I, X, Y, Z.");
        }
        result.index_ = result.index_ * 4 + static_cast<std::uint64_t>(d);
        std::uint64_t bit = std::uint64_t{1} << (n - 1 - k);
        if (d == 1 || d == 2) {
            result.flip_mask_ |= bit;
        }
        if (d == 2 || d == 3) {
            result.sign_mask_ |= bit;
        }
        if (d == 2) {
            result.num_y_++;
        }
    }
    return result;
}

PauliLabel PauliLabel::from_index(std::size_t num_qubits, std::uint64_t index) {
    if (num_qubits == 0 || num_qubits > MAX_LENGTH) {
        throw ValidationError("Pauli label length must be in [1, " + std::to_string(MAX_LENGTH) + "].");
    }
    if (index >> (2 * num_qubits) != 0) {
        throw ValidationError(
            "Pauli index " + std::to_string(index) + " out of range for " + std::to_string(num_qubits) + " qubits.");
    }
    std::string chars(num_qubits, 'I');
    for (std::size_t k = num_qubits; k-- > 0;) {
        chars[k] = PAULI_CHARS[index & 3];
        index >>= 2;
    }
    return from_string(chars);
}

PauliLabel PauliLabel::identity(std::size_t num_qubits) {
    return from_index(num_qubits, 0);
}

std::strong_ordering PauliLabel::operator<=>(const PauliLabel &other) const {
    if (auto c = num_qubits() <=> other.num_qubits(); c != 0) {
        return c;
    }
    return index_ <=> other.index_;
}

BasisImage pauli_image(const PauliLabel &p, std::uint64_t basis_state) {
    // Y = iXZ, so P|b> = i^{#Y} (-1)^{popcount(b & sign_mask)} |b ^ flip_mask>.
    static const complex_t I_POWERS[4] = {{1, 0}, {0, 1}, {-1, 0}, {0, -1}};
    complex_t amp = I_POWERS[p.num_y() & 3];
    if (std::popcount(basis_state & p.sign_mask()) & 1) {
        amp = -amp;
    }
    return {basis_state ^ p.flip_mask(), amp};
}

DenseOperator::DenseOperator(Eigen::MatrixXcd entries) : entries_(std::move(entries)) {
    if (entries_.rows() != entries_.cols()) {
        throw DimensionError(
            "Operator must be square, got " + std::to_string(entries_.rows()) + "x" +
            std::to_string(entries_.cols()) + ".");
    }
    if (entries_.rows() < 2) {
        throw DimensionError("Operator dimension must be at least 2, got " + std::to_string(entries_.rows()) + ".");
    }
    if (!entries_.allFinite()) {
        throw ValidationError("Operator contains NaN or infinite entries.");
    }
}

DenseOperator DenseOperator::identity(std::size_t dim) {
    auto d = static_cast<Eigen::Index>(dim);
    return DenseOperator(Eigen::MatrixXcd::Identity(d, d));
}

DenseOperator DenseOperator::adjoint() const {
    return DenseOperator(entries_.adjoint());
}

double DenseOperator::unitarity_defect() const {
    Eigen::MatrixXcd g = entries_.adjoint() * entries_;
    g -= Eigen::MatrixXcd::Identity(g.rows(), g.cols());
    return g.cwiseAbs().maxCoeff();
}

DenseOperator operator*(const DenseOperator &a, const DenseOperator &b) {
    if (a.dim() != b.dim()) {
        throw DimensionError(
            "Cannot multiply operators of dimension " + std::to_string(a.dim()) + " and " +
            std::to_string(b.dim()) + ".");
    }
    return DenseOperator(a.entries_ * b.entries_);
}

void require_unitary(const DenseOperator &op, double tol, std::string_view what) {
    double defect = op.unitarity_defect();
    if (defect > tol) {
        throw PhysicalityError(
            std::string(what) + " is not unitary: max|U†U - 1| = " + std::to_string(defect) + " exceeds tolerance " +
            std::to_string(tol) + ".");
    }
}

std::optional<std::size_t> qubits_for_dim(std::size_t dim) {
    if (dim < 2 || !std::has_single_bit(dim)) {
        return std::nullopt;
    }
    return static_cast<std::size_t>(std::countr_zero(dim));
}

void check_qubit_count(std::size_t n, std::size_t cap, std::string_view what) {
    if (n < 1 || n > cap) {
        throw SizeLimitError(
            std::string(what) + ": qubit count " + std::to_string(n) + " is outside [1, " + std::to_string(cap) +
            "] (configured cap max_qubits=" + std::to_string(cap) + ").");
    }
}

Eigen::MatrixXcd kron(const Eigen::MatrixXcd &a, const Eigen::MatrixXcd &b) {
    Eigen::MatrixXcd out(a.rows() * b.rows(), a.cols() * b.cols());
    for (Eigen::Index r = 0; r < a.rows(); r++) {
        for (Eigen::Index c = 0; c < a.cols(); c++) {
            out.block(r * b.rows(), c * b.cols(), b.rows(), b.cols()) = a(r, c) * b;
        }
    }
    return out;
}

std::vector<PauliLabel> pauli_basis(std::size_t n, const Limits &limits) {
    check_qubit_count(n, limits.max_qubits, "pauli_basis");
    std::uint64_t count = std::uint64_t{1} << (2 * n);
    std::vector<PauliLabel> result;
    result.reserve(count);
    for (std::uint64_t k = 0; k < count; k++) {
        result.push_back(PauliLabel::from_index(n, k));
    }
    return result;
}

DenseOperator materialize(const PauliLabel &p) {
    Eigen::MatrixXcd m = single_qubit_matrix(p.at(0));
    for (std::size_t k = 1; k < p.num_qubits(); k++) {
        m = kron(m, single_qubit_matrix(p.at(k)));
    }
    return DenseOperator(std::move(m));
}

complex_t frobenius_inner(const DenseOperator &a, const DenseOperator &b, std::optional<std::size_t> norm_dim) {
    if (a.dim() != b.dim()) {
        throw DimensionError(
            "Inner product of operators with dimensions " + std::to_string(a.dim()) + " and " +
            std::to_string(b.dim()) + ".");
    }
    std::size_t nd = norm_dim.value_or(a.dim());
    if (nd < 1) {
        throw ValidationError("Inner product normalization must be at least 1.");
    }
    // Tr(a† b) = sum_ij conj(a_ij) b_ij
    complex_t acc = a.matrix().conjugate().cwiseProduct(b.matrix()).sum();
    return acc / static_cast<double>(nd);
}

}  // namespace paulinoise
