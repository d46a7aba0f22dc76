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

#ifndef PAULINOISE_PAULI_H
#define PAULINOISE_PAULI_H

#include <complex>
#include <compare>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include <Eigen/Dense>

#include "paulinoise/config.h"

namespace paulinoise {

using complex_t = std::complex<double>;

/// A Pauli string over {I, X, Y, Z}.
///
/// Character k acts on qubit k. Qubit 0 is the most significant digit of
/// both the base-4 label index (I=0, X=1, Y=2, Z=3) and the computational
/// basis index, so "XZ" has index 1*4 + 3 = 7 and acts as X (x) Z.
class PauliLabel {
   public:
    /// Longest string whose index still fits in 64 bits.
    static constexpr std::size_t MAX_LENGTH = 31;

    static PauliLabel from_string(std::string_view chars);
    static PauliLabel from_index(std::size_t num_qubits, std::uint64_t index);
    static PauliLabel identity(std::size_t num_qubits);

    std::size_t num_qubits() const { return chars_.size(); }
    std::uint64_t index() const { return index_; }
    const std::string &str() const { return chars_; }
    char at(std::size_t qubit) const { return chars_[qubit]; }
    bool is_identity() const { return index_ == 0; }

    /// Basis-index bits flipped by this Pauli (set for X and Y).
    std::uint64_t flip_mask() const { return flip_mask_; }
    /// Basis-index bits that pick up a sign (set for Y and Z).
    std::uint64_t sign_mask() const { return sign_mask_; }
    std::size_t num_y() const { return num_y_; }

    bool operator==(const PauliLabel &other) const { return chars_ == other.chars_; }
    std::strong_ordering operator<=>(const PauliLabel &other) const;

   private:
    PauliLabel() = default;
    std::string chars_;
    std::uint64_t index_ = 0;
    std::uint64_t flip_mask_ = 0;
    std::uint64_t sign_mask_ = 0;
    std::size_t num_y_ = 0;
};

/// Image of a computational basis state under a Pauli string:
/// P|b> = amplitude * |index>.
struct BasisImage {
    std::uint64_t index;
    complex_t amplitude;
};
BasisImage pauli_image(const PauliLabel &p, std::uint64_t basis_state);

/// Square complex matrix with at least two rows and only finite entries.
class DenseOperator {
   public:
    explicit DenseOperator(Eigen::MatrixXcd entries);
    static DenseOperator identity(std::size_t dim);

    std::size_t dim() const { return static_cast<std::size_t>(entries_.rows()); }
    const Eigen::MatrixXcd &matrix() const { return entries_; }
    complex_t operator()(std::size_t row, std::size_t col) const {
        return entries_(static_cast<Eigen::Index>(row), static_cast<Eigen::Index>(col));
    }

    DenseOperator adjoint() const;
    /// max |(A†A - 1)_ij|.
    double unitarity_defect() const;
    bool is_unitary(double tol) const { return unitarity_defect() <= tol; }

    friend DenseOperator operator*(const DenseOperator &a, const DenseOperator &b);

   private:
    Eigen::MatrixXcd entries_;
};

/// Throws PhysicalityError naming `what` if `op` is not unitary within `tol`.
void require_unitary(const DenseOperator &op, double tol, std::string_view what);

/// log2(dim) if dim is a power of two >= 2.
std::optional<std::size_t> qubits_for_dim(std::size_t dim);

/// Throws SizeLimitError unless 1 <= n <= cap.
void check_qubit_count(std::size_t n, std::size_t cap, std::string_view what);

Eigen::MatrixXcd kron(const Eigen::MatrixXcd &a, const Eigen::MatrixXcd &b);

/// All 4^n Pauli strings in index order, starting with I...I.
std::vector<PauliLabel> pauli_basis(std::size_t n, const Limits &limits = {});

/// Dense 2^n x 2^n matrix of a Pauli string (no global phase; Y = [[0,-i],[i,0]]).
DenseOperator materialize(const PauliLabel &p);

/// Tr(a† b) / norm_dim. norm_dim defaults to the shared dimension.
complex_t frobenius_inner(
    const DenseOperator &a, const DenseOperator &b, std::optional<std::size_t> norm_dim = std::nullopt);

}  // namespace paulinoise

#endif
