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

#ifndef PAULINOISE_CHANNEL_H
#define PAULINOISE_CHANNEL_H

#include <functional>
#include <optional>

#include "paulinoise/pauli.h"

namespace paulinoise {

struct PhysicalityFlags {
    bool trace_preserving = false;
    bool hermiticity_preserving = false;
};

/// Matrix of a linear map on D x D operators, acting on row-major
/// vectorizations: vec(|a><b|) sits at index a*D + b, so the map
/// rho -> A rho B corresponds to kron(A, B^T) and rho -> U rho U† to
/// kron(U, conj(U)).
class SuperOperator {
   public:
    /// `entries` must be (dim^2 x dim^2) and finite.
    SuperOperator(std::size_t dim, Eigen::MatrixXcd entries);
    /// Infers dim from a square matrix whose side is a perfect square.
    static SuperOperator from_matrix(Eigen::MatrixXcd entries);
    static SuperOperator identity(std::size_t dim);

    /// Dimension D of the operators the channel acts on.
    std::size_t dim() const { return dim_; }
    /// Side length D^2 of the matrix.
    std::size_t side() const { return dim_ * dim_; }
    const Eigen::MatrixXcd &matrix() const { return entries_; }
    complex_t operator()(std::size_t row, std::size_t col) const {
        return entries_(static_cast<Eigen::Index>(row), static_cast<Eigen::Index>(col));
    }

    /// Applies the channel to an operator.
    Eigen::MatrixXcd apply(const Eigen::MatrixXcd &rho) const;

    /// Result of the most recent physicality check, if any was recorded.
    const std::optional<PhysicalityFlags> &physicality() const { return flags_; }
    void record_physicality(PhysicalityFlags flags) { flags_ = flags; }

   private:
    std::size_t dim_;
    Eigen::MatrixXcd entries_;
    std::optional<PhysicalityFlags> flags_;
};

/// Coefficients w_PQ of a channel expanded as sum_PQ w_PQ P (x) conj(Q),
/// indexed by Pauli label index.
class CoefficientMatrix {
   public:
    CoefficientMatrix(std::size_t num_qubits, Eigen::MatrixXcd entries);

    std::size_t num_qubits() const { return num_qubits_; }
    std::size_t size() const { return static_cast<std::size_t>(entries_.rows()); }
    const Eigen::MatrixXcd &matrix() const { return entries_; }
    complex_t operator()(std::uint64_t p, std::uint64_t q) const {
        return entries_(static_cast<Eigen::Index>(p), static_cast<Eigen::Index>(q));
    }
    Eigen::VectorXcd diagonal() const { return entries_.diagonal(); }

   private:
    std::size_t num_qubits_;
    Eigen::MatrixXcd entries_;
};

Eigen::VectorXcd vectorize(const Eigen::MatrixXcd &op);
Eigen::MatrixXcd devectorize(const Eigen::VectorXcd &vec, std::size_t dim);

/// U (x) conj(U). Checks unitarity unless `allow_nonunitary`.
SuperOperator lift_unitary(
    const DenseOperator &u, const Tolerances &tol = {}, bool allow_nonunitary = false, const Limits &limits = {});

/// The Pauli-pair basis element P (x) conj(Q), i.e. rho -> P rho Q.
SuperOperator pauli_pair_channel(const PauliLabel &p, const PauliLabel &q);

using OperatorMap = std::function<Eigen::MatrixXcd(const Eigen::MatrixXcd &)>;

/// Builds the superoperator of a linear map by evaluating it on every
/// matrix unit |a><b| and stacking vec(map(|a><b|)) as column a*D + b.
SuperOperator channel_from_oracle(const OperatorMap &oracle, std::size_t dim, const Limits &limits = {});

/// outer after inner.
SuperOperator compose(const SuperOperator &outer, const SuperOperator &inner);

SuperOperator adjoint_channel(const SuperOperator &s);

/// (1/D^2) sum_{a,b} <a| C(|a><b|) |b>. Throws PhysicalityError if the
/// imaginary part exceeds `tol.realness`.
double entanglement_fidelity(const SuperOperator &s, const Tolerances &tol = {});

/// Tr(a† b) / D^2, so the Pauli-pair channels are orthonormal.
complex_t frobenius_inner(const SuperOperator &a, const SuperOperator &b);

/// sqrt(<a - b, a - b>).
double channel_distance(const SuperOperator &a, const SuperOperator &b);

/// Single coefficient w_PQ = <P (x) conj(Q), s>, evaluated from the sparse
/// structure of the basis element.
complex_t pauli_pair_coefficient(const SuperOperator &s, const PauliLabel &p, const PauliLabel &q);

struct PhysicalityReport {
    bool trace_preserving = false;
    bool hermiticity_preserving = false;
    /// Diagonal Pauli-pair weights are real. Always true when dim is not a
    /// power of two (no Pauli basis to check against).
    bool diagonal_real = false;
    double trace_defect = 0;
    double hermiticity_defect = 0;
    double diagonal_imag_max = 0;

    bool ok() const { return trace_preserving && hermiticity_preserving && diagonal_real; }
    PhysicalityFlags flags() const { return {trace_preserving, hermiticity_preserving}; }
};

PhysicalityReport check_physicality(const SuperOperator &s, double tol);

}  // namespace paulinoise

#endif
