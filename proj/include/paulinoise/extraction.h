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

#ifndef PAULINOISE_EXTRACTION_H
#define PAULINOISE_EXTRACTION_H

#include <functional>
#include <span>
#include <vector>

#include "paulinoise/channel.h"

namespace paulinoise {

struct ExtractionOptions {
    Tolerances tol;
    Limits limits;
    /// Admit non-unitary, non-trace-preserving or non-CP inputs. Negative
    /// Pauli weights are then clamped instead of rejected and imaginary
    /// residues are dropped instead of rejected.
    bool allow_nonphysical = false;
};

struct NoiseDiagnostics {
    /// e_{I...I}.
    double identity_prob = 0;
    /// sum_{P != Q} |w_PQ|^2, the part of the squared distance no Pauli
    /// channel can remove.
    double coherent_residual_sq = 0;
    /// Frobenius distance from the source channel to the extracted model.
    double distance_to_source = 0;
};

/// Probabilities e_P of a Pauli channel, indexed by PauliLabel::index().
struct PauliNoiseModel {
    std::size_t num_qubits = 0;
    std::vector<double> probabilities;
    double leakage_weight = 0;
    NoiseDiagnostics diagnostics;

    double probability(const PauliLabel &p) const { return probabilities.at(p.index()); }
    double total_probability() const;
};

/// Computational subspace of a larger Hilbert space.
class LeakageSpec {
   public:
    /// Indices must be distinct, sorted, inside [0, full_dim), and a power
    /// of two (at least 2) in number.
    LeakageSpec(std::size_t full_dim, std::vector<std::size_t> comp_indices);

    std::size_t full_dim() const { return full_dim_; }
    const std::vector<std::size_t> &comp_indices() const { return comp_indices_; }
    std::size_t comp_dim() const { return comp_indices_.size(); }
    std::size_t num_qubits() const { return num_qubits_; }

   private:
    std::size_t full_dim_;
    std::vector<std::size_t> comp_indices_;
    std::size_t num_qubits_;
};

struct LeakageProjection {
    DenseOperator block;
    double leakage_weight;
};

/// U U0†.
DenseOperator error_unitary(const DenseOperator &u, const DenseOperator &u0, const ExtractionOptions &opts = {});

/// u_P = <P, U_err> for every Pauli string, indexed by label index.
/// `norm_dim` overrides the inner-product normalization.
std::vector<complex_t> pauli_coefficients(
    const DenseOperator &u_err, const ExtractionOptions &opts = {}, std::optional<std::size_t> norm_dim = {});

using StateMap = std::function<Eigen::VectorXcd(const Eigen::VectorXcd &)>;

/// u_P as the average over bitstrings b of <b| P U_err |b>, using only
/// black-box state evolution under U_err.
complex_t pauli_coefficient_via_bitstrings(const PauliLabel &p, const StateMap &oracle);

/// U_channel composed after the inverse of the target gate.
SuperOperator error_channel(
    const SuperOperator &u_channel, const DenseOperator &u0, const ExtractionOptions &opts = {});

/// w_PQ = <P (x) conj(Q), s> for all pairs.
CoefficientMatrix coefficient_matrix(const SuperOperator &s, const ExtractionOptions &opts = {});

/// w_PP = F_ent((P (x) conj(P)) o s) for every P, without forming the full
/// coefficient matrix.
std::vector<double> diagonal_weights_via_fidelity(const SuperOperator &s, const ExtractionOptions &opts = {});

/// sum_{P != Q} |w_PQ|^2.
double coherent_residual(const CoefficientMatrix &w);

/// Closest Pauli channel given the full coefficient matrix.
PauliNoiseModel nearest_pauli_channel(
    const CoefficientMatrix &w, double leakage_weight, const ExtractionOptions &opts = {});

/// Closest Pauli channel given only the diagonal weights. The caller
/// supplies the off-diagonal mass so the distance diagnostic is exact.
PauliNoiseModel nearest_pauli_channel(
    std::span<const complex_t> diagonal,
    double leakage_weight,
    double coherent_residual_sq,
    const ExtractionOptions &opts = {});

/// Restricts an error unitary on the full space to its computational
/// block and reports the weight lost outside it.
LeakageProjection leakage_project(
    const DenseOperator &u_err_full, const LeakageSpec &spec, const ExtractionOptions &opts = {});

/// Unitary route end to end: coefficients, |u_P|^2, diagnostics.
/// `leakage_weight` should be 0 unless `u_err` is a projected block.
PauliNoiseModel extract_from_error_unitary(
    const DenseOperator &u_err, double leakage_weight = 0, const ExtractionOptions &opts = {});

/// Channel route end to end. Leakage is taken as 1 - sum_P w_PP.
PauliNoiseModel extract_from_error_channel(const SuperOperator &s_err, const ExtractionOptions &opts = {});

}  // namespace paulinoise

#endif
