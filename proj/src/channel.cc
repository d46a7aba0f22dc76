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

#include "paulinoise/channel.h"

#include <cmath>

#include "paulinoise/errors.h"

namespace paulinoise {

namespace {

using Eigen::Index;

void check_superop_dim(std::size_t dim, const Limits &limits, std::string_view what) {
    auto n = qubits_for_dim(dim);
    if (!n.has_value()) {
        throw DimensionError(std::string(what) + ": dimension " + std::to_string(dim) + " is not a power of two.");
    }
    check_qubit_count(*n, limits.max_superop_qubits, what);
}

void check_same_dim(const SuperOperator &a, const SuperOperator &b, std::string_view what) {
    if (a.dim() != b.dim()) {
        throw DimensionError(
            std::string(what) + ": channel dimensions " + std::to_string(a.dim()) + " and " +
            std::to_string(b.dim()) + " differ.");
    }
}

}  // namespace

SuperOperator::SuperOperator(std::size_t dim, Eigen::MatrixXcd entries) : dim_(dim), entries_(std::move(entries)) {
    auto side = static_cast<Index>(dim * dim);
    if (dim < 2 || entries_.rows() != side || entries_.cols() != side) {
        throw DimensionError(
            "Superoperator for dimension " + std::to_string(dim) + " must be " + std::to_string(side) + "x" +
            std::to_string(side) + ", got " + std::to_string(entries_.rows()) + "x" +
            std::to_string(entries_.cols()) + ".");
    }
    if (!entries_.allFinite()) {
        throw ValidationError("Superoperator contains NaN or infinite entries.");
    }
}

SuperOperator SuperOperator::from_matrix(Eigen::MatrixXcd entries) {
    auto side = static_cast<std::size_t>(entries.rows());
    auto dim = static_cast<std::size_t>(std::llround(std::sqrt(static_cast<double>(side))));
    if (dim * dim != side || entries.rows() != entries.cols()) {
        throw DimensionError(
            "A " + std::to_string(entries.rows()) + "x" + std::to_string(entries.cols()) +
            " matrix is not a superoperator (side must be a perfect square).");
    }
    return SuperOperator(dim, std::move(entries));
}

SuperOperator SuperOperator::identity(std::size_t dim) {
    auto side = static_cast<Index>(dim * dim);
    SuperOperator s(dim, Eigen::MatrixXcd::Identity(side, side));
    s.record_physicality({true, true});
    return s;
}

Eigen::MatrixXcd SuperOperator::apply(const Eigen::MatrixXcd &rho) const {
    if (rho.rows() != static_cast<Index>(dim_) || rho.cols() != static_cast<Index>(dim_)) {
        throw DimensionError("Operator shape does not match channel dimension " + std::to_string(dim_) + ".");
    }
    return devectorize(entries_ * vectorize(rho), dim_);
}

CoefficientMatrix::CoefficientMatrix(std::size_t num_qubits, Eigen::MatrixXcd entries)
    : num_qubits_(num_qubits), entries_(std::move(entries)) {
    auto side = Index{1} << (2 * num_qubits);
    if (num_qubits < 1 || entries_.rows() != side || entries_.cols() != side) {
        throw DimensionError(
            "Coefficient matrix for " + std::to_string(num_qubits) + " qubits must be " + std::to_string(side) +
            "x" + std::to_string(side) + ".");
    }
}

Eigen::VectorXcd vectorize(const Eigen::MatrixXcd &op) {
    Eigen::VectorXcd v(op.rows() * op.cols());
    for (Index a = 0; a < op.rows(); a++) {
        for (Index b = 0; b < op.cols(); b++) {
            v(a * op.cols() + b) = op(a, b);
        }
    }
    return v;
}

Eigen::MatrixXcd devectorize(const Eigen::VectorXcd &vec, std::size_t dim) {
    auto d = static_cast<Index>(dim);
    if (vec.size() != d * d) {
        throw DimensionError(
            "Vector of length " + std::to_string(vec.size()) + " cannot be reshaped to " + std::to_string(dim) +
            "x" + std::to_string(dim) + ".");
    }
    Eigen::MatrixXcd m(d, d);
    for (Index a = 0; a < d; a++) {
        for (Index b = 0; b < d; b++) {
            m(a, b) = vec(a * d + b);
        }
    }
    return m;
}

SuperOperator lift_unitary(const DenseOperator &u, const Tolerances &tol, bool allow_nonunitary, const Limits &limits) {
    if (auto n = qubits_for_dim(u.dim())) {
        check_qubit_count(*n, limits.max_superop_qubits, "lift_unitary");
    }
    if (!allow_nonunitary) {
        require_unitary(u, tol.unitarity, "lift_unitary input");
    }
    SuperOperator s(u.dim(), kron(u.matrix(), u.matrix().conjugate()));
    if (!allow_nonunitary) {
        s.record_physicality({true, true});
    }
    return s;
}

SuperOperator pauli_pair_channel(const PauliLabel &p, const PauliLabel &q) {
    if (p.num_qubits() != q.num_qubits()) {
        throw DimensionError("Pauli pair " + p.str() + ", " + q.str() + " act on different qubit counts.");
    }
    std::size_t d = std::size_t{1} << p.num_qubits();
    Eigen::MatrixXcd m = Eigen::MatrixXcd::Zero(static_cast<Index>(d * d), static_cast<Index>(d * d));
    for (std::uint64_t j = 0; j < d; j++) {
        BasisImage pj = pauli_image(p, j);
        for (std::uint64_t l = 0; l < d; l++) {
            BasisImage ql = pauli_image(q, l);
            m(static_cast<Index>(pj.index * d + ql.index), static_cast<Index>(j * d + l)) =
                pj.amplitude * std::conj(ql.amplitude);
        }
    }
    return SuperOperator(d, std::move(m));
}

SuperOperator channel_from_oracle(const OperatorMap &oracle, std::size_t dim, const Limits &limits) {
    check_superop_dim(dim, limits, "channel_from_oracle");
    auto d = static_cast<Index>(dim);
    Eigen::MatrixXcd m(d * d, d * d);
    for (Index a = 0; a < d; a++) {
        for (Index b = 0; b < d; b++) {
            Eigen::MatrixXcd unit = Eigen::MatrixXcd::Zero(d, d);
            unit(a, b) = 1;
            Eigen::MatrixXcd out = oracle(unit);
            if (out.rows() != d || out.cols() != d) {
                throw DimensionError(
                    "channel_from_oracle: oracle returned a " + std::to_string(out.rows()) + "x" +
                    std::to_string(out.cols()) + " matrix for a " + std::to_string(dim) + "x" +
                    std::to_string(dim) + " input.");
            }
            m.col(a * d + b) = vectorize(out);
        }
    }
    return SuperOperator(dim, std::move(m));
}

SuperOperator compose(const SuperOperator &outer, const SuperOperator &inner) {
    check_same_dim(outer, inner, "compose");
    SuperOperator s(outer.dim(), outer.matrix() * inner.matrix());
    const auto &fo = outer.physicality();
    const auto &fi = inner.physicality();
    if (fo.has_value() && fi.has_value()) {
        s.record_physicality(
            {fo->trace_preserving && fi->trace_preserving,
             fo->hermiticity_preserving && fi->hermiticity_preserving});
    }
    return s;
}

SuperOperator adjoint_channel(const SuperOperator &s) {
    return SuperOperator(s.dim(), s.matrix().adjoint());
}

double entanglement_fidelity(const SuperOperator &s, const Tolerances &tol) {
    std::size_t d = s.dim();
    complex_t acc = 0;
    for (std::size_t a = 0; a < d; a++) {
        for (std::size_t b = 0; b < d; b++) {
            // <a| C(|a><b|) |b> is entry (a, b) of the output operator, i.e.
            // row a*D + b of column a*D + b.
            acc += s(a * d + b, a * d + b);
        }
    }
    acc /= static_cast<double>(d * d);
    if (std::abs(acc.imag()) > tol.realness) {
        throw PhysicalityError(
            "Entanglement fidelity has imaginary part " + std::to_string(acc.imag()) + " exceeding tolerance " +
            std::to_string(tol.realness) + "; the channel is not hermiticity preserving.");
    }
    return acc.real();
}

complex_t frobenius_inner(const SuperOperator &a, const SuperOperator &b) {
    check_same_dim(a, b, "frobenius_inner");
    return a.matrix().conjugate().cwiseProduct(b.matrix()).sum() / static_cast<double>(a.side());
}

double channel_distance(const SuperOperator &a, const SuperOperator &b) {
    check_same_dim(a, b, "channel_distance");
    return std::sqrt((a.matrix() - b.matrix()).squaredNorm() / static_cast<double>(a.side()));
}

complex_t pauli_pair_coefficient(const SuperOperator &s, const PauliLabel &p, const PauliLabel &q) {
    std::size_t d = s.dim();
    if (p.num_qubits() != q.num_qubits() || (std::size_t{1} << p.num_qubits()) != d) {
        throw DimensionError(
            "Pauli pair " + p.str() + ", " + q.str() + " does not match channel dimension " + std::to_string(d) +
            ".");
    }
    // Column (j, l) of P (x) conj(Q) holds a single entry conj(beta_l)
    // alpha_j at row (j ^ xp, l ^ xq), where P|j> = alpha_j |j ^ xp> and
    // Q|l> = beta_l |l ^ xq>.
    complex_t acc = 0;
    for (std::uint64_t j = 0; j < d; j++) {
        BasisImage pj = pauli_image(p, j);
        for (std::uint64_t l = 0; l < d; l++) {
            BasisImage ql = pauli_image(q, l);
            acc += std::conj(pj.amplitude) * ql.amplitude * s(pj.index * d + ql.index, j * d + l);
        }
    }
    return acc / static_cast<double>(d * d);
}

PhysicalityReport check_physicality(const SuperOperator &s, double tol) {
    PhysicalityReport report;
    std::size_t d = s.dim();

    // Trace preservation: sum_a S[(a,a), (c,e)] = delta_ce.
    for (std::size_t c = 0; c < d; c++) {
        for (std::size_t e = 0; e < d; e++) {
            complex_t t = 0;
            for (std::size_t a = 0; a < d; a++) {
                t += s(a * d + a, c * d + e);
            }
            t -= (c == e) ? 1.0 : 0.0;
            report.trace_defect = std::max(report.trace_defect, std::abs(t));
        }
    }

    // Hermiticity preservation: S[(a,b),(c,e)] = conj(S[(b,a),(e,c)]).
    for (std::size_t a = 0; a < d; a++) {
        for (std::size_t b = 0; b < d; b++) {
            for (std::size_t c = 0; c < d; c++) {
                for (std::size_t e = 0; e < d; e++) {
                    complex_t diff = s(a * d + b, c * d + e) - std::conj(s(b * d + a, e * d + c));
                    report.hermiticity_defect = std::max(report.hermiticity_defect, std::abs(diff));
                }
            }
        }
    }

    if (auto n = qubits_for_dim(d)) {
        std::uint64_t count = std::uint64_t{1} << (2 * *n);
        for (std::uint64_t k = 0; k < count; k++) {
            PauliLabel p = PauliLabel::from_index(*n, k);
            report.diagonal_imag_max =
                std::max(report.diagonal_imag_max, std::abs(pauli_pair_coefficient(s, p, p).imag()));
        }
    }

    report.trace_preserving = report.trace_defect <= tol;
    report.hermiticity_preserving = report.hermiticity_defect <= tol;
    report.diagonal_real = report.diagonal_imag_max <= tol;
    return report;
}

}  // namespace paulinoise
