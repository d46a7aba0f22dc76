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

#ifndef PAULINOISE_GENERATORS_H
#define PAULINOISE_GENERATORS_H

#include <cstdint>
#include <map>
#include <vector>

#include "paulinoise/channel.h"

namespace paulinoise {

struct EnsembleMember {
    double weight;
    DenseOperator unitary;
};

/// exp(-i eps Z) = diag(e^{-i eps}, e^{+i eps}).
DenseOperator gen_ez(double epsilon);

/// diag(1, 1, 1, -e^{-i theta}): CZ with an excess phase on |11>.
DenseOperator gen_overrotated_cz(double theta);

/// Haar-distributed unitary on n qubits, reproducible across platforms.
///
/// Entries of a 2^n x 2^n matrix are drawn as independent standard complex
/// Gaussians: std::mt19937_64 seeded with `seed` produces 64-bit words,
/// each word w becomes the double (w >> 11) * 2^-53, and pairs of such
/// doubles feed the Box-Muller transform (u1 -> 1 - u1 to avoid log 0).
/// Entries are filled column by column, real part before imaginary part.
/// Columns are then orthonormalized in order by modified Gram-Schmidt,
/// which fixes the phases so that the result is Haar distributed.
DenseOperator gen_random_unitary(std::size_t n, std::uint64_t seed, const Limits &limits = {});

/// sum_P e_P P (x) conj(P). Probabilities must be nonnegative and sum to 1
/// within 1e-12; absent labels have probability 0.
SuperOperator gen_pauli_channel(const std::map<PauliLabel, double> &probabilities, const Limits &limits = {});

/// Same, with probabilities indexed by Pauli label index (length 4^n).
SuperOperator gen_pauli_channel(const std::vector<double> &probabilities, const Limits &limits = {});

/// sum_s weight_s * U_s (x) conj(U_s).
SuperOperator average_channel(
    const std::vector<EnsembleMember> &members, const Tolerances &tol = {}, const Limits &limits = {});

}  // namespace paulinoise

#endif
