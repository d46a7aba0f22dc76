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

#ifndef PAULINOISE_CONFIG_H
#define PAULINOISE_CONFIG_H

#include <cstddef>

namespace paulinoise {

inline constexpr const char *TOOL_VERSION = "0.1.0";

/// Numerical tolerances shared by all modules.
struct Tolerances {
    /// ‖A†A − 1‖_max bound for operators flagged unitary; also used for
    /// hermiticity and trace-preservation checks.
    double unitarity = 1e-9;
    /// Largest imaginary residue accepted on quantities that must be real
    /// (fidelities, diagonal Pauli weights).
    double realness = 1e-9;
    /// Pauli weights in [-negative_floor, 0) are clamped to zero; anything
    /// lower is rejected as non-physical.
    double negative_floor = 1e-6;
};

/// Resource guardrails.
struct Limits {
    /// Cap on qubit count for Pauli enumeration and dense operators.
    std::size_t max_qubits = 6;
    /// Cap on qubit count for anything that materializes a 4^n x 4^n matrix.
    std::size_t max_superop_qubits = 5;
};

}  // namespace paulinoise

#endif
