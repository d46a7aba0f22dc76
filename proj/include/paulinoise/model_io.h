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

#ifndef PAULINOISE_MODEL_IO_H
#define PAULINOISE_MODEL_IO_H

#include <filesystem>
#include <map>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "paulinoise/extraction.h"

namespace paulinoise {

inline constexpr int FORMAT_VERSION = 1;
inline constexpr double DEFAULT_PROBABILITY_FLOOR = 1e-12;

using MetaMap = std::map<std::string, std::string>;

/// Contents of a matrix file: an operator (dim x dim entries) or a
/// superoperator (dim^2 x dim^2 entries).
struct MatrixDocument {
    std::variant<DenseOperator, SuperOperator> value;
    MetaMap meta;

    bool is_operator() const { return std::holds_alternative<DenseOperator>(value); }
};

/// Formats a double with 17 significant digits.
std::string format_double(double v);

std::string format_matrix_document(const DenseOperator &op, const MetaMap &meta = {});
std::string format_matrix_document(const SuperOperator &s, const MetaMap &meta = {});
/// Raw D^2 x D^2 matrix written with kind "superoperator" (used to dump
/// coefficient matrices, which share that shape).
std::string format_superoperator_matrix(std::size_t dim, const Eigen::MatrixXcd &m, const MetaMap &meta = {});

/// `source` names the document in error messages.
MatrixDocument parse_matrix_document(std::string_view text, std::string_view source = "<input>");

MatrixDocument read_matrix_file(const std::filesystem::path &path);
void write_text_file(const std::filesystem::path &path, std::string_view text);

struct Provenance {
    std::vector<std::string> inputs;
    /// Resolved settings (tolerances, caps, floor, ...), echoed verbatim.
    MetaMap settings;
    std::string tool_version;
};

struct ModelDocument {
    PauliNoiseModel model;
    /// Probability mass of entries omitted for being below the floor.
    double truncated_weight = 0;
    Provenance provenance;
};

/// Serializes a model. Entries are sorted by descending probability, then
/// ascending label index; entries below `floor` are omitted and their mass
/// reported as truncated_weight. Throws ValidationError on an invalid model.
std::string format_model(
    const PauliNoiseModel &model, const Provenance &provenance = {}, double floor = DEFAULT_PROBABILITY_FLOOR);

ModelDocument parse_model(std::string_view text, std::string_view source = "<input>");

void write_model(
    const PauliNoiseModel &model,
    const std::filesystem::path &path,
    const Provenance &provenance = {},
    double floor = DEFAULT_PROBABILITY_FLOOR);

ModelDocument read_model(const std::filesystem::path &path);

/// Exports the non-identity part of a model as a CORRELATED_ERROR /
/// ELSE_CORRELATED_ERROR chain. The k-th instruction carries
/// p_k / (1 - sum_{j<k} p_j) so that the chain reproduces the unconditional
/// probabilities. The identity is never emitted; zero-probability Paulis
/// are skipped. Returns an empty string when there is nothing to emit.
std::string export_stim_chain(const PauliNoiseModel &model);

struct ChainInstruction {
    PauliLabel pauli;
    double conditional_probability;
};

/// Parses the text produced by export_stim_chain back into instructions.
std::vector<ChainInstruction> parse_stim_chain(std::string_view text, std::size_t num_qubits);

}  // namespace paulinoise

#endif
