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

#include "paulinoise/model_io.h"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <set>
#include <sstream>

#include "json.hpp"
#include "paulinoise/config.h"
#include "paulinoise/errors.h"

namespace paulinoise {

namespace {

using nlohmann::json;

constexpr double SUM_TOL = 1e-9;

std::string quoted(std::string_view s) {
    return json(std::string(s)).dump();
}

void append_meta(std::ostringstream &out, const MetaMap &meta, const char *indent) {
    if (meta.empty()) {
        out << "{}";
        return;
    }
    out << "{\n";
    bool first = true;
    for (const auto &[k, v] : meta) {
        if (!first) {
            out << ",\n";
        }
        first = false;
        out << indent << "  " << quoted(k) << ": " << quoted(v);
    }
    out << "\n" << indent << "}";
}

std::string format_matrix(std::string_view kind, std::size_t dim, const Eigen::MatrixXcd &m, const MetaMap &meta) {
    std::ostringstream out;
    out << "{\n";
    out << "  \"format_version\": " << FORMAT_VERSION << ",\n";
    out << "  \"kind\": " << quoted(kind) << ",\n";
    out << "  \"dim\": " << dim << ",\n";
    out << "  \"meta\": ";
    append_meta(out, meta, "  ");
    out << ",\n";
    out << "  \"data\": [";
    for (Eigen::Index r = 0; r < m.rows(); r++) {
        for (Eigen::Index c = 0; c < m.cols(); c++) {
            out << ((r == 0 && c == 0) ? "\n" : ",\n");
            out << "    [" << format_double(m(r, c).real()) << ", " << format_double(m(r, c).imag()) << "]";
        }
    }
    out << "\n  ]\n}\n";
    return out.str();
}

json parse_json(std::string_view text, std::string_view source) {
    try {
        return json::parse(text.begin(), text.end());
    } catch (const json::parse_error &e) {
        std::size_t line = 1;
        std::size_t col = 1;
        for (std::size_t k = 0; k + 1 < e.byte && k < text.size(); k++) {
            if (text[k] == '\n') {
                line++;
                col = 1;
            } else {
                col++;
            }
        }
        throw ParseError(
            std::string(source) + ":" + std::to_string(line) + ":" + std::to_string(col) + ": malformed JSON (" +
            e.what() + ").");
    }
}

[[noreturn]] void field_error(std::string_view source, std::string_view field, std::string_view problem) {
    throw ParseError(std::string(source) + ": field '" + std::string(field) + "': " + std::string(problem));
}

const json &require_field(const json &obj, std::string_view field, std::string_view source) {
    if (!obj.is_object()) {
        throw ParseError(std::string(source) + ": expected a JSON object at the top level.");
    }
    auto it = obj.find(std::string(field));
    if (it == obj.end()) {
        field_error(source, field, "missing.");
    }
    return *it;
}

double require_number(const json &v, std::string_view field, std::string_view source) {
    if (!v.is_number()) {
        field_error(source, field, "expected a number.");
    }
    double d = v.get<double>();
    if (!std::isfinite(d)) {
        field_error(source, field, "value is not finite.");
    }
    return d;
}

std::size_t require_size(const json &v, std::string_view field, std::string_view source) {
    if (!v.is_number_integer() || v.get<long long>() < 0) {
        field_error(source, field, "expected a nonnegative integer.");
    }
    return v.get<std::size_t>();
}

std::string require_string(const json &v, std::string_view field, std::string_view source) {
    if (!v.is_string()) {
        field_error(source, field, "expected a string.");
    }
    return v.get<std::string>();
}

void check_version(const json &doc, std::string_view source) {
    const json &v = require_field(doc, "format_version", source);
    if (!v.is_number_integer() || v.get<int>() != FORMAT_VERSION) {
        field_error(source, "format_version", "unsupported version (expected " + std::to_string(FORMAT_VERSION) + ").");
    }
}

MetaMap parse_string_map(const json &v, std::string_view field, std::string_view source) {
    if (!v.is_object()) {
        field_error(source, field, "expected an object of strings.");
    }
    MetaMap out;
    for (const auto &[k, val] : v.items()) {
        out[k] = require_string(val, std::string(field) + "." + k, source);
    }
    return out;
}

struct SortedEntry {
    PauliLabel label;
    double probability;
};

}  // namespace

std::string format_double(double v) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    return buf;
}

std::string format_matrix_document(const DenseOperator &op, const MetaMap &meta) {
    return format_matrix("operator", op.dim(), op.matrix(), meta);
}

std::string format_matrix_document(const SuperOperator &s, const MetaMap &meta) {
    return format_matrix("superoperator", s.dim(), s.matrix(), meta);
}

std::string format_superoperator_matrix(std::size_t dim, const Eigen::MatrixXcd &m, const MetaMap &meta) {
    return format_matrix_document(SuperOperator(dim, m), meta);
}

MatrixDocument parse_matrix_document(std::string_view text, std::string_view source) {
    json doc = parse_json(text, source);
    check_version(doc, source);
    std::string kind = require_string(require_field(doc, "kind", source), "kind", source);
    if (kind != "operator" && kind != "superoperator") {
        field_error(source, "kind", "expected 'operator' or 'superoperator', got '" + kind + "'.");
    }
    std::size_t dim = require_size(require_field(doc, "dim", source), "dim", source);
    if (dim < 2 || dim > 4096) {
        field_error(source, "dim", "must be in [2, 4096], got " + std::to_string(dim) + ".");
    }
    MetaMap meta;
    if (doc.contains("meta")) {
        meta = parse_string_map(doc["meta"], "meta", source);
    }
    const json &data = require_field(doc, "data", source);
    if (!data.is_array()) {
        field_error(source, "data", "expected an array of [re, im] pairs.");
    }
    std::size_t side = kind == "operator" ? dim : dim * dim;
    if (data.size() != side * side) {
        field_error(
            source, "data",
            "has " + std::to_string(data.size()) + " entries but kind=" + kind + " with dim=" + std::to_string(dim) +
                " requires " + std::to_string(side * side) + ".");
    }
    auto s = static_cast<Eigen::Index>(side);
    Eigen::MatrixXcd m(s, s);
    for (std::size_t k = 0; k < data.size(); k++) {
        const json &pair = data[k];
        std::string name = "data[" + std::to_string(k) + "]";
        if (!pair.is_array() || pair.size() != 2) {
            field_error(source, name, "expected a [re, im] pair.");
        }
        double re = require_number(pair[0], name, source);
        double im = require_number(pair[1], name, source);
        m(static_cast<Eigen::Index>(k / side), static_cast<Eigen::Index>(k % side)) = complex_t(re, im);
    }
    if (kind == "operator") {
        return {DenseOperator(std::move(m)), std::move(meta)};
    }
    return {SuperOperator(dim, std::move(m)), std::move(meta)};
}

MatrixDocument read_matrix_file(const std::filesystem::path &path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        throw ValidationError("Cannot open matrix file '" + path.string() + "'.");
    }
    std::stringstream buf;
    buf << in.rdbuf();
    return parse_matrix_document(buf.str(), path.string());
}

void write_text_file(const std::filesystem::path &path, std::string_view text) {
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out) {
        throw ValidationError("Cannot open '" + path.string() + "' for writing.");
    }
    out << text;
    if (!out) {
        throw ValidationError("Failed writing '" + path.string() + "'.");
    }
}

std::string format_model(const PauliNoiseModel &model, const Provenance &provenance, double floor) {
    std::size_t count = std::size_t{1} << (2 * model.num_qubits);
    if (model.num_qubits < 1 || model.num_qubits > PauliLabel::MAX_LENGTH || model.probabilities.size() != count) {
        throw ValidationError("format_model: probability vector does not match the qubit count.");
    }
    if (!(floor >= 0)) {
        throw ValidationError("format_model: probability floor must be nonnegative.");
    }
    std::vector<SortedEntry> kept;
    double truncated = 0;
    double total = model.leakage_weight;
    for (std::size_t k = 0; k < count; k++) {
        double p = model.probabilities[k];
        if (!(p >= 0 && p <= 1)) {
            throw ValidationError(
                "format_model: probability of " + PauliLabel::from_index(model.num_qubits, k).str() + " is " +
                format_double(p) + ", outside [0, 1].");
        }
        total += p;
        if (p < floor || p == 0) {
            truncated += p;
        } else {
            kept.push_back({PauliLabel::from_index(model.num_qubits, k), p});
        }
    }
    bool nonphysical = provenance.settings.contains("allow_nonphysical") &&
                       provenance.settings.at("allow_nonphysical") == "true";
    if (!nonphysical && std::abs(total - 1) > SUM_TOL) {
        throw ValidationError(
            "format_model: probabilities plus leakage sum to " + format_double(total) + ", expected 1 within 1e-9.");
    }
    std::stable_sort(kept.begin(), kept.end(), [](const SortedEntry &a, const SortedEntry &b) {
        if (a.probability != b.probability) {
            return a.probability > b.probability;
        }
        return a.label.index() < b.label.index();
    });

    std::ostringstream out;
    out << "{\n";
    out << "  \"format_version\": " << FORMAT_VERSION << ",\n";
    out << "  \"kind\": \"pauli_noise_model\",\n";
    out << "  \"num_qubits\": " << model.num_qubits << ",\n";
    out << "  \"entries\": [";
    for (std::size_t k = 0; k < kept.size(); k++) {
        out << (k == 0 ? "\n" : ",\n");
        out << "    {\"label\": " << quoted(kept[k].label.str())
            << ", \"probability\": " << format_double(kept[k].probability) << "}";
    }
    out << (kept.empty() ? "],\n" : "\n  ],\n");
    out << "  \"leakage_weight\": " << format_double(model.leakage_weight) << ",\n";
    out << "  \"diagnostics\": {\n";
    out << "    \"identity_prob\": " << format_double(model.diagnostics.identity_prob) << ",\n";
    out << "    \"coherent_residual_sq\": " << format_double(model.diagnostics.coherent_residual_sq) << ",\n";
    out << "    \"distance_to_source\": " << format_double(model.diagnostics.distance_to_source) << ",\n";
    out << "    \"truncated_weight\": " << format_double(truncated) << "\n";
    out << "  },\n";
    out << "  \"provenance\": {\n";
    out << "    \"tool_version\": "
        << quoted(provenance.tool_version.empty() ? std::string(TOOL_VERSION) : provenance.tool_version) << ",\n";
    out << "    \"inputs\": [";
    for (std::size_t k = 0; k < provenance.inputs.size(); k++) {
        out << (k == 0 ? "" : ", ") << quoted(provenance.inputs[k]);
    }
    out << "],\n";
    out << "    \"settings\": ";
    append_meta(out, provenance.settings, "    ");
    out << "\n  }\n}\n";
    return out.str();
}

ModelDocument parse_model(std::string_view text, std::string_view source) {
    json doc = parse_json(text, source);
    check_version(doc, source);
    std::string kind = require_string(require_field(doc, "kind", source), "kind", source);
    if (kind != "pauli_noise_model") {
        field_error(source, "kind", "expected 'pauli_noise_model', got '" + kind + "'.");
    }
    std::size_t n = require_size(require_field(doc, "num_qubits", source), "num_qubits", source);
    if (n < 1 || n > 12) {
        field_error(source, "num_qubits", "must be in [1, 12].");
    }

    ModelDocument out;
    out.model.num_qubits = n;
    out.model.probabilities.assign(std::size_t{1} << (2 * n), 0.0);

    const json &entries = require_field(doc, "entries", source);
    if (!entries.is_array()) {
        field_error(source, "entries", "expected an array.");
    }
    std::set<std::uint64_t> seen;
    double total = 0;
    for (std::size_t k = 0; k < entries.size(); k++) {
        std::string name = "entries[" + std::to_string(k) + "]";
        const json &e = entries[k];
        std::string label_text = require_string(require_field(e, "label", source), name + ".label", source);
        double p = require_number(require_field(e, "probability", source), name + ".probability", source);
        PauliLabel label = PauliLabel::identity(1);
        try {
            label = PauliLabel::from_string(label_text);
        } catch (const ValidationError &err) {
            field_error(source, name + ".label", err.what());
        }
        if (label.num_qubits() != n) {
            field_error(source, name + ".label", "'" + label_text + "' does not have num_qubits characters.");
        }
        if (!seen.insert(label.index()).second) {
            field_error(source, name + ".label", "duplicate label '" + label_text + "'.");
        }
        if (p < 0 || p > 1) {
            field_error(source, name + ".probability", "must be in [0, 1].");
        }
        out.model.probabilities[label.index()] = p;
        total += p;
    }

    out.model.leakage_weight = require_number(require_field(doc, "leakage_weight", source), "leakage_weight", source);
    if (out.model.leakage_weight < 0 || out.model.leakage_weight > 1) {
        field_error(source, "leakage_weight", "must be in [0, 1].");
    }
    const json &diag = require_field(doc, "diagnostics", source);
    out.model.diagnostics.identity_prob =
        require_number(require_field(diag, "identity_prob", source), "diagnostics.identity_prob", source);
    out.model.diagnostics.coherent_residual_sq = require_number(
        require_field(diag, "coherent_residual_sq", source), "diagnostics.coherent_residual_sq", source);
    out.model.diagnostics.distance_to_source =
        require_number(require_field(diag, "distance_to_source", source), "diagnostics.distance_to_source", source);
    out.truncated_weight =
        require_number(require_field(diag, "truncated_weight", source), "diagnostics.truncated_weight", source);

    const json &prov = require_field(doc, "provenance", source);
    out.provenance.tool_version =
        require_string(require_field(prov, "tool_version", source), "provenance.tool_version", source);
    const json &inputs = require_field(prov, "inputs", source);
    if (!inputs.is_array()) {
        field_error(source, "provenance.inputs", "expected an array of strings.");
    }
    for (const json &i : inputs) {
        out.provenance.inputs.push_back(require_string(i, "provenance.inputs", source));
    }
    out.provenance.settings = parse_string_map(require_field(prov, "settings", source), "provenance.settings", source);

    bool nonphysical = out.provenance.settings.contains("allow_nonphysical") &&
                       out.provenance.settings.at("allow_nonphysical") == "true";
    double sum = total + out.model.leakage_weight + out.truncated_weight;
    if (!nonphysical && std::abs(sum - 1) > SUM_TOL) {
        throw ValidationError(
            std::string(source) + ": probabilities + leakage_weight + truncated_weight = " + format_double(sum) +
            ", expected 1 within 1e-9.");
    }
    return out;
}

void write_model(
    const PauliNoiseModel &model, const std::filesystem::path &path, const Provenance &provenance, double floor) {
    write_text_file(path, format_model(model, provenance, floor));
}

ModelDocument read_model(const std::filesystem::path &path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        throw ValidationError("Cannot open model file '" + path.string() + "'.");
    }
    std::stringstream buf;
    buf << in.rdbuf();
    return parse_model(buf.str(), path.string());
}

std::string export_stim_chain(const PauliNoiseModel &model) {
    std::ostringstream out;
    double prefix = 0;
    bool first = true;
    for (std::size_t k = 1; k < model.probabilities.size(); k++) {
        double p = model.probabilities[k];
        if (p <= 0) {
            continue;
        }
        double remaining = 1 - prefix;
        double conditional = remaining <= 1e-15 ? 1.0 : std::clamp(p / remaining, 0.0, 1.0);
        prefix += p;

        PauliLabel label = PauliLabel::from_index(model.num_qubits, k);
        out << (first ? "CORRELATED_ERROR(" : "ELSE_CORRELATED_ERROR(") << format_double(conditional) << ")";
        for (std::size_t q = 0; q < label.num_qubits(); q++) {
            if (label.at(q) != 'I') {
                out << ' ' << label.at(q) << q;
            }
        }
        out << '\n';
        first = false;
    }
    return out.str();
}

std::vector<ChainInstruction> parse_stim_chain(std::string_view text, std::size_t num_qubits) {
    std::vector<ChainInstruction> out;
    std::istringstream in{std::string(text)};
    std::string line;
    std::size_t line_no = 0;
    while (std::getline(in, line)) {
        line_no++;
        if (line.empty()) {
            continue;
        }
        auto fail = [&](std::string_view why) {
            throw ParseError("chain line " + std::to_string(line_no) + ": " + std::string(why));
        };
        bool expect_else = !out.empty();
        std::string_view head = expect_else ? "ELSE_CORRELATED_ERROR(" : "CORRELATED_ERROR(";
        if (line.rfind(head, 0) != 0) {
            fail("expected '" + std::string(head) + "...'.");
        }
        auto close = line.find(')');
        if (close == std::string::npos) {
            fail("missing ')'.");
        }
        std::string prob_text = line.substr(head.size(), close - head.size());
        char *end = nullptr;
        double p = std::strtod(prob_text.c_str(), &end);
        if (end == prob_text.c_str() || *end != '\0' || !(p >= 0 && p <= 1)) {
            fail("bad probability '" + prob_text + "'.");
        }
        std::string chars(num_qubits, 'I');
        std::istringstream targets(line.substr(close + 1));
        std::string t;
        while (targets >> t) {
            if (t.size() < 2 || t.size() > 6 || (t[0] != 'X' && t[0] != 'Y' && t[0] != 'Z') ||
                !std::all_of(t.begin() + 1, t.end(), [](char c) { return c >= '0' && c <= '9'; })) {
                fail("bad target '" + t + "'.");
            }
            std::size_t q = std::stoul(t.substr(1));
            if (q >= num_qubits) {
                fail("target '" + t + "' is outside the qubit range.");
            }
            chars[q] = t[0];
        }
        out.push_back({PauliLabel::from_string(chars), p});
    }
    return out;
}

}  // namespace paulinoise
