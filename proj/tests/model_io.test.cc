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

#include <cmath>
#include <filesystem>
#include <fstream>

#include "gtest/gtest.h"
#include "paulinoise/errors.h"
#include "paulinoise/generators.h"
#include "testing/oracles.h"

using namespace paulinoise;
namespace pt = paulinoise::testing;

namespace {

PauliLabel L(const char *s) {
    return PauliLabel::from_string(s);
}

PauliNoiseModel model_from(std::size_t n, std::vector<double> probs, double leakage = 0) {
    PauliNoiseModel m;
    m.num_qubits = n;
    m.probabilities = std::move(probs);
    m.leakage_weight = leakage;
    m.diagnostics.identity_prob = m.probabilities[0];
    return m;
}

std::vector<double> chain_conditionals(const std::string &text, std::size_t n) {
    std::vector<double> out;
    for (const auto &ins : parse_stim_chain(text, n)) {
        out.push_back(ins.conditional_probability);
    }
    return out;
}

std::filesystem::path temp_path(const std::string &name) {
    return std::filesystem::path(::testing::TempDir()) / name;
}

std::string model_json(const std::string &entries, const std::string &leak = "0", const std::string &trunc = "0") {
    return R"({"format_version": 1, "kind": "pauli_noise_model", "num_qubits": 1, "entries": [)" + entries +
           R"(], "leakage_weight": )" + leak +
           R"(, "diagnostics": {"identity_prob": 1, "coherent_residual_sq": 0, "distance_to_source": 0, "truncated_weight": )" +
           trunc + R"(}, "provenance": {"tool_version": "x", "inputs": [], "settings": {}}})";
}

}  // namespace

TEST(format_double, seventeen_digits) {
    EXPECT_EQ(format_double(0.1), "0.10000000000000001");
    EXPECT_EQ(format_double(1), "1");
    EXPECT_EQ(format_double(-2.5e-300), "-2.5e-300");
    for (double v : {0.1, 1.0 / 3, std::sqrt(2.0), 6.02214076e23, 4.9e-324}) {
        EXPECT_EQ(std::strtod(format_double(v).c_str(), nullptr), v);
    }
}

TEST(matrix_codec, operator_round_trip_is_exact) {
    DenseOperator u = gen_random_unitary(2, 4);
    MatrixDocument doc = parse_matrix_document(format_matrix_document(u, {{"note", "a \"quoted\" value"}}));
    ASSERT_TRUE(doc.is_operator());
    const auto &back = std::get<DenseOperator>(doc.value);
    EXPECT_LE((back.matrix() - u.matrix()).cwiseAbs().maxCoeff(), 1e-15);
    EXPECT_EQ(back.matrix(), u.matrix());
    EXPECT_EQ(doc.meta.at("note"), "a \"quoted\" value");
}

TEST(matrix_codec, superoperator_round_trip_is_exact) {
    SuperOperator s = pt::random_channel(2, 3);
    MatrixDocument doc = parse_matrix_document(format_matrix_document(s));
    ASSERT_FALSE(doc.is_operator());
    const auto &back = std::get<SuperOperator>(doc.value);
    EXPECT_EQ(back.dim(), 4u);
    EXPECT_EQ(back.matrix(), s.matrix());
}

TEST(matrix_codec, file_round_trip) {
    auto path = temp_path("paulinoise_codec_test.json");
    DenseOperator u = gen_random_unitary(1, 8);
    write_text_file(path, format_matrix_document(u));
    EXPECT_EQ(std::get<DenseOperator>(read_matrix_file(path).value).matrix(), u.matrix());
    std::filesystem::remove(path);
    EXPECT_THROW(read_matrix_file(path), ValidationError);
}

TEST(matrix_codec, layout) {
    Eigen::Matrix2cd m;
    m << 1, complex_t(0, 2), 3, 4;
    std::string text = format_matrix_document(DenseOperator(m));
    EXPECT_NE(text.find("\"kind\": \"operator\""), std::string::npos);
    EXPECT_NE(text.find("\"format_version\": 1"), std::string::npos);
    auto first = text.find("[1, 0]");
    auto second = text.find("[0, 2]");
    auto third = text.find("[3, 0]");
    ASSERT_NE(first, std::string::npos);
    EXPECT_LT(first, second);
    EXPECT_LT(second, third);
}

TEST(matrix_codec, parse_errors) {
    auto msg = [](std::string_view text) -> std::string {
        try {
            parse_matrix_document(text, "f.json");
        } catch (const ParseError &e) {
            return e.what();
        } catch (const ValidationError &e) {
            return std::string("validation: ") + e.what();
        }
        return "";
    };
    EXPECT_NE(msg("{\n  \"kind\": ,\n}").find("f.json:2:"), std::string::npos);
    EXPECT_NE(msg("[]").find("top level"), std::string::npos);
    EXPECT_NE(msg(R"({"format_version": 2, "kind": "operator", "dim": 2, "data": []})").find("format_version"),
              std::string::npos);
    EXPECT_NE(msg(R"({"format_version": 1, "kind": "matrix", "dim": 2, "data": []})").find("'kind'"),
              std::string::npos);
    EXPECT_NE(msg(R"({"format_version": 1, "kind": "operator", "dim": 1, "data": [[1, 0]]})").find("'dim'"),
              std::string::npos);
    EXPECT_NE(msg(R"({"format_version": 1, "kind": "operator", "dim": 2, "data": [[1, 0]]})").find("requires 4"),
              std::string::npos);
    EXPECT_NE(msg(R"({"format_version": 1, "kind": "superoperator", "dim": 2, "data": [[1,0],[0,0],[0,0],[1,0]]})")
                  .find("requires 16"),
              std::string::npos);
    EXPECT_NE(msg(R"({"format_version": 1, "kind": "operator", "dim": 2, "data": [[1,0],[0,0],[0],[1,0]]})")
                  .find("data[2]"),
              std::string::npos);
    EXPECT_NE(msg(R"({"format_version": 1, "kind": "operator", "dim": 2, "data": [[1,0],[0,0],[0,"x"],[1,0]]})")
                  .find("data[2]"),
              std::string::npos);
    EXPECT_NE(msg(R"({"format_version": 1, "kind": "operator", "dim": 2})").find("'data': missing"),
              std::string::npos);
    EXPECT_NE(
        msg(R"({"format_version": 1, "kind": "operator", "dim": 2, "meta": {"a": 1}, "data": [[1,0],[0,0],[0,0],[1,0]]})")
            .find("meta.a"),
        std::string::npos);
}

TEST(model_codec, sorting_and_floor) {
    PauliNoiseModel m = model_from(1, {0.7, 0.1, 0.2 - 5e-13, 5e-13});
    std::string text = format_model(m);
    auto i = text.find("\"I\"");
    auto y = text.find("\"Y\"");
    auto x = text.find("\"X\"");
    EXPECT_LT(i, y);
    EXPECT_LT(y, x);
    EXPECT_EQ(text.find("\"Z\""), std::string::npos);

    ModelDocument doc = parse_model(text);
    EXPECT_EQ(doc.truncated_weight, 5e-13);
    EXPECT_EQ(doc.model.probability(L("Z")), 0.0);
    EXPECT_EQ(doc.model.probability(L("Y")), 0.2 - 5e-13);
    EXPECT_EQ(doc.provenance.tool_version, TOOL_VERSION);
}

TEST(model_codec, ties_break_by_index) {
    std::string text = format_model(model_from(1, {0.25, 0.25, 0.25, 0.25}));
    auto i = text.find("\"I\"");
    auto x = text.find("\"X\"");
    auto y = text.find("\"Y\"");
    auto z = text.find("\"Z\"");
    EXPECT_LT(i, x);
    EXPECT_LT(x, y);
    EXPECT_LT(y, z);
}

TEST(model_codec, round_trip_is_exact) {
    std::mt19937_64 rng(17);
    for (std::size_t n = 1; n <= 3; n++) {
        auto e = pt::random_simplex(std::size_t{1} << (2 * n), rng);
        PauliNoiseModel m = model_from(n, e);
        m.diagnostics.coherent_residual_sq = 1.0 / 3;
        m.diagnostics.distance_to_source = std::sqrt(1.0 / 3);
        Provenance prov{{"u.json", "target.json"}, {{"tol", "1e-09"}, {"floor", "0"}}, ""};
        ModelDocument doc = parse_model(format_model(m, prov, 0));
        EXPECT_EQ(doc.model.num_qubits, n);
        for (std::size_t k = 0; k < e.size(); k++) {
            EXPECT_EQ(doc.model.probabilities[k], e[k]);
        }
        EXPECT_EQ(doc.model.diagnostics.coherent_residual_sq, 1.0 / 3);
        EXPECT_EQ(doc.model.diagnostics.distance_to_source, std::sqrt(1.0 / 3));
        EXPECT_EQ(doc.provenance.inputs, prov.inputs);
        EXPECT_EQ(doc.provenance.settings, prov.settings);
        EXPECT_EQ(doc.truncated_weight, 0.0);
    }
}

TEST(model_codec, leakage_round_trip) {
    PauliNoiseModel m = model_from(1, {0.25, 0, 0, 0.25}, 0.5);
    ModelDocument doc = parse_model(format_model(m));
    EXPECT_EQ(doc.model.leakage_weight, 0.5);
    EXPECT_EQ(doc.model.probability(L("Z")), 0.25);
}

TEST(model_codec, format_validation) {
    EXPECT_THROW(format_model(model_from(1, {0.5, 0.5, 0})), ValidationError);
    EXPECT_THROW(format_model(model_from(1, {0.9, 0, 0, 0})), ValidationError);
    EXPECT_THROW(format_model(model_from(1, {1.1, -0.1, 0, 0})), ValidationError);
    EXPECT_THROW(format_model(model_from(1, {1, 0, 0, 0}), {}, -1), ValidationError);
    Provenance loose{{}, {{"allow_nonphysical", "true"}}, ""};
    EXPECT_NO_THROW(format_model(model_from(1, {0.9, 0, 0, 0}), loose));
}

TEST(model_codec, parse_validation) {
    EXPECT_NO_THROW(parse_model(model_json(R"({"label": "I", "probability": 1})")));
    EXPECT_NO_THROW(parse_model(model_json(R"({"label": "I", "probability": 0.5})", "0.25", "0.25")));
    EXPECT_THROW(parse_model(model_json(R"({"label": "I", "probability": 0.9})")), ValidationError);
    EXPECT_THROW(parse_model(model_json(R"({"label": "Q", "probability": 1})")), ParseError);
    EXPECT_THROW(parse_model(model_json(R"({"label": "II", "probability": 1})")), ParseError);
    EXPECT_THROW(parse_model(model_json(R"({"label": "I", "probability": 0.5}, {"label": "I", "probability": 0.5})")),
                 ParseError);
    EXPECT_THROW(parse_model(model_json(R"({"label": "I", "probability": 1.5})")), ParseError);
    EXPECT_THROW(parse_model(model_json(R"({"label": "I", "probability": "1"})")), ParseError);
    EXPECT_THROW(parse_model(model_json(R"({"label": "I", "probability": 1})", "-0.1")), ParseError);
    EXPECT_THROW(parse_model("{}"), ParseError);
    EXPECT_THROW(parse_model("not json"), ParseError);
}

TEST(model_codec, file_round_trip) {
    auto path = temp_path("paulinoise_model_test.json");
    PauliNoiseModel m = model_from(2, std::vector<double>(16, 1.0 / 16));
    write_model(m, path);
    ModelDocument doc = read_model(path);
    EXPECT_EQ(doc.model.probabilities, m.probabilities);
    std::filesystem::remove(path);
    EXPECT_THROW(read_model(path), ValidationError);
}

TEST(stim_chain, example) {
    std::string text = export_stim_chain(model_from(1, {0.4, 0.1, 0.2, 0.3}));
    auto ins = parse_stim_chain(text, 1);
    ASSERT_EQ(ins.size(), 3u);
    EXPECT_EQ(ins[0].pauli, L("X"));
    EXPECT_EQ(ins[1].pauli, L("Y"));
    EXPECT_EQ(ins[2].pauli, L("Z"));
    EXPECT_NEAR(ins[0].conditional_probability, 0.1, 1e-15);
    EXPECT_NEAR(ins[1].conditional_probability, 0.2 / 0.9, 1e-15);
    EXPECT_NEAR(ins[2].conditional_probability, 0.3 / 0.7, 1e-15);
    EXPECT_EQ(text.rfind("CORRELATED_ERROR(", 0), 0u);
    EXPECT_NE(text.find("\nELSE_CORRELATED_ERROR("), std::string::npos);
}

TEST(stim_chain, two_qubit_targets) {
    std::vector<double> e(16, 0);
    e[0] = 0.9;
    e[L("ZX").index()] = 0.1;
    std::string text = export_stim_chain(model_from(2, e));
    EXPECT_EQ(text, "CORRELATED_ERROR(0.10000000000000001) Z0 X1\n");
    e[0] = 0.8;
    e[L("IY").index()] = 0.1;
    text = export_stim_chain(model_from(2, e));
    EXPECT_EQ(text, "CORRELATED_ERROR(0.10000000000000001) Y1\nELSE_CORRELATED_ERROR(0.11111111111111112) Z0 X1\n");
}

TEST(stim_chain, empty_and_saturated) {
    EXPECT_EQ(export_stim_chain(model_from(1, {1, 0, 0, 0})), "");
    EXPECT_TRUE(parse_stim_chain("", 1).empty());
    auto c = chain_conditionals(export_stim_chain(model_from(1, {0, 0.5, 0, 0.5})), 1);
    ASSERT_EQ(c.size(), 2u);
    EXPECT_EQ(c[0], 0.5);
    EXPECT_EQ(c[1], 1.0);
}

TEST(stim_chain, reconstruction_identity) {
    std::mt19937_64 rng(99);
    for (int trial = 0; trial < 100; trial++) {
        std::size_t n = 1 + trial % 2;
        std::size_t count = std::size_t{1} << (2 * n);
        auto e = pt::random_simplex(count, rng);
        auto c = chain_conditionals(export_stim_chain(model_from(n, e)), n);
        auto back = pt::oracle_chain_unconditional(c);
        ASSERT_EQ(back.size(), count - 1);
        for (std::size_t k = 1; k < count; k++) {
            EXPECT_NEAR(back[k - 1], e[k], 1e-12);
        }
    }
}

TEST(stim_chain, parse_errors) {
    EXPECT_THROW(parse_stim_chain("ELSE_CORRELATED_ERROR(0.1) X0\n", 1), ParseError);
    EXPECT_THROW(parse_stim_chain("CORRELATED_ERROR(0.1) X0\nCORRELATED_ERROR(0.1) Z0\n", 1), ParseError);
    EXPECT_THROW(parse_stim_chain("CORRELATED_ERROR(1.5) X0\n", 1), ParseError);
    EXPECT_THROW(parse_stim_chain("CORRELATED_ERROR(0.1 X0\n", 1), ParseError);
    EXPECT_THROW(parse_stim_chain("CORRELATED_ERROR(0.1) X1\n", 1), ParseError);
    EXPECT_THROW(parse_stim_chain("CORRELATED_ERROR(0.1) W0\n", 1), ParseError);
    EXPECT_THROW(parse_stim_chain("CORRELATED_ERROR(0.1) X99999999999\n", 1), ParseError);
}
