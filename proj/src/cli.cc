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

#include "paulinoise/cli.h"

#include <charconv>
#include <cmath>
#include <filesystem>
#include <optional>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"
#include "paulinoise/errors.h"
#include "paulinoise/generators.h"
#include "paulinoise/model_io.h"

namespace paulinoise {

namespace {

struct RunConfig {
    std::string subcommand;
    std::vector<std::string> unitary_paths;
    std::vector<std::string> channel_paths;
    std::string target_path;
    std::string weights_text;
    std::string leakage_text;
    std::string probs_text;
    std::optional<double> tol;
    std::optional<std::size_t> max_qubits;
    double floor = DEFAULT_PROBABILITY_FLOOR;
    std::uint64_t seed = 0;
    std::string output;
    std::string stim;
    std::string full_coeffs;
    bool allow_nonphysical = false;
    double epsilon = 0.1;
    double theta = 0.0;
    std::size_t qubits = 1;

    ExtractionOptions options() const {
        ExtractionOptions opts;
        if (tol.has_value()) {
            opts.tol.unitarity = *tol;
            opts.tol.realness = *tol;
        }
        if (max_qubits.has_value()) {
            opts.limits.max_qubits = *max_qubits;
            opts.limits.max_superop_qubits = *max_qubits;
        }
        opts.allow_nonphysical = allow_nonphysical;
        return opts;
    }

    MetaMap settings() const {
        ExtractionOptions opts = options();
        MetaMap m;
        m["subcommand"] = subcommand;
        m["tol_unitarity"] = format_double(opts.tol.unitarity);
        m["tol_realness"] = format_double(opts.tol.realness);
        m["negative_floor"] = format_double(opts.tol.negative_floor);
        m["max_qubits"] = std::to_string(opts.limits.max_qubits);
        m["max_superop_qubits"] = std::to_string(opts.limits.max_superop_qubits);
        m["probability_floor"] = format_double(floor);
        m["allow_nonphysical"] = allow_nonphysical ? "true" : "false";
        if (!leakage_text.empty()) {
            m["leakage"] = leakage_text;
        }
        if (!weights_text.empty()) {
            m["weights"] = weights_text;
        }
        return m;
    }
};

std::vector<std::string> split_commas(const std::string &text) {
    std::vector<std::string> parts;
    std::string cur;
    std::istringstream in(text);
    while (std::getline(in, cur, ',')) {
        parts.push_back(cur);
    }
    return parts;
}

std::vector<double> parse_double_list(const std::string &text, std::string_view flag) {
    std::vector<double> out;
    for (const std::string &part : split_commas(text)) {
        double v = 0;
        auto [ptr, ec] = std::from_chars(part.data(), part.data() + part.size(), v);
        if (part.empty() || ec != std::errc() || ptr != part.data() + part.size() || !std::isfinite(v)) {
            throw ValidationError(std::string(flag) + ": '" + part + "' is not a number.");
        }
        out.push_back(v);
    }
    if (out.empty()) {
        throw ValidationError(std::string(flag) + ": empty list.");
    }
    return out;
}

std::vector<std::size_t> parse_index_list(const std::string &text, std::string_view flag) {
    std::vector<std::size_t> out;
    for (const std::string &part : split_commas(text)) {
        std::size_t v = 0;
        auto [ptr, ec] = std::from_chars(part.data(), part.data() + part.size(), v);
        if (part.empty() || ec != std::errc() || ptr != part.data() + part.size()) {
            throw ValidationError(std::string(flag) + ": '" + part + "' is not a nonnegative integer index.");
        }
        out.push_back(v);
    }
    return out;
}

std::map<PauliLabel, double> parse_probs(const std::string &text) {
    std::map<PauliLabel, double> out;
    for (const std::string &part : split_commas(text)) {
        auto colon = part.find(':');
        if (colon == std::string::npos) {
            throw ValidationError("--probs: entry '" + part + "' must look like LABEL:probability.");
        }
        PauliLabel label = PauliLabel::from_string(part.substr(0, colon));
        double p = parse_double_list(part.substr(colon + 1), "--probs").front();
        if (!out.emplace(label, p).second) {
            throw ValidationError("--probs: label " + label.str() + " given twice.");
        }
    }
    return out;
}

void require_file(const std::string &path, std::string_view flag) {
    if (path.empty()) {
        throw ValidationError(std::string(flag) + " is required.");
    }
    if (!std::filesystem::is_regular_file(path)) {
        throw ValidationError(std::string(flag) + ": file '" + path + "' does not exist.");
    }
}

DenseOperator load_operator(const std::string &path, std::string_view flag) {
    MatrixDocument doc = read_matrix_file(path);
    if (!doc.is_operator()) {
        throw ValidationError(std::string(flag) + ": '" + path + "' holds a superoperator, expected an operator.");
    }
    return std::get<DenseOperator>(doc.value);
}

SuperOperator load_channel(const std::string &path, std::string_view flag, const ExtractionOptions &opts) {
    MatrixDocument doc = read_matrix_file(path);
    if (doc.is_operator()) {
        const auto &u = std::get<DenseOperator>(doc.value);
        return lift_unitary(u, opts.tol, opts.allow_nonphysical, opts.limits);
    }
    (void)flag;
    return std::get<SuperOperator>(doc.value);
}

void emit_text(const std::string &path, const std::string &text, std::ostream &out) {
    if (path.empty()) {
        out << text;
    } else {
        write_text_file(path, text);
    }
}

Provenance make_provenance(const RunConfig &cfg, std::vector<std::string> inputs) {
    return {std::move(inputs), cfg.settings(), TOOL_VERSION};
}

void emit_model(
    const RunConfig &cfg,
    const PauliNoiseModel &model,
    const Provenance &prov,
    const std::optional<CoefficientMatrix> &coeffs,
    std::ostream &out) {
    std::string text = format_model(model, prov, cfg.floor);
    std::string stim_text = cfg.stim.empty() ? std::string() : export_stim_chain(model);
    std::string coeff_text;
    if (!cfg.full_coeffs.empty() && coeffs.has_value()) {
        MetaMap meta = prov.settings;
        meta["representation"] = "pauli_pair_coefficients";
        meta["num_qubits"] = std::to_string(coeffs->num_qubits());
        coeff_text =
            format_superoperator_matrix(std::size_t{1} << coeffs->num_qubits(), coeffs->matrix(), meta);
    }
    emit_text(cfg.output, text, out);
    if (!cfg.stim.empty()) {
        write_text_file(cfg.stim, stim_text);
    }
    if (!coeff_text.empty()) {
        write_text_file(cfg.full_coeffs, coeff_text);
    }
    if (!cfg.output.empty()) {
        out << "identity_prob " << format_double(model.diagnostics.identity_prob) << "\n";
        out << "leakage_weight " << format_double(model.leakage_weight) << "\n";
        out << "coherent_residual_sq " << format_double(model.diagnostics.coherent_residual_sq) << "\n";
        out << "distance_to_source " << format_double(model.diagnostics.distance_to_source) << "\n";
    }
}

void check_physical_channel(const SuperOperator &s, const RunConfig &cfg, const ExtractionOptions &opts) {
    if (cfg.allow_nonphysical) {
        return;
    }
    PhysicalityReport r = check_physicality(s, opts.tol.unitarity);
    if (!r.trace_preserving) {
        throw PhysicalityError(
            "--channel '" + cfg.channel_paths.front() + "' is not trace preserving (defect " +
            format_double(r.trace_defect) + "); pass --allow-nonphysical to override.");
    }
    if (!r.hermiticity_preserving) {
        throw PhysicalityError(
            "--channel '" + cfg.channel_paths.front() + "' is not hermiticity preserving (defect " +
            format_double(r.hermiticity_defect) + "); pass --allow-nonphysical to override.");
    }
}

void run_extract(const RunConfig &cfg, std::ostream &out) {
    require_file(cfg.unitary_paths.empty() ? std::string() : cfg.unitary_paths.front(), "--unitary");
    if (cfg.unitary_paths.size() != 1) {
        throw ValidationError("extract: exactly one --unitary is required.");
    }
    require_file(cfg.target_path, "--target");
    std::optional<std::vector<std::size_t>> leak_indices;
    if (!cfg.leakage_text.empty()) {
        leak_indices = parse_index_list(cfg.leakage_text, "--leakage");
    }
    ExtractionOptions opts = cfg.options();

    DenseOperator u = load_operator(cfg.unitary_paths.front(), "--unitary");
    DenseOperator u0 = load_operator(cfg.target_path, "--target");
    Provenance prov = make_provenance(cfg, {cfg.unitary_paths.front(), cfg.target_path});

    if (!leak_indices.has_value()) {
        DenseOperator u_err = error_unitary(u, u0, opts);
        PauliNoiseModel model = extract_from_error_unitary(u_err, 0, opts);
        std::optional<CoefficientMatrix> coeffs;
        if (!cfg.full_coeffs.empty()) {
            coeffs = coefficient_matrix(lift_unitary(u_err, opts.tol, true, opts.limits), opts);
        }
        emit_model(cfg, model, prov, coeffs, out);
        return;
    }

    LeakageSpec spec(u.dim(), *leak_indices);
    if (u0.dim() == spec.comp_dim() && u0.dim() != u.dim()) {
        // Target given on the computational subspace only; act as the
        // identity on leaked levels.
        Eigen::MatrixXcd full = Eigen::MatrixXcd::Identity(u.matrix().rows(), u.matrix().cols());
        const auto &idx = spec.comp_indices();
        for (std::size_t r = 0; r < idx.size(); r++) {
            for (std::size_t c = 0; c < idx.size(); c++) {
                full(static_cast<Eigen::Index>(idx[r]), static_cast<Eigen::Index>(idx[c])) = u0(r, c);
            }
        }
        u0 = DenseOperator(std::move(full));
    }
    DenseOperator u_err = error_unitary(u, u0, opts);
    LeakageProjection proj = leakage_project(u_err, spec, opts);
    PauliNoiseModel model = extract_from_error_unitary(proj.block, proj.leakage_weight, opts);
    std::optional<CoefficientMatrix> coeffs;
    if (!cfg.full_coeffs.empty()) {
        coeffs = coefficient_matrix(lift_unitary(proj.block, opts.tol, true, opts.limits), opts);
    }
    emit_model(cfg, model, prov, coeffs, out);
}

void run_extract_channel(const RunConfig &cfg, std::ostream &out) {
    if (cfg.channel_paths.size() != 1) {
        throw ValidationError("extract-channel: exactly one --channel is required.");
    }
    require_file(cfg.channel_paths.front(), "--channel");
    require_file(cfg.target_path, "--target");
    ExtractionOptions opts = cfg.options();

    SuperOperator s = load_channel(cfg.channel_paths.front(), "--channel", opts);
    DenseOperator u0 = load_operator(cfg.target_path, "--target");
    check_physical_channel(s, cfg, opts);
    SuperOperator s_err = error_channel(s, u0, opts);
    CoefficientMatrix w = coefficient_matrix(s_err, opts);
    double leakage = 1 - w.diagonal().real().sum();
    if (opts.allow_nonphysical) {
        leakage = std::clamp(leakage, 0.0, 1.0);
    }
    PauliNoiseModel model = nearest_pauli_channel(w, leakage, opts);
    Provenance prov = make_provenance(cfg, {cfg.channel_paths.front(), cfg.target_path});
    emit_model(cfg, model, prov, w, out);
}

void run_avg_extract(const RunConfig &cfg, std::ostream &out) {
    if (cfg.unitary_paths.empty()) {
        throw ValidationError("avg-extract: at least one --unitary is required.");
    }
    for (const auto &p : cfg.unitary_paths) {
        require_file(p, "--unitary");
    }
    require_file(cfg.target_path, "--target");
    std::vector<double> weights;
    if (cfg.weights_text.empty()) {
        weights.assign(cfg.unitary_paths.size(), 1.0 / static_cast<double>(cfg.unitary_paths.size()));
    } else {
        weights = parse_double_list(cfg.weights_text, "--weights");
        if (weights.size() != cfg.unitary_paths.size()) {
            throw ValidationError(
                "--weights: " + std::to_string(weights.size()) + " weights given for " +
                std::to_string(cfg.unitary_paths.size()) + " --unitary files.");
        }
    }
    ExtractionOptions opts = cfg.options();

    std::vector<EnsembleMember> members;
    std::vector<std::string> inputs;
    for (std::size_t k = 0; k < weights.size(); k++) {
        members.push_back({weights[k], load_operator(cfg.unitary_paths[k], "--unitary")});
        inputs.push_back(cfg.unitary_paths[k]);
    }
    inputs.push_back(cfg.target_path);
    DenseOperator u0 = load_operator(cfg.target_path, "--target");
    SuperOperator s = average_channel(members, opts.tol, opts.limits);
    SuperOperator s_err = error_channel(s, u0, opts);
    CoefficientMatrix w = coefficient_matrix(s_err, opts);
    PauliNoiseModel model = nearest_pauli_channel(w, 1 - w.diagonal().real().sum(), opts);
    emit_model(cfg, model, make_provenance(cfg, inputs), w, out);
}

void run_distance(const RunConfig &cfg, std::ostream &out) {
    if (cfg.channel_paths.size() != 2) {
        throw ValidationError("distance: exactly two --channel files are required.");
    }
    for (const auto &p : cfg.channel_paths) {
        require_file(p, "--channel");
    }
    ExtractionOptions opts = cfg.options();
    SuperOperator a = load_channel(cfg.channel_paths[0], "--channel", opts);
    SuperOperator b = load_channel(cfg.channel_paths[1], "--channel", opts);
    double d = channel_distance(a, b);
    std::ostringstream doc;
    doc << "{\n";
    doc << "  \"format_version\": " << FORMAT_VERSION << ",\n";
    doc << "  \"kind\": \"channel_distance\",\n";
    doc << "  \"distance\": " << format_double(d) << ",\n";
    doc << "  \"distance_sq\": " << format_double(d * d) << ",\n";
    doc << "  \"inputs\": [" << nlohmann::json(cfg.channel_paths[0]).dump() << ", "
        << nlohmann::json(cfg.channel_paths[1]).dump() << "],\n";
    doc << "  \"tool_version\": \"" << TOOL_VERSION << "\"\n";
    doc << "}\n";
    if (cfg.output.empty()) {
        out << "distance " << format_double(d) << "\n";
    } else {
        write_text_file(cfg.output, doc.str());
        out << "distance " << format_double(d) << "\n";
    }
}

void run_gen(const RunConfig &cfg, const std::string &which, std::ostream &out) {
    ExtractionOptions opts = cfg.options();
    MetaMap meta;
    meta["generator"] = which;
    meta["tool_version"] = TOOL_VERSION;
    if (which == "ez") {
        meta["epsilon"] = format_double(cfg.epsilon);
        emit_text(cfg.output, format_matrix_document(gen_ez(cfg.epsilon), meta), out);
    } else if (which == "overrotated-cz") {
        meta["theta"] = format_double(cfg.theta);
        emit_text(cfg.output, format_matrix_document(gen_overrotated_cz(cfg.theta), meta), out);
    } else if (which == "random-unitary") {
        meta["qubits"] = std::to_string(cfg.qubits);
        meta["seed"] = std::to_string(cfg.seed);
        emit_text(
            cfg.output, format_matrix_document(gen_random_unitary(cfg.qubits, cfg.seed, opts.limits), meta), out);
    } else if (which == "pauli-channel") {
        if (cfg.probs_text.empty()) {
            throw ValidationError("gen pauli-channel: --probs is required.");
        }
        meta["probs"] = cfg.probs_text;
        emit_text(
            cfg.output, format_matrix_document(gen_pauli_channel(parse_probs(cfg.probs_text), opts.limits), meta),
            out);
    }
}

void run_demo_triangle(const RunConfig &cfg, std::ostream &out) {
    double eps = cfg.epsilon;
    if (!std::isfinite(eps)) {
        throw ValidationError("--epsilon must be finite.");
    }
    double c = std::cos(eps);
    double s = std::sin(eps);
    SuperOperator ez = lift_unitary(gen_ez(eps));
    auto z_model = extract_from_error_unitary(gen_ez(eps));
    SuperOperator ez_pauli = gen_pauli_channel(z_model.probabilities);
    SuperOperator ex_pauli = gen_pauli_channel(std::vector<double>{c * c, s * s, 0, 0});

    double d_coherent_z = channel_distance(ez, ez_pauli);
    double d_coherent_x = channel_distance(ez, ex_pauli);
    double d_paulis = channel_distance(ez_pauli, ex_pauli);

    auto row = [&](std::string_view name, double d, double leading, std::string_view leading_form) {
        out << name << " = " << format_double(d) << "  (squared " << format_double(d * d) << "; leading order "
            << leading_form << " = " << format_double(leading) << ")\n";
    };
    out << "epsilon = " << format_double(eps) << "\n";
    row("d(E_Z, E_Z^Pauli)", d_coherent_z, std::sqrt(2.0) * std::abs(eps), "sqrt(2) eps");
    row("d(E_Z, E_X^Pauli)", d_coherent_x, std::sqrt(2.0) * std::abs(eps), "sqrt(2) eps");
    row("d(E_Z^Pauli, E_X^Pauli)", d_paulis, std::sqrt(2.0) * eps * eps, "sqrt(2) eps^2");
    out << "2 sin^4(eps) = " << format_double(2 * std::pow(s, 4)) << "\n";
    out << "d(E_Z, E_X^Pauli)^2 - d(E_Z, E_Z^Pauli)^2 = "
        << format_double(d_coherent_x * d_coherent_x - d_coherent_z * d_coherent_z) << "\n";
}

void add_common(CLI::App *sub, RunConfig &cfg) {
    sub->add_option("--tol", cfg.tol, "Unitarity / hermiticity / realness tolerance (default 1e-9)")
        ->check(CLI::PositiveNumber);
    sub->add_option("--max-qubits", cfg.max_qubits, "Qubit cap for operators and superoperators")
        ->check(CLI::Range(1, 12));
    sub->add_option("-o,--output", cfg.output, "Output file (stdout if omitted)");
}

void add_model_outputs(CLI::App *sub, RunConfig &cfg) {
    sub->add_option("--floor", cfg.floor, "Omit model entries below this probability")->check(CLI::NonNegativeNumber);
    sub->add_option("--stim", cfg.stim, "Write the correlated-error chain to this path");
    sub->add_option("--full-coeffs", cfg.full_coeffs, "Dump the Pauli-pair coefficient matrix to this path");
    sub->add_flag("--allow-nonphysical", cfg.allow_nonphysical, "Admit non-unitary / non-physical inputs");
}

}  // namespace

int run_cli(int argc, const char *const *argv, std::ostream &out, std::ostream &err) {
    RunConfig cfg;
    CLI::App app{"Extract the closest Pauli noise channel to a gate error."};
    app.name("paulinoise");
    app.require_subcommand(1);

    auto *extract = app.add_subcommand("extract", "Unitary route: --unitary U --target U0");
    extract->add_option("--unitary", cfg.unitary_paths, "Implemented gate (operator file)");
    extract->add_option("--target", cfg.target_path, "Target gate (operator file)");
    extract->add_option("--leakage", cfg.leakage_text, "Comma-separated computational basis indices");
    add_common(extract, cfg);
    add_model_outputs(extract, cfg);

    auto *extract_channel = app.add_subcommand("extract-channel", "Channel route: --channel S --target U0");
    extract_channel->add_option("--channel", cfg.channel_paths, "Implemented channel (superoperator file)");
    extract_channel->add_option("--target", cfg.target_path, "Target gate (operator file)");
    add_common(extract_channel, cfg);
    add_model_outputs(extract_channel, cfg);

    auto *avg = app.add_subcommand("avg-extract", "Ensemble route: --unitary U1 --unitary U2 ... --target U0");
    avg->add_option("--unitary", cfg.unitary_paths, "Ensemble member (repeatable)");
    avg->add_option("--weights", cfg.weights_text, "Comma-separated member weights (default uniform)");
    avg->add_option("--target", cfg.target_path, "Target gate (operator file)");
    add_common(avg, cfg);
    add_model_outputs(avg, cfg);

    auto *distance = app.add_subcommand("distance", "Frobenius distance between two channels");
    distance->add_option("--channel", cfg.channel_paths, "Channel or unitary file (give twice)");
    add_common(distance, cfg);
    distance->add_flag("--allow-nonphysical", cfg.allow_nonphysical, "Do not check unitarity of operator inputs");

    auto *gen = app.add_subcommand("gen", "Write generated gates and channels");
    gen->require_subcommand(1);
    auto *gen_ez_cmd = gen->add_subcommand("ez", "exp(-i eps Z)");
    gen_ez_cmd->add_option("--epsilon", cfg.epsilon, "Rotation angle in radians");
    auto *gen_cz_cmd = gen->add_subcommand("overrotated-cz", "CZ with excess phase theta on |11>");
    gen_cz_cmd->add_option("--theta", cfg.theta, "Excess phase in radians");
    auto *gen_ru_cmd = gen->add_subcommand("random-unitary", "Seeded Haar-random unitary");
    gen_ru_cmd->add_option("--qubits", cfg.qubits, "Qubit count")->required();
    gen_ru_cmd->add_option("--seed", cfg.seed, "Generator seed");
    auto *gen_pc_cmd = gen->add_subcommand("pauli-channel", "Pauli channel superoperator");
    gen_pc_cmd->add_option("--probs", cfg.probs_text, "LABEL:p,LABEL:p,...");
    for (auto *g : {gen_ez_cmd, gen_cz_cmd, gen_ru_cmd, gen_pc_cmd}) {
        add_common(g, cfg);
    }

    auto *demo = app.add_subcommand("demo", "Worked examples");
    demo->require_subcommand(1);
    auto *triangle = demo->add_subcommand("triangle", "Distances among E_Z, E_Z^Pauli, E_X^Pauli");
    triangle->add_option("--epsilon", cfg.epsilon, "Rotation angle in radians");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError &e) {
        int code = app.exit(e, out, err);
        return code == 0 ? EXIT_OK : EXIT_VALIDATION;
    }

    try {
        if (extract->parsed()) {
            cfg.subcommand = "extract";
            run_extract(cfg, out);
        } else if (extract_channel->parsed()) {
            cfg.subcommand = "extract-channel";
            run_extract_channel(cfg, out);
        } else if (avg->parsed()) {
            cfg.subcommand = "avg-extract";
            run_avg_extract(cfg, out);
        } else if (distance->parsed()) {
            cfg.subcommand = "distance";
            run_distance(cfg, out);
        } else if (gen->parsed()) {
            for (auto *g : {gen_ez_cmd, gen_cz_cmd, gen_ru_cmd, gen_pc_cmd}) {
                if (g->parsed()) {
                    cfg.subcommand = "gen " + g->get_name();
                    run_gen(cfg, g->get_name(), out);
                }
            }
        } else if (triangle->parsed()) {
            cfg.subcommand = "demo triangle";
            run_demo_triangle(cfg, out);
        }
    } catch (const PhysicalityError &e) {
        err << "physicality error: " << e.what() << "\n";
        return EXIT_PHYSICALITY;
    } catch (const ValidationError &e) {
        err << "validation error: " << e.what() << "\n";
        return EXIT_VALIDATION;
    } catch (const std::exception &e) {
        err << "error: " << e.what() << "\n";
        return EXIT_INTERNAL;
    }
    return EXIT_OK;
}

}  // namespace paulinoise
