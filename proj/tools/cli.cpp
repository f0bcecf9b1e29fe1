// Copyright 2026 The covmub Authors
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

#include "cli.hpp"

#include <CLI11.hpp>
#include <algorithm>
#include <fstream>
#include <map>
#include <set>
#include <sstream>

#include "covmub/error.hpp"
#include "covmub/multiplier.hpp"
#include "covmub/quadrature.hpp"
#include "covmub/symplectic.hpp"
#include "covmub/weyl.hpp"
#include "json_io.hpp"
#include "qubit_demo.hpp"

namespace covmub {

namespace {

using io::json;

struct Options {
    std::string field = "2";
    std::string poly;
    int lambda = 1;
    std::string multiplier;
    std::string origin;
    std::string out;
    std::string in;
    double tol = 1e-9;
    unsigned long long seed = 0;
    bool pretty = false;
    bool tables = false;
};

/// Raised for verification failures that should end with exit code 4.
struct VerificationFailed {
    json report;
};

int exit_code_for(ErrorKind kind) {
    switch (kind) {
        case ErrorKind::InvalidInput:
        case ErrorKind::NonPrime:
        case ErrorKind::ReduciblePolynomial:
        case ErrorKind::DegreeMismatch:
        case ErrorKind::ZeroInverse:
        case ErrorKind::FieldMismatch:
        case ErrorKind::OddCharacteristic:
        case ErrorKind::EvenCharacteristic:
        case ErrorKind::ZeroScale:
        case ErrorKind::SingularMap:
        case ErrorKind::NonSymplecticElement:
        case ErrorKind::NotUnimodular:
        case ErrorKind::InconsistentDimension:
        case ErrorKind::NotACocycle:
            return exit_invalid_config;
        default:
            return exit_construction_failure;
    }
}

std::vector<int> parse_int_list(const std::string &text, const std::string &what) {
    std::vector<int> out;
    std::stringstream ss(text);
    std::string part;
    while (std::getline(ss, part, ',')) {
        try {
            std::size_t used = 0;
            int v = std::stoi(part, &used);
            if (used != part.size()) {
                throw std::invalid_argument(part);
            }
            out.push_back(v);
        } catch (const std::exception &) {
            throw Error(ErrorKind::InvalidInput, "cannot parse " + what + " '" + text + "'");
        }
    }
    return out;
}

Field make_field(const Options &opts) {
    Field base = Field::parse(opts.field);
    if (opts.poly.empty()) {
        return base;
    }
    return Field::make(base.p(), base.r(), parse_int_list(opts.poly, "--poly"));
}

SymplecticForm make_form(const Field &field, int lambda) {
    return symplectic_form(field, field.element(lambda));
}

PhaseVector make_origin(const Field &field, const std::string &text) {
    if (text.empty()) {
        return PhaseVector{};
    }
    auto parts = parse_int_list(text, "--origin");
    if (parts.size() != 2) {
        throw Error(ErrorKind::InvalidInput, "--origin expects x,y");
    }
    return PhaseVector{field.element(parts[0]), field.element(parts[1])};
}

json complex_to_json(Complex z) {
    return json::array({z.real(), z.imag()});
}

struct ChosenMultiplier {
    MultiplierTable table;
    std::string source;
};

std::optional<long long> parse_index(const std::string &selector) {
    std::string digits = selector;
    for (const char *prefix : {"index:", "index=", "index "}) {
        if (selector.rfind(prefix, 0) == 0) {
            digits = selector.substr(std::string(prefix).size());
        }
    }
    if (digits.empty() || !std::all_of(digits.begin(), digits.end(), [](char c) { return c >= '0' && c <= '9'; })) {
        return std::nullopt;
    }
    return std::stoll(digits);
}

ChosenMultiplier choose_multiplier(const PhaseSpace &space, SymplecticForm form, const std::string &selector) {
    if (selector.empty() || selector == "reference") {
        return {reference_weyl_multiplier(space, form), "reference"};
    }
    if (selector == "inv" || selector == "symmetric") {
        return {symmetric_multiplier(space, form), "symmetric"};
    }
    if (selector == "dual-basis") {
        return {dual_basis_multiplier(space, form), "dual-basis"};
    }
    if (auto k = parse_index(selector)) {
        auto family = enumerate_weyl_multipliers(space, form);
        if (*k >= family.size()) {
            throw Error(ErrorKind::InvalidInput, "multiplier index out of range (family has " +
                                                     std::to_string(family.size()) + " members)");
        }
        return {family[*k], "index " + std::to_string(*k)};
    }
    std::ifstream file(selector);
    if (!file) {
        throw Error(ErrorKind::InvalidInput, "unknown multiplier '" + selector + "'");
    }
    json j;
    try {
        j = json::parse(file);
    } catch (const json::exception &e) {
        throw Error(ErrorKind::InvalidInput, std::string("cannot parse multiplier file: ") + e.what());
    }
    MultiplierTable table = io::multiplier_from_json(j);
    if (!(table.field() == space.field())) {
        throw Error(ErrorKind::FieldMismatch, "multiplier file is over a different field");
    }
    if (!is_weyl_multiplier(table, form)) {
        throw Error(ErrorKind::NotAWeylMultiplier, "multiplier file is not a Weyl multiplier for this form");
    }
    return {table, "file"};
}

json direction_to_json(const PhaseSpace &space, int d) {
    return io::vector_to_json(space.field(), space.direction(d).rep);
}

json cmd_field_info(const Options &opts) {
    Field f = make_field(opts);
    json elements = json::array();
    for (Elem a : f.elements()) {
        elements.push_back(json{{"index", a.index}, {"coeffs", f.coeffs(a)}, {"trace", f.trace(a)}});
    }
    json out{{"field", io::field_to_json(f)}, {"q", f.q()}, {"elements", elements}};
    if (f.q() > 1) {
        out["primitive_element"] = io::element_to_json(f, f.primitive_element());
    }
    if (f.p() == 2) {
        json basis = json::array();
        for (Elem w : self_dual_basis(f)) {
            basis.push_back(io::element_to_json(f, w));
        }
        out["self_dual_basis"] = basis;
    }
    QuadraticExtension ext(f);
    ExtElem z = ext.norm_one_generator();
    out["quadratic_extension"] = json{
        {"minimal_polynomial", json::array({io::element_to_json(f, ext.constant_coefficient()),
                                            io::element_to_json(f, ext.linear_coefficient()),
                                            io::element_to_json(f, f.one())})},
        {"norm_one_generator", json::array({io::element_to_json(f, z.c0), io::element_to_json(f, z.c1)})},
        {"norm_one_order", ext.multiplicative_order(z)}};
    return out;
}

json cmd_multipliers_enumerate(const Options &opts) {
    Field f = make_field(opts);
    PhaseSpace space(f);
    SymplecticForm form = make_form(f, opts.lambda);
    auto family = enumerate_weyl_multipliers(space, form);
    json out{{"field", io::field_to_json(f)},
             {"lambda", io::element_to_json(f, form.scale)},
             {"count", family.size()},
             {"L", phase_modulus(f)}};
    if (opts.tables) {
        if (f.q() > 4) {
            throw Error(ErrorKind::InvalidInput, "--tables is limited to q <= 4");
        }
        json tables = json::array();
        for (long long k = 0; k < family.size(); k++) {
            tables.push_back(io::multiplier_to_json(family[k])["table"]);
        }
        out["tables"] = tables;
    }
    return out;
}

json cmd_multipliers_show(const Options &opts) {
    Field f = make_field(opts);
    PhaseSpace space(f);
    SymplecticForm form = make_form(f, opts.lambda);
    auto chosen = choose_multiplier(space, form, opts.multiplier);
    json out = io::multiplier_to_json(chosen.table);
    out["lambda"] = io::element_to_json(f, form.scale);
    out["source"] = chosen.source;
    out["weyl"] = is_weyl_multiplier(chosen.table, form);
    if (f.q() <= 8) {
        out["index"] = enumerate_weyl_multipliers(space, form).index_of(chosen.table);
    }
    return out;
}

json cmd_mub_generate(const Options &opts) {
    Field f = make_field(opts);
    PhaseSpace space(f);
    SymplecticForm form = make_form(f, opts.lambda);
    PhaseVector origin = make_origin(f, opts.origin);
    auto chosen = choose_multiplier(space, form, opts.multiplier);
    Tolerance tol{opts.tol, 1e-6};
    WeylSystem weyl = weyl_system_from_multiplier(chosen.table, form);
    QuadratureSystem system = quadratures_from_weyl(weyl, origin);
    AxiomReport report = verify_quadrature_axioms(system, tol);
    if (!report.ok()) {
        throw VerificationFailed{json{{"ok", false}, {"worst_residual", report.worst_residual()}}};
    }
    io::Bundle bundle{f, form, origin, chosen.table, system, opts.seed};
    return io::bundle_to_json(bundle, tool_version);
}

json cmd_mub_verify(const Options &opts) {
    if (opts.in.empty()) {
        throw Error(ErrorKind::InvalidInput, "mub verify needs --in");
    }
    std::ifstream file(opts.in);
    if (!file) {
        throw Error(ErrorKind::InvalidInput, "cannot open " + opts.in);
    }
    json j;
    try {
        j = json::parse(file);
    } catch (const json::exception &e) {
        throw Error(ErrorKind::InvalidInput, std::string("cannot parse bundle: ") + e.what());
    }
    io::Bundle bundle = io::bundle_from_json(j);
    Tolerance tol{opts.tol, 1e-6};
    AxiomReport axioms = verify_quadrature_axioms(bundle.system, tol);
    json out{{"field", io::field_to_json(bundle.field)},
             {"axioms",
              json{{"projections", axioms.projections_ok},
                   {"resolution", axioms.resolution_ok},
                   {"unbiased", axioms.unbiased_ok},
                   {"spanning", axioms.spanning_ok},
                   {"projection_residual", axioms.projection_residual},
                   {"resolution_residual", axioms.resolution_residual},
                   {"overlap_residual", axioms.overlap_residual},
                   {"span_rank", axioms.span_rank}}}};
    bool ok = axioms.ok();
    if (axioms.witness_line >= 0) {
        out["axioms"]["witness_line"] = io::line_to_json(bundle.system.space(), axioms.witness_line);
        out["axioms"]["witness_rank"] = axioms.witness_rank;
    }
    if (ok) {
        try {
            auto inv = quadrature_invariants(bundle.system, tol);
            bool form_ok = inv.form == bundle.form;
            bool multiplier_ok = inv.multiplier == bundle.multiplier;
            WeylSystem centered = centered_weyl_from_quadratures(bundle.system, bundle.origin, inv.form, tol);
            bool centered_ok = is_centered(bundle.system, centered, bundle.origin, tol);
            out["induced_form_matches"] = form_ok;
            out["multiplier_matches"] = multiplier_ok;
            out["centered_at_origin"] = centered_ok;
            ok = form_ok && multiplier_ok && centered_ok;
        } catch (const Error &e) {
            out["invariants_error"] = e.what();
            ok = false;
        }
    }
    out["ok"] = ok;
    if (!ok) {
        throw VerificationFailed{out};
    }
    return out;
}

json cmd_classify(const Options &opts) {
    Field f = make_field(opts);
    PhaseSpace space(f);
    auto sl = sl_enumerate(f);
    Torus torus = maximal_nonsplit_torus(f);
    json per_form = json::array();
    long long total = 0;
    for (int s = 1; s < f.q(); s++) {
        SymplecticForm form{f.element(s)};
        auto family = enumerate_weyl_multipliers(space, form);
        auto torus_fixed = invariant_multiplier_indices(family, torus.elements);
        // SL contains the torus, so only torus-invariant tables can be SL-invariant.
        long long sl_fixed = 0;
        for (long long k : torus_fixed) {
            auto m = family[k];
            sl_fixed += std::all_of(sl.begin(), sl.end(), [&](const LinearMap2 &a) { return pullback(m, a) == m; });
        }
        per_form.push_back(json{{"lambda", io::element_to_json(f, form.scale)},
                                {"count", family.size()},
                                {"sl_invariant", sl_fixed},
                                {"torus_invariant", torus_fixed.size()}});
        total += family.size();
    }
    json out{{"field", io::field_to_json(f)},
             {"per_form", per_form},
             {"per_form_count", per_form[0]["count"]},
             {"sl_invariant", per_form[0]["sl_invariant"]},
             {"torus_invariant", per_form[0]["torus_invariant"]},
             {"total_classes", total},
             {"method", "enumeration"}};
    if (f.q() <= 3) {
        // Build every system and count distinct (induced form, associated multiplier) pairs.
        std::set<std::pair<int, std::vector<std::uint8_t>>> keys;
        for (int s = 1; s < f.q(); s++) {
            SymplecticForm form{f.element(s)};
            auto family = enumerate_weyl_multipliers(space, form);
            for (long long k = 0; k < family.size(); k++) {
                auto inv = quadrature_invariants(quadratures_from_weyl(weyl_system_from_multiplier(family[k], form)));
                keys.insert({inv.form.scale.index, inv.multiplier.values()});
            }
        }
        out["method"] = "pairing";
        out["total_classes"] = keys.size();
    }
    return out;
}

json cmd_torus(const Options &opts) {
    Field f = make_field(opts);
    PhaseSpace space(f);
    Torus torus = maximal_nonsplit_torus(f);
    json elements = json::array();
    json split = json::array();
    for (const auto &a : torus.elements) {
        elements.push_back(io::map_to_json(f, a));
        if (!is_nonsplit(f, a)) {
            split.push_back(io::map_to_json(f, a));
        }
    }
    json orbits = json::array();
    for (const auto &orbit : orbits_on_directions(space, torus.elements)) {
        json o = json::array();
        for (int d : orbit) {
            o.push_back(direction_to_json(space, d));
        }
        orbits.push_back(o);
    }
    return json{{"field", io::field_to_json(f)}, {"generator", io::map_to_json(f, torus.generator)},
                {"order", torus.elements.size()},   {"elements", elements},
                {"split_elements", split},          {"orbits", orbits}};
}

json cmd_metaplectic(const Options &opts) {
    Field f = make_field(opts);
    PhaseSpace space(f);
    SymplecticForm form = make_form(f, opts.lambda);
    Torus torus = maximal_nonsplit_torus(f);
    Tolerance tol{opts.tol, 1e-6};
    MultiplierTable table = reference_weyl_multiplier(space, form);
    std::string source;
    if (opts.multiplier.empty() && f.p() != 2) {
        table = symmetric_multiplier(space, form);
        source = "symmetric";
    } else if (opts.multiplier.empty()) {
        table = torus_average(reference_weyl_multiplier(space, form), torus.elements);
        source = "torus average";
    } else {
        auto chosen = choose_multiplier(space, form, opts.multiplier);
        table = chosen.table;
        source = chosen.source;
    }
    WeylSystem weyl = weyl_system_from_multiplier(table, form);
    ComplexMatrix raw = metaplectic_operator(weyl, torus.generator, 1.0, tol);
    TorusRepresentation rep = ordinary_phase_fix(torus, raw, tol);
    json ops = json::array();
    double worst = 0.0;
    for (std::size_t k = 0; k < torus.elements.size(); k++) {
        double residual = metaplectic_residual(weyl, torus.elements[k], rep.ops[k]);
        worst = std::max(worst, residual);
        ops.push_back(json{{"map", io::map_to_json(f, torus.elements[k])}, {"operator", io::matrix_to_json(rep.ops[k])}});
    }
    if (worst > tol.identity) {
        throw VerificationFailed{json{{"ok", false}, {"covariance_residual", worst}}};
    }
    return json{{"field", io::field_to_json(f)},
                {"lambda", io::element_to_json(f, form.scale)},
                {"multiplier_source", source},
                {"multiplier", io::multiplier_to_json(table)},
                {"generator", io::map_to_json(f, torus.generator)},
                {"raw_generator_operator", io::matrix_to_json(raw)},
                {"phase", complex_to_json(rep.scale)},
                {"power_scalar", complex_to_json(rep.power_scalar)},
                {"operators", ops},
                {"covariance_residual", worst}};
}

json cmd_probe_sl(const Options &opts) {
    Field f = make_field(opts);
    PhaseSpace space(f);
    SymplecticForm form = make_form(f, opts.lambda);
    auto chosen = choose_multiplier(space, form, opts.multiplier);
    Tolerance tol{opts.tol, 1e-6};
    WeylSystem weyl = weyl_system_from_multiplier(chosen.table, form);
    SlProbe probe = sl_extension_probe(weyl, tol);
    json phases = json::array();
    json involutions = json::array();
    for (std::size_t i = 0; i < probe.group.size(); i++) {
        phases.push_back(json{{"map", io::map_to_json(f, probe.group[i])},
                              {"phase", io::phase_function_to_json(probe.phases[i])}});
        LinearMap2 sq = compose(f, probe.group[i], probe.group[i]);
        if (sq == identity_map(f) && probe.group[i] != identity_map(f)) {
            ComplexMatrix u2 = probe.unitaries[i] * probe.unitaries[i];
            Complex scalar = u2.trace() / static_cast<double>(u2.rows());
            involutions.push_back(json{{"map", io::map_to_json(f, probe.group[i])},
                                       {"square_scalar", complex_to_json(scalar)},
                                       {"square_is_scalar", max_abs_diff(u2, scalar * ComplexMatrix::Identity(
                                                                                          u2.rows(), u2.cols())) <=
                                                                tol.identity}});
        }
    }
    return json{{"field", io::field_to_json(f)},
                {"lambda", io::element_to_json(f, form.scale)},
                {"multiplier_source", chosen.source},
                {"group_order", probe.group.size()},
                {"defective_pairs", probe.defective_pairs},
                {"defect_free", probe.defect_free},
                {"gauge_searched", probe.gauge_searched},
                {"conclusive", probe.conclusive()},
                {"phases", phases},
                {"involutions", involutions}};
}

json cmd_demo_qubit() {
    json checks = json::array();
    bool ok = true;
    for (const auto &c : run_qubit_demo()) {
        checks.push_back(json{{"name", c.name}, {"passed", c.passed}, {"residual", c.residual}});
        ok = ok && c.passed;
    }
    json out{{"checks", checks}, {"ok", ok}};
    if (!ok) {
        throw VerificationFailed{out};
    }
    return out;
}

void emit(const json &j, const Options &opts, std::ostream &out) {
    std::string text = opts.pretty ? j.dump(2) : j.dump();
    if (opts.out.empty()) {
        out << text << "\n";
        return;
    }
    std::ofstream file(opts.out, std::ios::binary);
    if (!file) {
        throw Error(ErrorKind::InvalidInput, "cannot write " + opts.out);
    }
    file << text << "\n";
}

}  // namespace

int run_cli(const std::vector<std::string> &args, std::ostream &out, std::ostream &err) {
    CLI::App app{"Covariant mutually unbiased bases over finite phase spaces"};
    app.require_subcommand(1);
    Options opts;
    std::function<json()> action;

    auto add_common = [&](CLI::App *cmd) {
        cmd->add_option("--out", opts.out, "Write the JSON result to this file");
        cmd->add_option("--tol", opts.tol, "Tolerance for identities")->check(CLI::PositiveNumber);
        cmd->add_option("--seed", opts.seed, "Seed for randomised fallbacks");
        cmd->add_flag("--pretty", opts.pretty, "Indented JSON");
    };
    auto add_field = [&](CLI::App *cmd) {
        cmd->add_option("--field", opts.field, "Field as p or p^r")->required();
        cmd->add_option("--poly", opts.poly, "Modulus coefficients c0,...,cr");
        add_common(cmd);
    };
    auto add_form = [&](CLI::App *cmd) {
        add_field(cmd);
        cmd->add_option("--lambda", opts.lambda, "Symplectic scale as a packed field element");
    };
    auto add_multiplier = [&](CLI::App *cmd) {
        cmd->add_option("--multiplier", opts.multiplier, "inv | dual-basis | index:k | path to a multiplier JSON file");
    };

    auto *field = app.add_subcommand("field", "Field arithmetic");
    field->require_subcommand(1);
    auto *field_info = field->add_subcommand("info", "Describe a field");
    add_field(field_info);
    field_info->callback([&] { action = [&] { return cmd_field_info(opts); }; });

    auto *multipliers = app.add_subcommand("multipliers", "Weyl multipliers");
    multipliers->require_subcommand(1);
    auto *enumerate = multipliers->add_subcommand("enumerate", "Count (and optionally list) Weyl multipliers");
    add_form(enumerate);
    enumerate->add_flag("--tables", opts.tables, "Include every table (q <= 4)");
    enumerate->callback([&] { action = [&] { return cmd_multipliers_enumerate(opts); }; });
    auto *show = multipliers->add_subcommand("show", "Print one Weyl multiplier");
    add_form(show);
    add_multiplier(show);
    show->callback([&] { action = [&] { return cmd_multipliers_show(opts); }; });

    auto *mub = app.add_subcommand("mub", "Quadrature systems");
    mub->require_subcommand(1);
    auto *generate = mub->add_subcommand("generate", "Build a translation-covariant quadrature system");
    add_form(generate);
    add_multiplier(generate);
    generate->add_option("--origin", opts.origin, "Origin x,y as packed field elements");
    generate->callback([&] { action = [&] { return cmd_mub_generate(opts); }; });
    auto *verify = mub->add_subcommand("verify", "Check a bundle written by mub generate");
    verify->add_option("--in", opts.in, "Bundle file")->required();
    add_common(verify);
    verify->callback([&] { action = [&] { return cmd_mub_verify(opts); }; });

    auto *classify = app.add_subcommand("classify", "Count equivalence classes");
    add_field(classify);
    classify->callback([&] { action = [&] { return cmd_classify(opts); }; });

    auto *torus = app.add_subcommand("torus", "Maximal nonsplit torus");
    add_field(torus);
    torus->callback([&] { action = [&] { return cmd_torus(opts); }; });

    auto *metaplectic = app.add_subcommand("metaplectic", "Torus metaplectic representation");
    add_form(metaplectic);
    add_multiplier(metaplectic);
    metaplectic->callback([&] { action = [&] { return cmd_metaplectic(opts); }; });

    auto *probe = app.add_subcommand("probe-sl", "Try to extend covariance to SL(2)");
    add_form(probe);
    add_multiplier(probe);
    probe->callback([&] { action = [&] { return cmd_probe_sl(opts); }; });

    auto *demo = app.add_subcommand("demo", "Worked examples");
    demo->require_subcommand(1);
    auto *qubit = demo->add_subcommand("qubit", "The single-qubit example");
    add_common(qubit);
    qubit->callback([&] { action = [&] { return cmd_demo_qubit(); }; });

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::ParseError &e) {
        int code = app.exit(e, out, err);
        return code == 0 ? exit_ok : exit_invalid_config;
    }
    try {
        emit(action(), opts, out);
        return exit_ok;
    } catch (const VerificationFailed &failure) {
        emit(failure.report, opts, out);
        err << "verification failed\n";
        return exit_verification_failure;
    } catch (const Error &e) {
        err << "error: " << e.what() << "\n";
        return exit_code_for(e.kind());
    } catch (const std::exception &e) {
        err << "error: " << e.what() << "\n";
        return exit_invalid_config;
    }
}

}  // namespace covmub
