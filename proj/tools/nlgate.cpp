// nlgate: validate, synthesize, simulate and report on bipartite unitaries
// given in group / controlled / double form.
//
// Exit codes: 0 success, 1 verification failure, 2 input error.

#include "nlg/problem_file.hpp"
#include "nlg/rand.hpp"
#include "nlg/strength.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>

using namespace nlg;
using nlohmann::json;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitVerificationFailure = 1;
constexpr int kExitInputError = 2;

struct CommonArgs {
    std::string path;
    std::string catalog_name;
    std::size_t dim = 0;
    std::string json_out;
    double tolerance = 1e-9;
    double rank_tol = 1e-8;
    std::uint64_t seed = 12345;
    std::size_t restarts = 32;
    bool seed_set = false;
    bool restarts_set = false;
    bool with_strength = false;
};

void add_common(CLI::App* cmd, CommonArgs& args, bool with_input) {
    if (with_input) {
        cmd->add_option("path", args.path, "problem file (JSON)");
        cmd->add_option("--catalog", args.catalog_name, "built-in catalog entry name");
        cmd->add_option("--dim", args.dim, "catalog variant selector (dA)");
    }
    cmd->add_option("--json-out", args.json_out, "write machine-readable output to PATH");
    cmd->add_option("--tolerance", args.tolerance, "residual gate tolerance")
        ->default_val(1e-9);
    cmd->add_option("--rank-tol", args.rank_tol, "relative rank threshold")->default_val(1e-8);
    cmd->add_option("--seed", args.seed, "pseudorandom seed")->each([&](const std::string&) {
        args.seed_set = true;
    });
    cmd->add_option("--restarts", args.restarts, "estimator restarts")
        ->each([&](const std::string&) { args.restarts_set = true; });
}

/// Loads either a problem file or a catalog variant; returns the problem in
/// file form so all commands share one path.
Problem resolve_input(const CommonArgs& args) {
    if (!args.catalog_name.empty()) {
        const CatalogEntry& entry = catalog_lookup(args.catalog_name);
        const CatalogVariant& variant =
            args.dim ? entry.variant_for_dim(args.dim) : entry.default_variant();
        return problem_from_catalog(entry, variant);
    }
    if (args.path.empty())
        throw ParseError("need a problem file path or --catalog NAME");
    return load_problem(args.path);
}

void apply_option_overrides(Problem& p, const CommonArgs& args) {
    p.options.tolerance = args.tolerance;
    p.options.rank_tol = args.rank_tol;
    if (args.seed_set)
        p.options.seed = args.seed;
    if (args.restarts_set)
        p.options.restarts = args.restarts;
}

void write_json(const std::string& path, const json& j) {
    std::ofstream out(path);
    if (!out)
        throw ParseError("cannot write '" + path + "'");
    out << j.dump(2) << "\n";
}

int cmd_validate(const CommonArgs& args) {
    Problem p = resolve_input(args);
    ProblemCheck check = validate_problem(p);
    if (check.ok()) {
        std::printf("valid: group order %zu, form %s\n", p.group.order, p.form.kind.c_str());
    } else {
        std::printf("INVALID:\n");
        for (const auto& v : check.report.violations)
            std::printf("  - %s\n", v.c_str());
    }
    if (check.assembled_unitarity >= 0.0)
        std::printf("assembled unitarity residual: %.3e\n", check.assembled_unitarity);
    if (check.w_condition >= 0.0)
        std::printf("W condition residual: %.3e\n", check.w_condition);
    if (check.c_condition >= 0.0)
        std::printf("c condition residual: %.3e\n", check.c_condition);
    if (!args.json_out.empty()) {
        json j;
        j["schemaVersion"] = 1;
        j["valid"] = check.ok();
        j["violations"] = check.report.violations;
        write_json(args.json_out, j);
    }
    return check.ok() ? kExitOk : kExitVerificationFailure;
}

int cmd_synth(const CommonArgs& args) {
    Problem p = resolve_input(args);
    apply_option_overrides(p, args);
    ProblemCheck check = validate_problem(p);
    if (!check.ok()) {
        std::printf("INVALID input:\n%s\n", check.report.summary().c_str());
        return kExitVerificationFailure;
    }
    FormVariant form = materialize_form(p);
    const Matrix& u = assembled_of(form);
    const std::size_t dA = form_dA(form), dB = form_dB(form);
    const std::size_t sr = operator_schmidt_rank(u, dA, dB, p.options.rank_tol);

    std::printf("assembled U (%zux%zu), dA=%zu dB=%zu\n", u.rows(), u.cols(), dA, dB);
    std::printf("unitarity residual: %.3e\n", unitarity_residual(u));
    std::printf("operator Schmidt rank: %zu\n", sr);

    json extras;
    if (args.with_strength) {
        StrengthOptions so;
        so.restarts = p.options.restarts;
        so.seed = p.options.seed;
        const std::size_t n = p.group.order;
        const auto bound =
            resource_bound_check(u, dA, dB, n, std::log2(static_cast<double>(n)), so);
        std::printf("entangling strength estimate (%zu restarts): %.6f ebits\n", so.restarts,
                    bound.strength_estimate);
        std::printf("resource bound vs rank-%zu uniform state: %s\n", n,
                    bound.summary().c_str());
        extras["strengthEstimate"] = bound.strength_estimate;
        extras["resourceBoundPass"] = bound.pass;
    }
    if (const auto* gfu = std::get_if<GroupFormUnitary>(&form)) {
        const Matrix m = assemble_M(gfu->rep.factor_system, gfu->wfam);
        std::printf("span dimension of {U(f)}: %zu\n", span_dimension(gfu->rep));
        std::printf("W condition residual: %.3e\n",
                    check_W_condition(gfu->rep.factor_system, gfu->wfam));
        std::printf("M (%zux%zu) unitarity residual: %.3e\n", m.rows(), m.cols(),
                    unitarity_residual(m));
        std::printf("\nU =\n%s", to_string(u).c_str());
        std::printf("\nM =\n%s", to_string(m).c_str());
        for (std::size_t f = 0; f < gfu->wfam.w.size(); ++f)
            std::printf("\nW(%s) =\n%s", gfu->rep.group.labels[f].c_str(),
                        to_string(gfu->wfam.w[f]).c_str());
        extras["M"] = matrix_to_json(m);
    } else if (const auto* du = std::get_if<DoubleUnitary>(&form)) {
        const Matrix m = factorized_M(*du);
        std::printf("span dimension of {U(f)}: %zu\n", span_dimension(du->repA));
        std::printf("c condition residual: %.3e\n", check_c_condition(*du));
        std::printf("C unitarity residual: %.3e\n", unitarity_residual(du->c_operator));
        std::printf("\nU =\n%s", to_string(u).c_str());
        std::printf("\nC =\n%s", to_string(du->c_operator).c_str());
        extras["C"] = matrix_to_json(du->c_operator);
        extras["M"] = matrix_to_json(m);
    } else {
        std::printf("\nU =\n%s", to_string(u).c_str());
    }

    if (!args.json_out.empty()) {
        json j = problem_to_json(p);
        j["results"] = json{{"assembled", matrix_to_json(u)},
                            {"unitarityResidual", unitarity_residual(u)},
                            {"schmidtRank", sr}};
        for (auto& [k, v] : extras.items())
            j["results"][k] = v;
        write_json(args.json_out, j);
    }
    return kExitOk;
}

ProtocolSpec spec_for(const FormVariant& form) {
    if (const auto* gfu = std::get_if<GroupFormUnitary>(&form))
        return group_protocol_spec(*gfu);
    if (const auto* cu = std::get_if<ControlledUnitary>(&form))
        return controlled_protocol_spec(*cu);
    return double_protocol_spec(std::get<DoubleUnitary>(form));
}

int cmd_simulate(const CommonArgs& args) {
    Problem p = resolve_input(args);
    apply_option_overrides(p, args);
    ProblemCheck check = validate_problem(p);
    if (!check.ok()) {
        std::printf("INVALID input:\n%s\n", check.report.summary().c_str());
        return kExitVerificationFailure;
    }
    FormVariant form = materialize_form(p);
    ProtocolSpec spec = spec_for(form);
    Rng rng(p.options.seed);
    StateVector input({spec.dA, spec.dB}, random_state(rng, spec.dA * spec.dB));
    ProtocolTranscript t = simulate(spec, input);
    InfoAbsenceReport info = information_absence_check(t, p.options.tolerance);

    std::printf("branches: %zu (N = %zu)\n", t.branches.size(), t.N);
    std::printf("worst Kraus residual vs target/N: %.3e\n", t.worst_residual());
    std::printf("branch probability spread: %.3e\n", t.probability_spread());
    std::printf("completeness residual: %.3e\n", t.completeness_residual);
    std::printf("form condition residual: %.3e%s\n", t.form_condition_residual,
                t.flagged_invalid ? "  (FLAGGED invalid)" : "");
    std::printf("information absence: %s\n", info.summary().c_str());
    if (!args.json_out.empty())
        write_json(args.json_out, transcript_to_json(t, info));
    return info.pass ? kExitOk : kExitVerificationFailure;
}

int cmd_report(const CommonArgs& args) {
    bool all_match = true;
    json lines = json::array();
    std::printf("%-18s %-8s %6s %6s %10s %8s\n", "entry", "dims", "SR", "expect", "unitarity",
                "match");
    for (const auto& entry : catalog()) {
        for (const auto& v : entry.variants) {
            const Matrix& u = assembled_of(v.form);
            const std::size_t sr = operator_schmidt_rank(u, v.dA, v.dB, args.rank_tol);
            const double res = unitarity_residual(u);
            const bool match = sr == v.expected_schmidt_rank && res < 1e-10;
            all_match = all_match && match;
            char dims[32];
            std::snprintf(dims, sizeof(dims), "%zux%zu", v.dA, v.dB);
            std::printf("%-18s %-8s %6zu %6zu %10.2e %8s\n", entry.name.c_str(), dims, sr,
                        v.expected_schmidt_rank, res, match ? "ok" : "MISMATCH");
            lines.push_back(json{{"entry", entry.name},
                                 {"dA", v.dA},
                                 {"dB", v.dB},
                                 {"schmidtRank", sr},
                                 {"expected", v.expected_schmidt_rank},
                                 {"unitarityResidual", res},
                                 {"match", match}});
        }
    }
    std::printf("%s\n", all_match ? "all entries match" : "MISMATCHES FOUND");
    if (!args.json_out.empty()) {
        json j;
        j["schemaVersion"] = 1;
        j["rows"] = std::move(lines);
        j["allMatch"] = all_match;
        write_json(args.json_out, j);
    }
    return all_match ? kExitOk : kExitVerificationFailure;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"group-form bipartite unitary synthesis and protocol simulation"};
    app.require_subcommand(1);

    CommonArgs validate_args, synth_args, simulate_args, report_args;
    auto* validate = app.add_subcommand("validate", "structural checks on a problem file");
    add_common(validate, validate_args, true);
    auto* synth = app.add_subcommand("synth", "assemble U, M/C and report ranks");
    add_common(synth, synth_args, true);
    synth->add_flag("--strength", synth_args.with_strength,
                    "also estimate entangling strength and check resource bounds");
    auto* simulate = app.add_subcommand("simulate", "exhaustive branch simulation");
    add_common(simulate, simulate_args, true);
    auto* report = app.add_subcommand("report", "catalog reproduction table");
    std::string report_scope = "all";
    report->add_option("--catalog", report_scope, "'all' (default)");
    add_common(report, report_args, false);

    try {
        app.parse(argc, argv);
        if (validate->parsed())
            return cmd_validate(validate_args);
        if (synth->parsed())
            return cmd_synth(synth_args);
        if (simulate->parsed())
            return cmd_simulate(simulate_args);
        if (report->parsed())
            return cmd_report(report_args);
    } catch (const CLI::ParseError& e) {
        return app.exit(e) ? kExitInputError : kExitOk;
    } catch (const ParseError& e) {
        std::fprintf(stderr, "input error: %s\n", e.what());
        return kExitInputError;
    } catch (const LookupError& e) {
        std::fprintf(stderr, "input error: %s\n", e.what());
        return kExitInputError;
    } catch (const std::exception& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return kExitVerificationFailure;
    }
    return kExitInputError;
}
