#include "nlg/problem_file.hpp"

#include <fstream>

namespace nlg {

using nlohmann::json;

cx parse_complex(const json& j) {
    if (j.is_number())
        return cx(j.get<double>(), 0.0);
    if (j.is_array()) {
        if (j.size() != 2 || !j[0].is_number() || !j[1].is_number())
            throw ParseError("complex value must be [re, im]");
        return cx(j[0].get<double>(), j[1].get<double>());
    }
    if (j.is_object() && j.contains("rootOfUnity")) {
        const auto& r = j["rootOfUnity"];
        if (!r.is_array() || r.size() != 2)
            throw ParseError("rootOfUnity must be [k, n]");
        return root_of_unity(r[0].get<long long>(), r[1].get<long long>());
    }
    throw ParseError("cannot parse complex value: " + j.dump());
}

Matrix parse_matrix(const json& j) {
    if (!j.is_array() || j.empty())
        throw ParseError("matrix must be a non-empty array of rows");
    const std::size_t rows = j.size();
    const std::size_t cols = j[0].is_array() ? j[0].size() : 0;
    if (cols == 0)
        throw ParseError("matrix rows must be non-empty arrays");
    Matrix m(rows, cols);
    for (std::size_t i = 0; i < rows; ++i) {
        if (!j[i].is_array() || j[i].size() != cols)
            throw ParseError("matrix rows must all have the same length");
        for (std::size_t k = 0; k < cols; ++k)
            m(i, k) = parse_complex(j[i][k]);
    }
    return m;
}

json complex_to_json(cx z) {
    return json::array({z.real(), z.imag()});
}

json matrix_to_json(const Matrix& m) {
    json rows = json::array();
    for (std::size_t i = 0; i < m.rows(); ++i) {
        json row = json::array();
        for (std::size_t k = 0; k < m.cols(); ++k)
            row.push_back(complex_to_json(m(i, k)));
        rows.push_back(std::move(row));
    }
    return rows;
}

namespace {

FiniteGroup parse_group(const json& j) {
    if (j.contains("kind")) {
        const std::string kind = j["kind"].get<std::string>();
        if (kind == "cyclic")
            return cyclic_group(j.at("n").get<std::size_t>());
        if (kind == "dihedral")
            return dihedral_group(j.at("n").get<std::size_t>());
        if (kind == "symmetric3")
            return symmetric3_group();
        if (kind == "directProduct") {
            const auto& factors = j.at("factors");
            if (!factors.is_array() || factors.size() != 2)
                throw ParseError("directProduct needs exactly two factors");
            return direct_product(parse_group(factors[0]), parse_group(factors[1]));
        }
        throw ParseError("unknown group kind '" + kind + "'");
    }
    if (!j.contains("table"))
        throw ParseError("group section needs either 'kind' or 'table'");
    std::vector<std::vector<std::size_t>> table;
    for (const auto& row : j["table"])
        table.push_back(row.get<std::vector<std::size_t>>());
    std::vector<std::string> labels;
    if (j.contains("labels"))
        labels = j["labels"].get<std::vector<std::string>>();
    return FiniteGroup::from_table(std::move(table), std::move(labels));
}

FactorSystem parse_factor_system(const json& j, const FiniteGroup& group) {
    if (j.contains("trivial"))
        return trivial_factor_system(group);
    if (j.contains("xz")) {
        FactorSystem fs = xz_factor_system(j["xz"].get<std::size_t>()).factor_system;
        fs.group = group;
        if (fs.mu.size() != group.order)
            throw ParseError("xz factor system size does not match the group order");
        return fs;
    }
    if (j.contains("d4Projective")) {
        FactorSystem fs = d4_projective_factor_system();
        fs.group = group;
        if (fs.mu.size() != group.order)
            throw ParseError("d4Projective factor system needs a group of order 8");
        return fs;
    }
    FactorSystem fs;
    fs.group = group;
    if (j.contains("mu")) {
        for (const auto& row : j["mu"]) {
            std::vector<cx> r;
            for (const auto& v : row)
                r.push_back(parse_complex(v));
            fs.mu.push_back(std::move(r));
        }
    } else if (j.contains("exponents")) {
        const auto& e = j["exponents"];
        const long long den = e.at("denominator").get<long long>();
        for (const auto& row : e.at("table")) {
            std::vector<cx> r;
            for (const auto& v : row)
                r.push_back(root_of_unity(v.get<long long>(), den));
            fs.mu.push_back(std::move(r));
        }
    } else {
        throw ParseError("factorSystem needs trivial/xz/d4Projective/mu/exponents");
    }
    if (fs.mu.size() != group.order)
        throw ParseError("factor system table size does not match the group order");
    for (const auto& row : fs.mu)
        if (row.size() != group.order)
            throw ParseError("factor system rows must have group-order length");
    return fs;
}

IrrepSet parse_irreps(const json& j, const FiniteGroup& group, const FactorSystem& fs) {
    if (j.is_object() && j.contains("builtin")) {
        const std::string which = j["builtin"].get<std::string>();
        if (which == "s3")
            return s3_irrep_set();
        if (which == "d4-ordinary")
            return d4_ordinary_irrep_set();
        if (which == "d4-projective")
            return d4_projective_irrep_set();
        if (which == "cyclic")
            return cyclic_irrep_set(j.at("n").get<std::size_t>());
        if (which == "xz")
            return xz_irrep_set(j.at("n").get<std::size_t>());
        throw ParseError("unknown builtin irrep set '" + which + "'");
    }
    if (!j.is_array())
        throw ParseError("irreps must be a builtin reference or an array");
    IrrepSet set;
    set.group = group;
    set.factor_system = fs;
    std::size_t label = 0;
    for (const auto& ij : j) {
        Irrep ir;
        ir.label = label++;
        ir.dim = ij.at("dim").get<std::size_t>();
        for (const auto& mj : ij.at("matrices"))
            ir.matrices.push_back(parse_matrix(mj));
        if (ir.matrices.size() != group.order)
            throw ParseError("irrep needs one matrix per group element");
        set.irreps.push_back(std::move(ir));
    }
    return set;
}

RawRep parse_rep(const json& j) {
    RawRep rep;
    if (j.contains("pattern")) {
        rep.pattern = j["pattern"].get<std::vector<std::size_t>>();
        return rep;
    }
    if (!j.contains("matrices"))
        throw ParseError("representation needs 'matrices' or 'pattern'");
    for (const auto& mj : j["matrices"])
        rep.matrices.push_back(parse_matrix(mj));
    return rep;
}

std::vector<Matrix> parse_matrix_list(const json& j) {
    std::vector<Matrix> out;
    for (const auto& mj : j)
        out.push_back(parse_matrix(mj));
    return out;
}

RawForm parse_form(const json& j) {
    RawForm form;
    form.kind = j.at("type").get<std::string>();
    if (form.kind == "groupForm") {
        form.repA = parse_rep(j.at("repA"));
        form.w = parse_matrix_list(j.at("w"));
    } else if (form.kind == "qBlocks") {
        form.repA = parse_rep(j.at("repA"));
        form.dB = j.at("dB").get<std::size_t>();
        for (const auto& bj : j.at("blocks"))
            form.blocks.push_back(bj.is_null() ? Matrix() : parse_matrix(bj));
    } else if (form.kind == "controlled") {
        form.projectors = parse_matrix_list(j.at("projectors"));
        form.unitaries = parse_matrix_list(j.at("unitaries"));
    } else if (form.kind == "double") {
        form.repA = parse_rep(j.at("repA"));
        form.repB = parse_rep(j.at("repB"));
        for (const auto& v : j.at("c"))
            form.c.push_back(parse_complex(v));
    } else if (form.kind == "rBlocks") {
        form.repA = parse_rep(j.at("repA"));
        form.repB = parse_rep(j.at("repB"));
        form.blocks = parse_matrix_list(j.at("blocks"));
    } else {
        throw ParseError("unknown form type '" + form.kind + "'");
    }
    return form;
}

} // namespace

Problem parse_problem(const json& j) {
    try {
        Problem p;
        if (j.contains("schemaVersion"))
            p.schema_version = j["schemaVersion"].get<int>();
        if (j.contains("name"))
            p.name = j["name"].get<std::string>();
        if (j.contains("group")) {
            p.group = parse_group(j["group"]);
        } else if (j.contains("form") && j["form"].contains("type") &&
                   j["form"]["type"] == "controlled") {
            // controlled files may omit the group; it is cyclic of order N
            p.group = cyclic_group(j["form"].at("projectors").size());
        } else {
            throw ParseError("missing group section");
        }
        p.factor_system = j.contains("factorSystem")
                              ? parse_factor_system(j["factorSystem"], p.group)
                              : trivial_factor_system(p.group);
        if (j.contains("irreps"))
            p.irreps = parse_irreps(j["irreps"], p.group, p.factor_system);
        p.form = parse_form(j.at("form"));
        if (j.contains("options")) {
            const auto& o = j["options"];
            if (o.contains("tolerance"))
                p.options.tolerance = o["tolerance"].get<double>();
            if (o.contains("rankTol"))
                p.options.rank_tol = o["rankTol"].get<double>();
            if (o.contains("seed"))
                p.options.seed = o["seed"].get<std::uint64_t>();
            if (o.contains("restarts"))
                p.options.restarts = o["restarts"].get<std::size_t>();
        }
        return p;
    } catch (const json::exception& e) {
        throw ParseError(std::string("schema error: ") + e.what());
    }
}

Problem load_problem(const std::string& path) {
    std::ifstream in(path);
    if (!in)
        throw ParseError("cannot open '" + path + "'");
    json j;
    try {
        in >> j;
    } catch (const json::exception& e) {
        throw ParseError(std::string("malformed JSON in ") + path + ": " + e.what());
    }
    return parse_problem(j);
}

namespace {

// Resolves a RawRep to a ProjectiveRep. Explicit matrices get their factor
// system recovered numerically unless `use_fs` is supplied.
ProjectiveRep resolve_rep(const RawRep& raw, const Problem& p, const FactorSystem* use_fs) {
    if (raw.pattern) {
        if (!p.irreps)
            throw ValidationError("pattern representation needs an irreps section");
        MultiplicityPattern pattern{*raw.pattern};
        return block_diagonal_rep(*p.irreps, pattern).rep;
    }
    if (raw.matrices.size() != p.group.order)
        throw ValidationError("representation needs one matrix per group element");
    const FactorSystem fs =
        use_fs ? *use_fs : factor_system_from_matrices(p.group, raw.matrices);
    return make_projective_rep(p.group, fs, raw.matrices);
}

WFamily w_family_of(const std::vector<Matrix>& mats) {
    WFamily w;
    w.dB = mats.empty() ? 0 : mats[0].rows();
    w.w = mats;
    return w;
}

} // namespace

FormVariant materialize_form(const Problem& p) {
    const RawForm& f = p.form;
    if (f.kind == "groupForm") {
        ProjectiveRep rep = resolve_rep(f.repA, p, &p.factor_system);
        return assemble_group_unitary(rep, w_family_of(f.w));
    }
    if (f.kind == "qBlocks") {
        if (!p.irreps)
            throw ValidationError("qBlocks form needs an irreps section");
        if (f.blocks.size() != p.irreps->count())
            throw ValidationError("qBlocks needs one block (or null) per irrep");
        QBlockFamily q;
        q.dB = f.dB;
        for (std::size_t l = 0; l < f.blocks.size(); ++l)
            q.blocks.push_back(f.blocks[l].empty()
                                   ? Matrix::identity(p.irreps->dim_of(l) * f.dB)
                                   : f.blocks[l]);
        ProjectiveRep rep = resolve_rep(f.repA, p, &p.factor_system);
        return assemble_group_unitary(rep, synthesize_W(*p.irreps, q));
    }
    if (f.kind == "controlled")
        return assemble_controlled(f.projectors, f.unitaries);
    if (f.kind == "double" || f.kind == "rBlocks") {
        ProjectiveRep repA = resolve_rep(f.repA, p, &p.factor_system);
        ProjectiveRep repB = resolve_rep(f.repB, p, nullptr);
        std::vector<cx> c = f.c;
        if (f.kind == "rBlocks") {
            if (!p.irreps)
                throw ValidationError("rBlocks form needs an irreps section (for gamma)");
            RBlockFamily r;
            r.blocks = f.blocks;
            c = synthesize_c(*p.irreps, r);
        }
        return assemble_double(c, repA, repB);
    }
    throw ValidationError("unknown form kind '" + f.kind + "'");
}

ProblemCheck validate_problem(const Problem& p) {
    ProblemCheck check;
    {
        auto r = validate_group(p.group);
        for (auto& v : r.violations)
            check.report.add("group: " + v);
    }
    {
        auto r = validate_factor_system(p.factor_system);
        for (auto& v : r.violations)
            check.report.add("factorSystem: " + v);
    }
    if (p.irreps) {
        auto r = validate_irrep_set(*p.irreps);
        for (auto& v : r.violations)
            check.report.add("irreps: " + v);
    }
    if (!check.report.ok())
        return check;
    try {
        FormVariant form = materialize_form(p);
        check.assembled_unitarity = unitarity_residual(assembled_of(form));
        if (const auto* gfu = std::get_if<GroupFormUnitary>(&form)) {
            auto r = validate_projective_rep(gfu->rep);
            for (auto& v : r.violations)
                check.report.add("repA: " + v);
            check.w_condition = check_W_condition(gfu->rep.factor_system, gfu->wfam);
        } else if (const auto* du = std::get_if<DoubleUnitary>(&form)) {
            auto ra = validate_projective_rep(du->repA);
            for (auto& v : ra.violations)
                check.report.add("repA: " + v);
            auto rb = validate_projective_rep(du->repB);
            for (auto& v : rb.violations)
                check.report.add("repB: " + v);
            check.c_condition = check_c_condition(*du);
        }
    } catch (const std::exception& e) {
        check.report.add(std::string("form: ") + e.what());
    }
    return check;
}

namespace {

json group_to_json(const FiniteGroup& g) {
    json j;
    j["table"] = g.table;
    j["labels"] = g.labels;
    return j;
}

json factor_system_to_json(const FactorSystem& fs) {
    if (fs.is_trivial())
        return json{{"trivial", true}};
    json rows = json::array();
    for (const auto& row : fs.mu) {
        json r = json::array();
        for (cx v : row)
            r.push_back(complex_to_json(v));
        rows.push_back(std::move(r));
    }
    return json{{"mu", std::move(rows)}};
}

json matrix_list_to_json(const std::vector<Matrix>& mats) {
    json j = json::array();
    for (const auto& m : mats)
        j.push_back(matrix_to_json(m));
    return j;
}

json rep_to_json(const RawRep& rep) {
    if (rep.pattern)
        return json{{"pattern", *rep.pattern}};
    return json{{"matrices", matrix_list_to_json(rep.matrices)}};
}

} // namespace

json problem_to_json(const Problem& p) {
    json j;
    j["schemaVersion"] = p.schema_version;
    if (!p.name.empty())
        j["name"] = p.name;
    j["group"] = group_to_json(p.group);
    j["factorSystem"] = factor_system_to_json(p.factor_system);
    if (p.irreps) {
        json irreps = json::array();
        for (const auto& ir : p.irreps->irreps)
            irreps.push_back(json{{"dim", ir.dim}, {"matrices", matrix_list_to_json(ir.matrices)}});
        j["irreps"] = std::move(irreps);
    }
    json form;
    form["type"] = p.form.kind;
    if (p.form.kind == "groupForm") {
        form["repA"] = rep_to_json(p.form.repA);
        form["w"] = matrix_list_to_json(p.form.w);
    } else if (p.form.kind == "qBlocks") {
        form["repA"] = rep_to_json(p.form.repA);
        form["dB"] = p.form.dB;
        form["blocks"] = matrix_list_to_json(p.form.blocks);
    } else if (p.form.kind == "controlled") {
        form["projectors"] = matrix_list_to_json(p.form.projectors);
        form["unitaries"] = matrix_list_to_json(p.form.unitaries);
    } else {
        form["repA"] = rep_to_json(p.form.repA);
        form["repB"] = rep_to_json(p.form.repB);
        if (p.form.kind == "double") {
            json c = json::array();
            for (cx v : p.form.c)
                c.push_back(complex_to_json(v));
            form["c"] = std::move(c);
        } else {
            form["blocks"] = matrix_list_to_json(p.form.blocks);
        }
    }
    j["form"] = std::move(form);
    j["options"] = json{{"tolerance", p.options.tolerance},
                        {"rankTol", p.options.rank_tol},
                        {"seed", p.options.seed},
                        {"restarts", p.options.restarts}};
    return j;
}

Problem problem_from_catalog(const CatalogEntry& entry, const CatalogVariant& variant) {
    Problem p;
    p.name = entry.name;
    if (const auto* gfu = std::get_if<GroupFormUnitary>(&variant.form)) {
        p.group = gfu->rep.group;
        p.factor_system = gfu->rep.factor_system;
        p.form.kind = "groupForm";
        p.form.repA.matrices = gfu->rep.matrices;
        p.form.w = gfu->wfam.w;
    } else if (const auto* cu = std::get_if<ControlledUnitary>(&variant.form)) {
        p.group = cyclic_group(cu->terms());
        p.factor_system = trivial_factor_system(p.group);
        p.form.kind = "controlled";
        p.form.projectors = cu->projectors;
        p.form.unitaries = cu->unitaries;
    } else {
        const auto& du = std::get<DoubleUnitary>(variant.form);
        p.group = du.repA.group;
        p.factor_system = du.repA.factor_system;
        p.form.kind = "double";
        p.form.repA.matrices = du.repA.matrices;
        p.form.repB.matrices = du.repB.matrices;
        p.form.c = du.c;
    }
    return p;
}

json transcript_to_json(const ProtocolTranscript& t, const InfoAbsenceReport& info) {
    json branches = json::array();
    for (const auto& b : t.branches)
        branches.push_back(json{{"outcomeA", b.outcome_a},
                                {"outcomeB", b.outcome_b},
                                {"residual", b.residual},
                                {"phase", complex_to_json(b.phase)},
                                {"probability", b.probability}});
    json j;
    j["schemaVersion"] = 1;
    j["branches"] = std::move(branches);
    j["summary"] = json{{"pass", info.pass},
                        {"worstResidual", t.worst_residual()},
                        {"branchCount", t.branches.size()},
                        {"probabilitySpread", t.probability_spread()},
                        {"completenessResidual", t.completeness_residual},
                        {"formConditionResidual", t.form_condition_residual},
                        {"worstKrausDeviation", info.worst_kraus_deviation},
                        {"worstPairwiseDeviation", info.worst_pairwise}};
    return j;
}

} // namespace nlg
