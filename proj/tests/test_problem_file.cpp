#include "nlg/problem_file.hpp"
#include "nlg/rand.hpp"

#include <doctest.h>
#include <json.hpp>

using namespace nlg;
using nlohmann::json;

TEST_CASE("complex and matrix parsing") {
    CHECK(parse_complex(json::parse("3.5")) == cx(3.5, 0.0));
    CHECK(parse_complex(json::parse("[1, -2]")) == cx(1.0, -2.0));
    CHECK(parse_complex(json::parse(R"({"rootOfUnity": [1, 4]})")) == cx(0.0, 1.0));
    CHECK(parse_complex(json::parse(R"({"rootOfUnity": [-3, 4]})")) == cx(0.0, 1.0));
    CHECK_THROWS_AS(parse_complex(json::parse(R"({"re": 1})")), ParseError);
    CHECK_THROWS_AS(parse_matrix(json::parse("[[1],[2,3]]")), ParseError);
    const Matrix m = parse_matrix(json::parse("[[1, [0,1]],[0, -1]]"));
    CHECK(m(0, 1) == cx(0.0, 1.0));
    CHECK(m(1, 1) == cx(-1.0, 0.0));
}

TEST_CASE("every catalog variant survives a file round trip") {
    for (const auto& entry : catalog()) {
        for (const auto& v : entry.variants) {
            INFO(entry.name, " dA=", v.dA);
            const Problem p = problem_from_catalog(entry, v);
            const json j = problem_to_json(p);
            const Problem back = parse_problem(j);
            const auto check = validate_problem(back);
            CHECK(check.ok());
            const FormVariant form = materialize_form(back);
            CHECK(max_abs_diff(assembled_of(form), assembled_of(v.form)) < 1e-12);
        }
    }
}

TEST_CASE("factor system variants parse") {
    json j;
    j["group"] = {{"kind", "directProduct"},
                  {"factors", json::array({{{"kind", "cyclic"}, {"n", 2}},
                                           {{"kind", "cyclic"}, {"n", 2}}})}};
    j["factorSystem"] = {{"xz", 2}};
    j["form"] = {{"type", "qBlocks"},
                 {"dB", 2},
                 {"repA", {{"pattern", {1}}}},
                 {"blocks", json::array({nullptr})}};
    j["irreps"] = {{"builtin", "xz"}, {"n", 2}};
    const Problem p = parse_problem(j);
    CHECK(validate_problem(p).ok());
    // identity blocks synthesize the identity unitary
    const FormVariant form = materialize_form(p);
    CHECK(max_abs_diff(assembled_of(form), Matrix::identity(4)) < 1e-14);
    CHECK(operator_schmidt_rank(assembled_of(form), 2, 2) == 1);
}

TEST_CASE("exponent factor systems give exact phases") {
    json j;
    j["group"] = {{"kind", "cyclic"}, {"n", 1}};
    // trivial group with an exponent-encoded entry
    j["factorSystem"] = {{"exponents", {{"denominator", 8}, {"table", {{0}}}}}};
    j["form"] = {{"type", "groupForm"},
                 {"repA", {{"matrices", json::array({json::array({json::array({1})})})}}},
                 {"w", json::array({json::array({json::array({1})})})}};
    const Problem p = parse_problem(j);
    CHECK(p.factor_system.at(0, 0) == cx(1.0));
}

TEST_CASE("broken cocycle is reported with the violating triple") {
    Problem p = problem_from_catalog(catalog_lookup("eq60"),
                                     catalog_lookup("eq60").default_variant());
    p.factor_system.mu[1][1] = cx(0.0, 1.0);
    const auto check = validate_problem(p);
    REQUIRE_FALSE(check.ok());
    bool found = false;
    for (const auto& v : check.report.violations)
        found = found || v.find("cocycle violation at triple") != std::string::npos;
    CHECK(found);
}

TEST_CASE("malformed input throws ParseError") {
    CHECK_THROWS_AS(load_problem("/nonexistent/file.json"), ParseError);
    CHECK_THROWS_AS(parse_problem(json::parse(R"({"form": {"type": "waveform"}})")), ParseError);
    CHECK_THROWS_AS(parse_problem(json::parse(R"({"group": {"kind": "icosahedral"}})")),
                    ParseError);
}

TEST_CASE("controlled files may omit the group section") {
    json j;
    j["form"] = {{"type", "controlled"},
                 {"projectors", json::array({json::parse("[[1,0],[0,0]]"),
                                             json::parse("[[0,0],[0,1]]")})},
                 {"unitaries", json::array({json::parse("[[1,0],[0,1]]"),
                                            json::parse("[[0,1],[1,0]]")})}};
    const Problem p = parse_problem(j);
    CHECK(p.group.order == 2);
    CHECK(validate_problem(p).ok());
    const FormVariant form = materialize_form(p);
    CHECK(std::get<ControlledUnitary>(form).terms() == 2);
}

TEST_CASE("rBlocks files synthesize coefficients through the irreps") {
    // delta coefficients from identity R blocks over S3
    const auto set = s3_irrep_set();
    const auto rep = block_diagonal_rep(set, {{0, 1, 1}}).rep;
    Problem p;
    p.group = set.group;
    p.factor_system = trivial_factor_system(set.group);
    p.irreps = set;
    p.form.kind = "rBlocks";
    p.form.repA.matrices = rep.matrices;
    p.form.repB.matrices = rep.matrices;
    for (const auto& ir : set.irreps)
        p.form.blocks.push_back(Matrix::identity(ir.dim));
    CHECK(validate_problem(p).ok());
    const FormVariant form = materialize_form(p);
    const auto& du = std::get<DoubleUnitary>(form);
    CHECK(max_abs_diff(du.assembled, Matrix::identity(9)) < 1e-12);

    // and the same through JSON
    const json j = problem_to_json(p);
    const Problem back = parse_problem(j);
    const FormVariant form2 = materialize_form(back);
    CHECK(max_abs_diff(std::get<DoubleUnitary>(form2).assembled, du.assembled) < 1e-12);
}

TEST_CASE("projector axiom violations fail validation, not parsing") {
    json j;
    j["group"] = {{"kind", "cyclic"}, {"n", 2}};
    j["form"] = {{"type", "controlled"},
                 {"projectors", json::array({json::parse("[[1,0],[0,0]]"),
                                             json::parse("[[1,0],[0,0]]")})},
                 {"unitaries", json::array({json::parse("[[1,0],[0,1]]"),
                                            json::parse("[[0,1],[1,0]]")})}};
    const Problem p = parse_problem(j); // parses fine
    const auto check = validate_problem(p);
    CHECK_FALSE(check.ok());
}

TEST_CASE("transcript export carries branches and a summary") {
    const auto& entry = catalog_lookup("cnot-controlled");
    const auto& cu = std::get<ControlledUnitary>(entry.default_variant().form);
    Rng rng(111);
    StateVector in({2, 2}, random_state(rng, 4));
    const auto t = simulate_controlled_protocol(cu, in);
    const auto info = information_absence_check(t);
    const json j = transcript_to_json(t, info);
    CHECK(j["branches"].size() == 4);
    CHECK(j["summary"]["pass"].get<bool>());
    CHECK(j["summary"]["worstResidual"].get<double>() < 1e-9);
}
