#include "nlg/catalog.hpp"
#include "nlg/protocol.hpp"
#include "nlg/rand.hpp"

#include <doctest.h>

using namespace nlg;

TEST_CASE("every catalog variant assembles to a unitary with the declared rank") {
    for (const auto& entry : catalog()) {
        for (const auto& v : entry.variants) {
            INFO(entry.name, " dA=", v.dA);
            const Matrix& u = assembled_of(v.form);
            CHECK(u.rows() == v.dA * v.dB);
            CHECK(unitarity_residual(u) < 1e-10);
            CHECK(operator_schmidt_rank(u, v.dA, v.dB) == v.expected_schmidt_rank);
        }
    }
}

TEST_CASE("group-form entries satisfy the W condition, double entries the c condition") {
    for (const auto& entry : catalog()) {
        for (const auto& v : entry.variants) {
            INFO(entry.name, " dA=", v.dA);
            if (const auto* gfu = std::get_if<GroupFormUnitary>(&v.form)) {
                CHECK(check_W_condition(gfu->rep.factor_system, gfu->wfam) < 1e-10);
                CHECK(validate_projective_rep(gfu->rep).ok());
            } else if (const auto* du = std::get_if<DoubleUnitary>(&v.form)) {
                CHECK(check_c_condition(*du) < 1e-10);
                CHECK(unitarity_residual(du->c_operator) < 1e-10);
                CHECK(validate_projective_rep(du->repA).ok());
                CHECK(validate_projective_rep(du->repB).ok());
            }
        }
    }
}

TEST_CASE("every catalog variant simulates cleanly over all branches") {
    Rng rng(101);
    for (const auto& entry : catalog()) {
        for (const auto& v : entry.variants) {
            INFO(entry.name, " dA=", v.dA);
            ProtocolSpec spec;
            if (const auto* gfu = std::get_if<GroupFormUnitary>(&v.form))
                spec = group_protocol_spec(*gfu);
            else if (const auto* cu = std::get_if<ControlledUnitary>(&v.form))
                spec = controlled_protocol_spec(*cu);
            else
                spec = double_protocol_spec(std::get<DoubleUnitary>(v.form));
            StateVector in({v.dA, v.dB}, random_state(rng, v.dA * v.dB));
            const auto t = simulate(spec, in);
            CHECK(t.branches.size() == spec.N * spec.N);
            CHECK(t.worst_residual() < 1e-9);
            CHECK(t.completeness_residual < 1e-9);
            CHECK(information_absence_check(t).pass);
        }
    }
}

TEST_CASE("lookup by name and alias") {
    const auto& row1 = catalog_lookup("s3-table1-row1");
    REQUIRE(row1.variants.size() == 2);
    CHECK(row1.variant_for_dim(3).expected_schmidt_rank == 5);
    CHECK(row1.variant_for_dim(4).expected_schmidt_rank == 6);
    const auto& du = std::get<DoubleUnitary>(row1.variant_for_dim(3).form);
    CHECK(std::abs(du.c[0] - cx(2.0 / 3.0)) < 1e-15);
    for (std::size_t f = 1; f < 6; ++f)
        CHECK(std::abs(du.c[f] - cx(-1.0 / 3.0)) < 1e-15);

    CHECK(&catalog_lookup("eq60") == &catalog_lookup("s3-qutrit"));
    CHECK(&catalog_lookup("eq66") == &catalog_lookup("d4-projective-db4"));
    CHECK_THROWS_AS(catalog_lookup("no-such-entry"), LookupError);
    CHECK_THROWS_AS(catalog_lookup("eq60").variant_for_dim(7), LookupError);
}

TEST_CASE("eq60 W family round-trips back to its dyad blocks") {
    const auto& gfu = std::get<GroupFormUnitary>(catalog_lookup("eq60").default_variant().form);
    const auto set = s3_irrep_set();
    const auto table = extract_blocks_B(set, gfu.wfam);
    CHECK(max_abs_diff(table.at(1, 0, 0), Matrix::identity(3)) < 1e-10);
    CHECK(max_abs_diff(table.at(2, 0, 0), Matrix::diagonal({1.0, 1.0, 0.0})) < 1e-10);
    CHECK(max_abs_diff(table.at(2, 0, 1), Matrix::dyad(3, 2, 1)) < 1e-10);
    CHECK(max_abs_diff(table.at(2, 1, 0), Matrix::dyad(3, 1, 2)) < 1e-10);
    CHECK(max_abs_diff(table.at(2, 1, 1), Matrix::diagonal({1.0, 0.0, 1.0})) < 1e-10);
    MultiplicityPattern present{{0, 1, 1}};
    CHECK(independent_block_count(table, present) == 5);
}

TEST_CASE("block examples carry their declared ranks") {
    CHECK(catalog_lookup("eq60").default_variant().expected_schmidt_rank == 5);
    CHECK(catalog_lookup("eq63").default_variant().expected_schmidt_rank == 6);
    CHECK(catalog_lookup("eq65").default_variant().expected_schmidt_rank == 8);
    CHECK(catalog_lookup("eq66").default_variant().expected_schmidt_rank == 8);
    // eq65 acts on 4 x 3, eq66 on 4 x 4
    CHECK(assembled_of(catalog_lookup("eq65").default_variant().form).rows() == 12);
    CHECK(assembled_of(catalog_lookup("eq66").default_variant().form).rows() == 16);
}

TEST_CASE("names list contains the documented minimum") {
    const auto names = catalog_names();
    for (const char* want :
         {"xz-n2", "xz-n3", "pauli-double", "eq60", "eq63", "eq65", "eq66", "s3-table1-row1",
          "s3-table1-row2", "s3-table1-row3", "s3-table1-row4", "d4-double", "cnot-controlled"})
        CHECK(std::find(names.begin(), names.end(), want) != names.end());
}
