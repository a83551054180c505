#include "nlg/rep.hpp"
#include "nlg/rand.hpp"

#include <doctest.h>

using namespace nlg;

TEST_CASE("validate_projective_rep") {
    SUBCASE("trivial representation") {
        const auto g = symmetric3_group();
        std::vector<Matrix> mats(6, Matrix::identity(1));
        CHECK(validate_projective_rep(make_projective_rep(g, trivial_factor_system(g), mats))
                  .ok());
    }
    SUBCASE("I, Z over Z2") {
        const auto g = cyclic_group(2);
        const auto rep = make_projective_rep(
            g, trivial_factor_system(g),
            {Matrix::identity(2), Matrix::diagonal({1.0, -1.0})});
        CHECK(validate_projective_rep(rep).ok());
    }
    SUBCASE("X^p Z^q with the xz factor system") {
        for (std::size_t n : {2, 3}) {
            const auto set = xz_irrep_set(n);
            const auto rep =
                make_projective_rep(set.group, set.factor_system, set.irreps[0].matrices);
            const auto r = validate_projective_rep(rep);
            CHECK(r.ok());
            CHECK(r.worst_residual < 1e-14);
        }
    }
    SUBCASE("broken multiplication is reported with the pair") {
        const auto g = cyclic_group(2);
        const auto rep = make_projective_rep(
            g, trivial_factor_system(g),
            {Matrix::identity(2), Matrix::diagonal({1.0, cx(0.0, 1.0)})});
        const auto r = validate_projective_rep(rep);
        REQUIRE_FALSE(r.ok());
    }
}

TEST_CASE("regular projective representation") {
    SUBCASE("Z2, trivial mu: R(1) is the swap") {
        const auto rep = regular_projective_rep(trivial_factor_system(cyclic_group(2)));
        CHECK(max_abs_diff(rep.matrices[1], Matrix::from_rows({{0, 1}, {1, 0}})) == 0.0);
        CHECK(max_abs_diff(rep.matrices[0], Matrix::identity(2)) == 0.0);
    }
    SUBCASE("multiplication rule holds for every built-in factor system") {
        for (const auto& fs :
             {trivial_factor_system(symmetric3_group()), xz_factor_system(2).factor_system,
              xz_factor_system(3).factor_system, d4_projective_factor_system()}) {
            const auto rep = regular_projective_rep(fs);
            const auto r = validate_projective_rep(rep);
            CHECK(r.ok());
            CHECK(r.worst_residual < 1e-10);
        }
    }
    SUBCASE("one unit-modulus entry per row and column") {
        const auto rep = regular_projective_rep(d4_projective_factor_system());
        for (const auto& m : rep.matrices)
            for (std::size_t i = 0; i < m.rows(); ++i) {
                std::size_t nonzero_row = 0, nonzero_col = 0;
                for (std::size_t j = 0; j < m.cols(); ++j) {
                    if (std::abs(m(i, j)) > 0) {
                        ++nonzero_row;
                        CHECK(std::abs(std::abs(m(i, j)) - 1.0) < 1e-15);
                    }
                    if (std::abs(m(j, i)) > 0)
                        ++nonzero_col;
                }
                CHECK(nonzero_row == 1);
                CHECK(nonzero_col == 1);
            }
    }
}

TEST_CASE("irrep set validation") {
    SUBCASE("Z2 characters") {
        const auto set = cyclic_irrep_set(2);
        CHECK(set.irreps[1].matrices[1](0, 0) == cx(-1.0));
        CHECK(validate_irrep_set(set).ok());
    }
    SUBCASE("built-in sets pass with the right dimension counts") {
        struct Case {
            IrrepSet set;
            std::vector<std::size_t> dims;
        };
        for (const auto& c : {Case{s3_irrep_set(), {1, 1, 2}},
                              Case{d4_ordinary_irrep_set(), {1, 1, 1, 1, 2}},
                              Case{d4_projective_irrep_set(), {2, 2}},
                              Case{xz_irrep_set(2), {2}},
                              Case{direct_product_irrep_set(cyclic_irrep_set(2),
                                                            cyclic_irrep_set(2)),
                                   {1, 1, 1, 1}}}) {
            REQUIRE(c.set.count() == c.dims.size());
            for (std::size_t l = 0; l < c.dims.size(); ++l)
                CHECK(c.set.dim_of(l) == c.dims[l]);
            const auto r = validate_irrep_set(c.set);
            CHECK(r.ok());
            CHECK(r.worst_residual < 1e-10);
        }
    }
    SUBCASE("wrong dimension sum is rejected") {
        auto set = cyclic_irrep_set(3);
        set.irreps.pop_back();
        CHECK_FALSE(validate_irrep_set(set).ok());
    }
}

TEST_CASE("block diagonal representations and span dimension") {
    const auto s3 = s3_irrep_set();
    SUBCASE("sign + standard: dim 3, span 5") {
        const auto bd = block_diagonal_rep(s3, {{0, 1, 1}});
        CHECK(bd.rep.dim == 3);
        CHECK(bd.projectors.size() == 2);
        Matrix sum(3, 3);
        for (const auto& p : bd.projectors)
            sum += p;
        CHECK(max_abs_diff(sum, Matrix::identity(3)) == 0.0);
        CHECK(validate_projective_rep(bd.rep).ok());
        CHECK(span_dimension(bd.rep) == 5);
    }
    SUBCASE("all three irreps: dim 4, span 6") {
        const auto bd = block_diagonal_rep(s3, {{1, 1, 1}});
        CHECK(bd.rep.dim == 4);
        CHECK(span_dimension(bd.rep) == 6);
    }
    SUBCASE("projective D4 sum: dim 4, span 8") {
        const auto bd = block_diagonal_rep(d4_projective_irrep_set(), {{1, 1}});
        CHECK(bd.rep.dim == 4);
        CHECK(span_dimension(bd.rep) == 8);
    }
    SUBCASE("X^p Z^q at n = dA spans the full operator space") {
        const auto bd = block_diagonal_rep(xz_irrep_set(3), {{1}});
        CHECK(span_dimension(bd.rep) == 9);
    }
    SUBCASE("duplicating an irrep never changes the span") {
        CHECK(span_dimension(block_diagonal_rep(s3, {{0, 2, 1}}).rep) == 5);
        CHECK(span_dimension(block_diagonal_rep(s3, {{2, 1, 2}}).rep) == 6);
        CHECK(span_dimension(block_diagonal_rep(s3, {{3, 0, 0}}).rep) == 1);
    }
    SUBCASE("all-zero pattern is rejected") {
        CHECK_THROWS_AS(block_diagonal_rep(s3, {{0, 0, 0}}), ValidationError);
    }
}

TEST_CASE("span over every multiplicity pattern equals the theory count") {
    // every pattern with total dimension <= 8 over the built-in sets
    for (const auto& set : {s3_irrep_set(), d4_ordinary_irrep_set(), d4_projective_irrep_set()}) {
        std::vector<std::size_t> counts(set.count(), 0);
        const std::size_t budget = 8;
        while (true) {
            // next pattern in mixed radix (allow up to budget copies each)
            std::size_t i = 0;
            while (i < counts.size() && counts[i] == budget) {
                counts[i] = 0;
                ++i;
            }
            if (i == counts.size())
                break;
            ++counts[i];
            MultiplicityPattern pattern{counts};
            const std::size_t dim = pattern.total_dim(set);
            if (dim == 0 || dim > budget)
                continue;
            std::size_t expect = 0;
            for (std::size_t l = 0; l < counts.size(); ++l)
                if (counts[l] > 0)
                    expect += set.dim_of(l) * set.dim_of(l);
            CHECK(span_dimension(block_diagonal_rep(set, pattern).rep) == expect);
        }
    }
}

TEST_CASE("tensor of representations multiplies factor systems") {
    const auto set = xz_irrep_set(2);
    const auto rep = make_projective_rep(set.group, set.factor_system, set.irreps[0].matrices);
    const auto gamma_rep = tensor_rep(rep, rep);
    // mu is +-1 valued, so gamma = mu^2 is exactly trivial
    CHECK(gamma_rep.factor_system.is_trivial());
    CHECK(validate_projective_rep(gamma_rep).ok());

    Rng rng(31);
    const auto s3 = s3_irrep_set();
    const auto a = block_diagonal_rep(s3, {{0, 1, 1}}).rep;
    const auto b = block_diagonal_rep(s3, {{1, 0, 1}}).rep;
    const auto ab = tensor_rep(a, b);
    CHECK(validate_projective_rep(ab).ok());
    CHECK(ab.dim == 9);
}
