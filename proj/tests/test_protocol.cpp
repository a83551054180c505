#include "nlg/protocol.hpp"
#include "nlg/catalog.hpp"
#include "nlg/rand.hpp"

#include <doctest.h>

#include <cmath>

using namespace nlg;

namespace {

const Matrix kPauliX = Matrix::from_rows({{0.0, 1.0}, {1.0, 0.0}});

ControlledUnitary make_cnot() {
    return assemble_controlled({Matrix::diagonal({1.0, 0.0}), Matrix::diagonal({0.0, 1.0})},
                               {Matrix::identity(2), kPauliX});
}

QBlockFamily random_q_blocks(Rng& rng, const IrrepSet& set, std::size_t dB) {
    QBlockFamily q;
    q.dB = dB;
    for (const auto& ir : set.irreps)
        q.blocks.push_back(random_unitary(rng, ir.dim * dB));
    return q;
}

GroupFormUnitary cnot_group_form() {
    const auto z2 = cyclic_group(2);
    WFamily w;
    w.dB = 2;
    w.w = {Matrix::from_rows({{0.5, 0.5}, {0.5, 0.5}}),
           Matrix::from_rows({{0.5, -0.5}, {-0.5, 0.5}})};
    return assemble_group_unitary(
        make_projective_rep(z2, trivial_factor_system(z2),
                            {Matrix::identity(2), Matrix::diagonal({1.0, -1.0})}),
        w);
}

// |out> must match targetU |in> up to a global phase
double output_mismatch(const Branch& b, const Matrix& target, const StateVector& in) {
    auto want = target.apply(in.amps);
    cx overlap = 0.0;
    for (std::size_t i = 0; i < want.size(); ++i)
        overlap += std::conj(want[i]) * b.output[i];
    return std::abs(1.0 - std::abs(overlap));
}

} // namespace

TEST_CASE("build_F") {
    const Matrix h = build_F(2);
    const double r = 1.0 / std::sqrt(2.0);
    CHECK(max_abs_diff(h, Matrix::from_rows({{r, r}, {r, -r}})) < 1e-15);
    const Matrix f6 = build_F(6);
    for (std::size_t m = 0; m < 6; ++m)
        for (std::size_t j = 0; j < 6; ++j)
            CHECK(std::abs(std::abs(f6(m, j)) - 1.0 / std::sqrt(6.0)) < 1e-15);
    CHECK(unitarity_residual(build_F(4)) < 1e-14);
}

TEST_CASE("build_Zh") {
    SUBCASE("h = 0 is the identity for the Fourier choice") {
        CHECK(max_abs_diff(build_Zh(build_F(4), 0), Matrix::identity(4)) < 1e-15);
    }
    SUBCASE("N = 2, h = 1 gives diag(1, -1)") {
        CHECK(max_abs_diff(build_Zh(build_F(2), 1), Matrix::diagonal({1.0, -1.0})) < 1e-15);
    }
    SUBCASE("always unitary for unbiased F") {
        for (std::size_t h = 0; h < 5; ++h)
            CHECK(unitarity_residual(build_Zh(build_F(5), h)) < 1e-12);
    }
    SUBCASE("biased F is rejected") {
        CHECK_THROWS_AS(build_Zh(Matrix::identity(3), 0), ValidationError);
    }
}

TEST_CASE("group protocol implements CNOT on every branch") {
    const auto gfu = cnot_group_form();
    const StateVector in = StateVector::basis({2, 2}, 2); // |1>|0>
    const auto t = simulate_group_protocol(gfu, in);
    REQUIRE(t.branches.size() == 4);
    CHECK(t.completeness_residual < 1e-12);
    for (const auto& b : t.branches) {
        CHECK(b.residual < 1e-12);
        CHECK(b.probability == doctest::Approx(0.25));
        // output must be |1>|1> up to phase
        CHECK(std::abs(b.output[3]) == doctest::Approx(1.0));
    }
    CHECK(information_absence_check(t).pass);
}

TEST_CASE("delta W family gives the identity protocol") {
    const auto z3 = cyclic_group(3);
    std::vector<Matrix> umats;
    const auto set = cyclic_irrep_set(3);
    for (std::size_t f = 0; f < 3; ++f) {
        Matrix u(2, 2);
        u(0, 0) = set.irreps[1].matrices[f](0, 0);
        u(1, 1) = set.irreps[2].matrices[f](0, 0);
        umats.push_back(std::move(u));
    }
    WFamily w;
    w.dB = 2;
    w.w = {Matrix::identity(2), Matrix(2, 2), Matrix(2, 2)};
    Rng rng(81);
    StateVector in({2, 2}, random_state(rng, 4));
    // target is I only when U(e) multiplies the only nonzero W
    const auto gfu = assemble_group_unitary(
        make_projective_rep(z3, trivial_factor_system(z3), umats), w);
    CHECK(max_abs_diff(gfu.assembled, Matrix::identity(4)) < 1e-15);
    const auto t = simulate_group_protocol(gfu, in);
    for (const auto& b : t.branches) {
        CHECK(b.residual < 1e-12);
        CHECK(output_mismatch(b, gfu.assembled, in) < 1e-12);
    }
}

TEST_CASE("catalog eq60 protocol: all 36 branches pass") {
    const auto& gfu = std::get<GroupFormUnitary>(catalog_lookup("eq60").default_variant().form);
    Rng rng(82);
    StateVector in({3, 3}, random_state(rng, 9));
    const auto t = simulate_group_protocol(gfu, in);
    CHECK(t.branches.size() == 36);
    CHECK(t.worst_residual() < 1e-9);
    CHECK(t.probability_spread() < 1e-9);
    CHECK(information_absence_check(t).pass);
}

TEST_CASE("controlled protocol") {
    SUBCASE("CNOT maps the plus state to a Bell pair on every branch") {
        const auto cu = make_cnot();
        const double r = 1.0 / std::sqrt(2.0);
        const StateVector in({2, 2}, {r, 0.0, r, 0.0});
        const auto t = simulate_controlled_protocol(cu, in);
        REQUIRE(t.branches.size() == 4);
        for (const auto& b : t.branches) {
            CHECK(b.residual < 1e-12);
            CHECK(output_mismatch(b, cu.assembled, in) < 1e-12);
        }
        CHECK(information_absence_check(t).pass);
    }
    SUBCASE("N = 1 applies V0 directly") {
        Rng rng(83);
        const Matrix v = random_unitary(rng, 3);
        const auto cu = assemble_controlled({Matrix::identity(2)}, {v});
        StateVector in({2, 3}, random_state(rng, 6));
        const auto t = simulate_controlled_protocol(cu, in);
        REQUIRE(t.branches.size() == 1);
        CHECK(t.branches[0].residual < 1e-12);
    }
    SUBCASE("rank-2 projectors on dA = 4") {
        Rng rng(84);
        const auto cu = assemble_controlled(
            {Matrix::diagonal({1.0, 1.0, 0.0, 0.0}), Matrix::diagonal({0.0, 0.0, 1.0, 1.0})},
            {random_unitary(rng, 2), random_unitary(rng, 2)});
        StateVector in({4, 2}, random_state(rng, 8));
        const auto t = simulate_controlled_protocol(cu, in);
        CHECK(t.branches.size() == 4);
        CHECK(t.worst_residual() < 1e-9);
        CHECK(information_absence_check(t).pass);
    }
    SUBCASE("qutrit rank-1 case has nine branches") {
        Rng rng(85);
        std::vector<Matrix> projectors, vs;
        for (std::size_t j = 0; j < 3; ++j) {
            projectors.push_back(Matrix::dyad(3, j, j));
            vs.push_back(random_unitary(rng, 2));
        }
        const auto cu = assemble_controlled(projectors, vs);
        StateVector in({3, 2}, random_state(rng, 6));
        const auto t = simulate_controlled_protocol(cu, in);
        CHECK(t.branches.size() == 9);
        CHECK(t.worst_residual() < 1e-9);
        CHECK(information_absence_check(t).pass);
    }
}

TEST_CASE("double protocol") {
    SUBCASE("two-qubit phase family: all 16 branches pass") {
        Rng rng(86);
        const auto set = xz_irrep_set(2);
        const auto rep =
            make_projective_rep(set.group, set.factor_system, set.irreps[0].matrices);
        const auto chars = direct_product_irrep_set(cyclic_irrep_set(2), cyclic_irrep_set(2));
        std::uniform_real_distribution<double> angle(0.0, 2.0 * 3.14159265358979);
        RBlockFamily r;
        for (int i = 0; i < 4; ++i)
            r.blocks.push_back(Matrix::diagonal({std::polar(1.0, angle(rng))}));
        const auto du = assemble_double(synthesize_c(chars, r), rep, rep);
        REQUIRE(check_c_condition(du) < 1e-12);
        StateVector in({2, 2}, random_state(rng, 4));
        const auto t = simulate_double_protocol(du, in);
        CHECK(t.branches.size() == 16);
        CHECK(t.worst_residual() < 1e-9);
        CHECK(information_absence_check(t).pass);
    }
    SUBCASE("delta coefficients pass trivially") {
        const auto set = xz_irrep_set(2);
        const auto rep =
            make_projective_rep(set.group, set.factor_system, set.irreps[0].matrices);
        const auto du = assemble_double({1, 0, 0, 0}, rep, rep);
        Rng rng(87);
        StateVector in({2, 2}, random_state(rng, 4));
        const auto t = simulate_double_protocol(du, in);
        CHECK(t.worst_residual() < 1e-12);
    }
    SUBCASE("table row 2 at d = 3: 36 branches and rank 5") {
        const auto& du =
            std::get<DoubleUnitary>(catalog_lookup("s3-table1-row2").variant_for_dim(3).form);
        Rng rng(88);
        StateVector in({3, 3}, random_state(rng, 9));
        const auto t = simulate_double_protocol(du, in);
        CHECK(t.branches.size() == 36);
        CHECK(t.worst_residual() < 1e-9);
        CHECK(operator_schmidt_rank(du.assembled, 3, 3) == 5);
    }
    SUBCASE("factorized and generic M produce identical transcripts") {
        Rng rng(89);
        const auto set = s3_irrep_set();
        const auto rep = block_diagonal_rep(set, {{0, 1, 1}}).rep;
        RBlockFamily r;
        for (const auto& ir : set.irreps)
            r.blocks.push_back(random_unitary(rng, ir.dim));
        const auto du = assemble_double(synthesize_c(set, r), rep, rep);
        StateVector in({3, 3}, random_state(rng, 9));
        const auto t1 = simulate(double_protocol_spec(du), in);
        const auto t2 = simulate(double_protocol_spec_generic_m(du), in);
        REQUIRE(t1.branches.size() == t2.branches.size());
        for (std::size_t i = 0; i < t1.branches.size(); ++i)
            CHECK(max_abs_diff(t1.branches[i].kraus, t2.branches[i].kraus) < 1e-10);
    }
}

TEST_CASE("information absence fails for a random M") {
    Rng rng(90);
    auto spec = group_protocol_spec(cnot_group_form());
    spec.M = random_unitary(rng, 4);
    StateVector in({2, 2}, random_state(rng, 4));
    const auto t = simulate(spec, in);
    CHECK(t.completeness_residual < 1e-12); // circuit still unitary
    CHECK_FALSE(information_absence_check(t).pass);
}

TEST_CASE("uniform branch probabilities are input independent") {
    Rng rng(91);
    const auto& gfu = std::get<GroupFormUnitary>(catalog_lookup("xz-n2").default_variant().form);
    for (int trial = 0; trial < 5; ++trial) {
        StateVector in({2, 2}, random_state(rng, 4));
        const auto t = simulate_group_protocol(gfu, in);
        CHECK(t.probability_spread() < 1e-9);
    }
}

TEST_CASE("perturbing one W operator breaks information absence every time") {
    Rng rng(92);
    const auto set = cyclic_irrep_set(2);
    const auto rep = make_projective_rep(set.group, set.factor_system,
                                         {Matrix::identity(2), Matrix::diagonal({1.0, -1.0})});
    const StateVector in = StateVector::basis({2, 2}, 0);
    for (int trial = 0; trial < 100; ++trial) {
        QBlockFamily q;
        q.dB = 2;
        q.blocks = {random_unitary(rng, 2), random_unitary(rng, 2)};
        WFamily w = synthesize_W(set, q);
        // non-unitary bump of scale 0.1 on one W
        Matrix bump = random_matrix(rng, 2, 2);
        bump *= cx(0.1 / std::max(bump.max_abs(), 1e-12));
        w.w[1] += bump;
        const auto gfu = assemble_group_unitary(rep, w);
        const auto t = simulate_group_protocol(gfu, in);
        const auto info = information_absence_check(t, 1e-3);
        CHECK_FALSE(info.pass);
        CHECK(info.worst_kraus_deviation > 1e-3);
        CHECK(t.flagged_invalid);
    }
}

TEST_CASE("completeness holds whenever the circuit is unitary") {
    Rng rng(93);
    for (const auto& set : {cyclic_irrep_set(3), s3_irrep_set()}) {
        const auto bar = block_diagonal_rep(set, {std::vector<std::size_t>(set.count(), 1)});
        const auto w = synthesize_W(set, random_q_blocks(rng, set, 2));
        const auto gfu = assemble_group_unitary(bar.rep, w);
        StateVector in({gfu.dA(), std::size_t(2)}, random_state(rng, gfu.dA() * 2));
        const auto t = simulate_group_protocol(gfu, in);
        CHECK(t.completeness_residual < 1e-9);
    }
}
