#include "nlg/catalog.hpp"

#include "nlg/rand.hpp"

#include <cmath>

namespace nlg {

namespace {

// B-block tables are entered as dyad lists with 1-based (lambda, j, k)
// labels and 1-based kets |1>..|dB> mapping to indices 0..dB-1.
struct Dyad {
    std::size_t ket, bra;
    double sign = 1.0;
};

struct BlockSpec {
    std::size_t lambda, j, k;
    std::vector<Dyad> dyads;
    bool identity = false;
};

BBlockTable make_block_table(std::size_t dB, const std::vector<BlockSpec>& specs) {
    BBlockTable table;
    table.dB = dB;
    for (const auto& s : specs) {
        Matrix b(dB, dB);
        if (s.identity)
            b = Matrix::identity(dB);
        for (const auto& d : s.dyads)
            b(d.ket - 1, d.bra - 1) += d.sign;
        table.entries.push_back({s.lambda - 1, s.j - 1, s.k - 1, std::move(b)});
    }
    return table;
}

GroupFormUnitary group_form_from_blocks(const IrrepSet& set, const MultiplicityPattern& pattern,
                                        std::size_t dB, const std::vector<BlockSpec>& specs) {
    const BBlockTable table = make_block_table(dB, specs);
    const QBlockFamily q = q_blocks_from_B(set, table);
    const WFamily w = synthesize_W(set, q);
    return assemble_group_unitary(block_diagonal_rep(set, pattern).rep, w);
}

GroupFormUnitary xz_group_form(std::size_t n, std::uint64_t seed) {
    const IrrepSet set = xz_irrep_set(n);
    Rng rng(seed);
    QBlockFamily q;
    q.dB = n;
    q.blocks.push_back(random_unitary(rng, n * n));
    const WFamily w = synthesize_W(set, q);
    return assemble_group_unitary(block_diagonal_rep(set, {{1}}).rep, w);
}

std::vector<cx> pauli_double_coefficients(double alpha, double beta, double gamma,
                                          double delta) {
    // c(p,q) = [e^(ia) + (-1)^p e^(ib) + (-1)^q e^(ic) + (-1)^(p+q) e^(id)] / 4
    std::vector<cx> c(4);
    const cx ea = std::polar(1.0, alpha), eb = std::polar(1.0, beta);
    const cx ec = std::polar(1.0, gamma), ed = std::polar(1.0, delta);
    for (std::size_t p = 0; p < 2; ++p)
        for (std::size_t q = 0; q < 2; ++q) {
            const double sp = p ? -1.0 : 1.0;
            const double sq = q ? -1.0 : 1.0;
            c[p * 2 + q] = (ea + sp * eb + sq * ec + sp * sq * ed) / 4.0;
        }
    return c;
}

const std::vector<std::vector<cx>>& table1_rows() {
    static const double s3 = std::sqrt(3.0);
    static const std::vector<std::vector<cx>> rows = {
        {{2.0 / 3, 0}, {-1.0 / 3, 0}, {-1.0 / 3, 0}, {-1.0 / 3, 0}, {-1.0 / 3, 0}, {-1.0 / 3, 0}},
        {{2.0 / 3, 0},
         {1.0 / 6, 0},
         {1.0 / 6, 0},
         {0, -1.0 / s3},
         {0, 1.0 / (2 * s3)},
         {0, 1.0 / (2 * s3)}},
        {{1.0 / 3, 0}, {1.0 / 3, 0}, {1.0 / 3, 0}, {1.0 / s3, 0}, {-1.0 / s3, 0}, {0, 0}},
        {{1.0 / 6, 0}, {-1.0 / 3, 0}, {-1.0 / 3, 0}, {0, -s3 / 2}, {0, 0}, {0, 0}},
    };
    return rows;
}

std::vector<CatalogEntry> build_catalog() {
    std::vector<CatalogEntry> entries;
    const IrrepSet s3 = s3_irrep_set();
    const IrrepSet d4p = d4_projective_irrep_set();

    // xz family: a generic unitary carried over Z_n x Z_n with the xz factor
    // system; the A-side representation is the single n-dimensional irrep.
    for (std::size_t n : {std::size_t(2), std::size_t(3)}) {
        CatalogEntry e;
        e.name = "xz-n" + std::to_string(n);
        e.description = "generic unitary over Z" + std::to_string(n) + "xZ" + std::to_string(n) +
                        " with the xz factor system, dA=dB=" + std::to_string(n);
        e.group_order = n * n;
        CatalogVariant v;
        v.dA = n;
        v.dB = n;
        v.form = xz_group_form(n, 0xA5F0 + n);
        v.expected_schmidt_rank = n * n;
        e.variants.push_back(std::move(v));
        entries.push_back(std::move(e));
    }

    {
        CatalogEntry e;
        e.name = "pauli-double";
        e.description = "two-qubit double form c(p,q) X^p Z^q (x) X^p Z^q with fixed phases";
        e.group_order = 4;
        const ProjectiveRep rep = block_diagonal_rep(xz_irrep_set(2), {{1}}).rep;
        CatalogVariant v;
        v.dA = 2;
        v.dB = 2;
        v.form = assemble_double(pauli_double_coefficients(0.7, -1.2, 2.1, 0.4), rep, rep);
        v.expected_schmidt_rank = 4;
        e.variants.push_back(std::move(v));
        entries.push_back(std::move(e));
    }

    {
        CatalogEntry e;
        e.name = "eq60";
        e.aliases = {"s3-qutrit"};
        e.description = "9x9 unitary over S3 from five dyad blocks, Schmidt rank 5";
        e.group_order = 6;
        CatalogVariant v;
        v.dA = 3;
        v.dB = 3;
        v.form = group_form_from_blocks(s3, {{0, 1, 1}}, 3,
                                        {
                                            {2, 1, 1, {}, true},
                                            {3, 1, 1, {{1, 1}, {2, 2}}},
                                            {3, 1, 2, {{3, 2}}},
                                            {3, 2, 1, {{2, 3}}},
                                            {3, 2, 2, {{1, 1}, {3, 3}}},
                                        });
        v.expected_schmidt_rank = 5;
        e.variants.push_back(std::move(v));
        entries.push_back(std::move(e));
    }

    {
        CatalogEntry e;
        e.name = "eq63";
        e.aliases = {"s3-d4dim"};
        e.description = "16x16 unitary over S3 with all irreps present, Schmidt rank 6";
        e.group_order = 6;
        CatalogVariant v;
        v.dA = 4;
        v.dB = 4;
        v.form = group_form_from_blocks(s3, {{1, 1, 1}}, 4,
                                        {
                                            {1, 1, 1, {}, true},
                                            {2, 1, 1, {{1, 1}, {2, 2}, {3, 3, -1.0}, {4, 4, -1.0}}},
                                            {3, 1, 1, {{1, 1}, {2, 2, -1.0}}},
                                            {3, 1, 2, {{3, 1}, {4, 2}}},
                                            {3, 2, 1, {{1, 3}, {2, 4}}},
                                            {3, 2, 2, {{3, 3}, {4, 4, -1.0}}},
                                        });
        v.expected_schmidt_rank = 6;
        e.variants.push_back(std::move(v));
        entries.push_back(std::move(e));
    }

    {
        CatalogEntry e;
        e.name = "eq65";
        e.aliases = {"d4-projective-db3"};
        e.description = "12x12 unitary over projective D4, dB=3, Schmidt rank 8";
        e.group_order = 8;
        CatalogVariant v;
        v.dA = 4;
        v.dB = 3;
        v.form = group_form_from_blocks(d4p, {{1, 1}}, 3,
                                        {
                                            {1, 1, 1, {{1, 1}, {2, 2}}},
                                            {1, 1, 2, {{3, 1}}},
                                            {1, 2, 1, {{1, 3}}},
                                            {1, 2, 2, {{2, 2}, {3, 3}}},
                                            {2, 1, 1, {{1, 1}, {3, 2}}},
                                            {2, 1, 2, {{2, 1}}},
                                            {2, 2, 1, {{2, 3}}},
                                            {2, 2, 2, {{1, 3}, {3, 2}}},
                                        });
        v.expected_schmidt_rank = 8;
        e.variants.push_back(std::move(v));
        entries.push_back(std::move(e));
    }

    {
        CatalogEntry e;
        e.name = "eq66";
        e.aliases = {"d4-projective-db4"};
        e.description = "16x16 unitary over projective D4, dB=4, Schmidt rank 8";
        e.group_order = 8;
        CatalogVariant v;
        v.dA = 4;
        v.dB = 4;
        v.form = group_form_from_blocks(d4p, {{1, 1}}, 4,
                                        {
                                            {1, 1, 1, {{1, 1}, {2, 2}}},
                                            {1, 1, 2, {{3, 1}, {4, 2}}},
                                            {1, 2, 1, {{1, 3}, {2, 4}}},
                                            {1, 2, 2, {{3, 3}, {4, 4, -1.0}}},
                                            {2, 1, 1, {{1, 1}, {3, 3}}},
                                            {2, 1, 2, {{2, 1}, {4, 3}}},
                                            {2, 2, 1, {{1, 2}, {3, 4}}},
                                            {2, 2, 2, {{2, 2}, {4, 4}}},
                                        });
        v.expected_schmidt_rank = 8;
        e.variants.push_back(std::move(v));
        entries.push_back(std::move(e));
    }

    {
        const ProjectiveRep rep3 = block_diagonal_rep(s3, {{0, 1, 1}}).rep;
        const ProjectiveRep rep4 = block_diagonal_rep(s3, {{1, 1, 1}}).rep;
        const std::size_t expected[4][2] = {{5, 6}, {5, 6}, {5, 5}, {4, 4}};
        for (std::size_t row = 0; row < 4; ++row) {
            CatalogEntry e;
            e.name = "s3-table1-row" + std::to_string(row + 1);
            e.description = "double form over S3 with the row-" + std::to_string(row + 1) +
                            " coefficient set, at d=3 and d=4";
            e.group_order = 6;
            CatalogVariant v3;
            v3.dA = v3.dB = 3;
            v3.form = assemble_double(table1_rows()[row], rep3, rep3);
            v3.expected_schmidt_rank = expected[row][0];
            CatalogVariant v4;
            v4.dA = v4.dB = 4;
            v4.form = assemble_double(table1_rows()[row], rep4, rep4);
            v4.expected_schmidt_rank = expected[row][1];
            e.variants.push_back(std::move(v3));
            e.variants.push_back(std::move(v4));
            entries.push_back(std::move(e));
        }
    }

    {
        // Double form over the projective D4 representation. The products
        // U(f) (x) U(f) carry the trivial factor system (the +-1 phases
        // square away), so the coefficients come from the five ordinary
        // irreps: four unit scalars and one 2x2 unitary.
        CatalogEntry e;
        e.name = "d4-double";
        e.description = "double form over projective D4 with coefficients from ordinary irreps";
        e.group_order = 8;
        const ProjectiveRep rep = block_diagonal_rep(d4p, {{1, 1}}).rep;
        RBlockFamily r;
        r.blocks.push_back(Matrix::diagonal({std::polar(1.0, 0.4)}));
        r.blocks.push_back(Matrix::diagonal({std::polar(1.0, 1.3)}));
        r.blocks.push_back(Matrix::diagonal({std::polar(1.0, -0.6)}));
        r.blocks.push_back(Matrix::diagonal({std::polar(1.0, 2.1)}));
        Rng rng(0xD4D0);
        r.blocks.push_back(random_unitary(rng, 2));
        const std::vector<cx> c = synthesize_c(d4_ordinary_irrep_set(), r);
        CatalogVariant v;
        v.dA = 4;
        v.dB = 4;
        v.form = assemble_double(c, rep, rep);
        v.expected_schmidt_rank = 8;
        e.variants.push_back(std::move(v));
        entries.push_back(std::move(e));
    }

    {
        CatalogEntry e;
        e.name = "cnot-controlled";
        e.description = "CNOT as a controlled form with two rank-1 projectors";
        e.group_order = 2;
        CatalogVariant v;
        v.dA = 2;
        v.dB = 2;
        v.form = assemble_controlled(
            {Matrix::from_rows({{1.0, 0.0}, {0.0, 0.0}}),
             Matrix::from_rows({{0.0, 0.0}, {0.0, 1.0}})},
            {Matrix::identity(2), Matrix::from_rows({{0.0, 1.0}, {1.0, 0.0}})});
        v.expected_schmidt_rank = 2;
        e.variants.push_back(std::move(v));
        entries.push_back(std::move(e));
    }

    return entries;
}

} // namespace

const CatalogVariant& CatalogEntry::variant_for_dim(std::size_t dA) const {
    for (const auto& v : variants)
        if (v.dA == dA)
            return v;
    throw LookupError("catalog entry '" + name + "' has no variant with dA=" +
                      std::to_string(dA));
}

const std::vector<CatalogEntry>& catalog() {
    static const std::vector<CatalogEntry> entries = build_catalog();
    return entries;
}

const CatalogEntry& catalog_lookup(const std::string& name) {
    for (const auto& e : catalog()) {
        if (e.name == name)
            return e;
        for (const auto& a : e.aliases)
            if (a == name)
                return e;
    }
    throw LookupError("unknown catalog entry '" + name + "'");
}

std::vector<std::string> catalog_names() {
    std::vector<std::string> names;
    for (const auto& e : catalog())
        names.push_back(e.name);
    return names;
}

const Matrix& assembled_of(const FormVariant& form) {
    return std::visit([](const auto& f) -> const Matrix& { return f.assembled; }, form);
}

std::size_t form_dA(const FormVariant& form) {
    return std::visit([](const auto& f) { return f.dA(); }, form);
}

std::size_t form_dB(const FormVariant& form) {
    return std::visit([](const auto& f) { return f.dB(); }, form);
}

} // namespace nlg
