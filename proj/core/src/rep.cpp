#include "nlg/rep.hpp"

#include "nlg/decomp.hpp"

#include <array>
#include <cmath>

namespace nlg {

std::size_t MultiplicityPattern::total_dim(const IrrepSet& set) const {
    std::size_t d = 0;
    for (std::size_t l = 0; l < counts.size() && l < set.count(); ++l)
        d += counts[l] * set.dim_of(l);
    return d;
}

ValidationReport validate_projective_rep(const ProjectiveRep& r, double tol) {
    ValidationReport rep;
    const std::size_t n = r.group.order;
    if (r.matrices.size() != n) {
        rep.add("representation has " + std::to_string(r.matrices.size()) +
                " matrices, expected " + std::to_string(n));
        return rep;
    }
    for (std::size_t f = 0; f < n; ++f) {
        if (r.matrices[f].rows() != r.dim || r.matrices[f].cols() != r.dim) {
            rep.add("matrix for element " + std::to_string(f) + " has wrong shape");
            return rep;
        }
        const double res = unitarity_residual(r.matrices[f]);
        if (res > tol)
            rep.add("non-unitary matrix at element " + std::to_string(f) +
                        ", residual " + std::to_string(res),
                    res);
    }
    {
        const double res = max_abs_diff(r.matrices[0], Matrix::identity(r.dim));
        if (res > tol)
            rep.add("U(e) != I, residual " + std::to_string(res), res);
    }
    double worst = 0.0;
    std::size_t worst_f = 0, worst_g = 0;
    for (std::size_t f = 0; f < n; ++f)
        for (std::size_t g = 0; g < n; ++g) {
            const Matrix lhs = r.matrices[f] * r.matrices[g];
            const Matrix rhs = r.factor_system.at(f, g) * r.matrices[r.group.mul(f, g)];
            const double res = max_abs_diff(lhs, rhs);
            if (res > worst) {
                worst = res;
                worst_f = f;
                worst_g = g;
            }
        }
    rep.worst_residual = std::max(rep.worst_residual, worst);
    if (worst > tol)
        rep.add("multiplication rule violated at pair (" + std::to_string(worst_f) + "," +
                std::to_string(worst_g) + "), residual " + std::to_string(worst));
    return rep;
}

FactorSystem factor_system_from_matrices(const FiniteGroup& g, const std::vector<Matrix>& m) {
    FactorSystem fs;
    fs.group = g;
    fs.mu.assign(g.order, std::vector<cx>(g.order, cx(1.0)));
    for (std::size_t f = 0; f < g.order; ++f)
        for (std::size_t h = 0; h < g.order; ++h) {
            const Matrix prod = m[f] * m[h];
            const cx mu = (m[g.mul(f, h)].dagger() * prod).trace() /
                          static_cast<double>(prod.rows());
            const double mag = std::abs(mu);
            fs.mu[f][h] = mag > 0.0 ? mu / mag : cx(1.0);
        }
    return fs;
}

ProjectiveRep make_projective_rep(const FiniteGroup& g, const FactorSystem& fs,
                                  std::vector<Matrix> matrices) {
    ProjectiveRep r;
    r.group = g;
    r.factor_system = fs;
    r.dim = matrices.empty() ? 0 : matrices[0].rows();
    r.matrices = std::move(matrices);
    return r;
}

ProjectiveRep regular_projective_rep(const FactorSystem& fs) {
    const std::size_t n = fs.group.order;
    std::vector<Matrix> mats(n);
    for (std::size_t f = 0; f < n; ++f) {
        Matrix m(n, n);
        for (std::size_t g = 0; g < n; ++g)
            m(g, fs.group.mul(g, f)) = fs.at(g, f);
        mats[f] = std::move(m);
    }
    return make_projective_rep(fs.group, fs, std::move(mats));
}

BlockDiagonalRep block_diagonal_rep(const IrrepSet& set, const MultiplicityPattern& pattern) {
    if (pattern.counts.size() != set.count())
        throw ValidationError("block_diagonal_rep: pattern length does not match irrep count");
    const std::size_t dim = pattern.total_dim(set);
    if (dim == 0)
        throw ValidationError("block_diagonal_rep: all multiplicities are zero");
    BlockDiagonalRep out;
    const std::size_t n = set.group.order;
    std::vector<Matrix> mats(n, Matrix(dim, dim));
    for (std::size_t f = 0; f < n; ++f) {
        std::size_t off = 0;
        for (std::size_t l = 0; l < set.count(); ++l) {
            const std::size_t d = set.dim_of(l);
            for (std::size_t eta = 0; eta < pattern.counts[l]; ++eta) {
                for (std::size_t i = 0; i < d; ++i)
                    for (std::size_t j = 0; j < d; ++j)
                        mats[f](off + i, off + j) = set.irreps[l].matrices[f](i, j);
                off += d;
            }
        }
    }
    std::size_t off = 0;
    for (std::size_t l = 0; l < set.count(); ++l) {
        const std::size_t d = set.dim_of(l);
        for (std::size_t eta = 0; eta < pattern.counts[l]; ++eta) {
            Matrix p(dim, dim);
            for (std::size_t i = 0; i < d; ++i)
                p(off + i, off + i) = 1.0;
            out.projectors.push_back(std::move(p));
            off += d;
        }
    }
    out.rep = make_projective_rep(set.group, set.factor_system, std::move(mats));
    return out;
}

ProjectiveRep tensor_rep(const ProjectiveRep& a, const ProjectiveRep& b) {
    if (a.group.table != b.group.table)
        throw ValidationError("tensor_rep: representations are over different groups");
    const std::size_t n = a.group.order;
    std::vector<Matrix> mats(n);
    for (std::size_t f = 0; f < n; ++f)
        mats[f] = tensor_product(a.matrices[f], b.matrices[f]);
    FactorSystem fs;
    fs.group = a.group;
    fs.mu.assign(n, std::vector<cx>(n));
    for (std::size_t f = 0; f < n; ++f)
        for (std::size_t g = 0; g < n; ++g)
            fs.mu[f][g] = a.factor_system.at(f, g) * b.factor_system.at(f, g);
    return make_projective_rep(a.group, fs, std::move(mats));
}

std::size_t span_dimension(const ProjectiveRep& r, double rel_tol) {
    const std::size_t n = r.group.order;
    const std::size_t d2 = r.dim * r.dim;
    Matrix flat(n, d2);
    for (std::size_t f = 0; f < n; ++f)
        for (std::size_t k = 0; k < d2; ++k)
            flat(f, k) = r.matrices[f].data()[k];
    return rank_with_threshold(flat, rel_tol);
}

ValidationReport validate_irrep_set(const IrrepSet& s, double tol) {
    ValidationReport rep;
    const std::size_t n = s.group.order;
    std::size_t dim_sq = 0;
    for (const auto& ir : s.irreps)
        dim_sq += ir.dim * ir.dim;
    if (dim_sq != n) {
        rep.add("sum of squared dimensions is " + std::to_string(dim_sq) + ", expected " +
                std::to_string(n));
        return rep;
    }
    for (std::size_t l = 0; l < s.count(); ++l) {
        auto r = validate_projective_rep(
            make_projective_rep(s.group, s.factor_system, s.irreps[l].matrices), tol);
        for (auto& v : r.violations)
            rep.add("irrep " + std::to_string(l) + ": " + v);
        rep.worst_residual = std::max(rep.worst_residual, r.worst_residual);
    }
    // Orthogonality over all row pairs K = (lambda, j, k).
    struct Row {
        std::size_t l, j, k;
    };
    std::vector<Row> rows;
    for (std::size_t l = 0; l < s.count(); ++l)
        for (std::size_t j = 0; j < s.dim_of(l); ++j)
            for (std::size_t k = 0; k < s.dim_of(l); ++k)
                rows.push_back({l, j, k});
    double worst = 0.0;
    for (std::size_t a = 0; a < rows.size(); ++a)
        for (std::size_t b = 0; b < rows.size(); ++b) {
            cx sum = 0.0;
            for (std::size_t f = 0; f < n; ++f)
                sum += s.irreps[rows[a].l].matrices[f](rows[a].j, rows[a].k) *
                       std::conj(s.irreps[rows[b].l].matrices[f](rows[b].j, rows[b].k));
            sum *= static_cast<double>(s.dim_of(rows[a].l)) / static_cast<double>(n);
            const cx expect = (a == b) ? cx(1.0) : cx(0.0);
            worst = std::max(worst, std::abs(sum - expect));
        }
    rep.worst_residual = std::max(rep.worst_residual, worst);
    if (worst > tol)
        rep.add("orthogonality relation violated, worst residual " + std::to_string(worst));
    return rep;
}

Matrix generalized_x(std::size_t n) {
    Matrix x(n, n);
    for (std::size_t k = 0; k < n; ++k)
        x((k + n - 1) % n, k) = 1.0;
    return x;
}

Matrix generalized_z(std::size_t n) {
    Matrix z(n, n);
    for (std::size_t k = 0; k < n; ++k)
        z(k, k) = root_of_unity(static_cast<long long>(k), static_cast<long long>(n));
    return z;
}

IrrepSet cyclic_irrep_set(std::size_t n) {
    IrrepSet s;
    s.group = cyclic_group(n);
    s.factor_system = trivial_factor_system(s.group);
    for (std::size_t j = 0; j < n; ++j) {
        Irrep ir;
        ir.label = j;
        ir.dim = 1;
        for (std::size_t f = 0; f < n; ++f) {
            Matrix m(1, 1);
            m(0, 0) = root_of_unity(static_cast<long long>(j * f), static_cast<long long>(n));
            ir.matrices.push_back(std::move(m));
        }
        s.irreps.push_back(std::move(ir));
    }
    return s;
}

IrrepSet direct_product_irrep_set(const IrrepSet& a, const IrrepSet& b) {
    if (!a.factor_system.is_trivial() || !b.factor_system.is_trivial())
        throw ValidationError("direct_product_irrep_set: factor systems must be trivial");
    IrrepSet s;
    s.group = direct_product(a.group, b.group);
    s.factor_system = trivial_factor_system(s.group);
    std::size_t label = 0;
    for (const auto& ia : a.irreps)
        for (const auto& ib : b.irreps) {
            Irrep ir;
            ir.label = label++;
            ir.dim = ia.dim * ib.dim;
            for (std::size_t f1 = 0; f1 < a.group.order; ++f1)
                for (std::size_t f2 = 0; f2 < b.group.order; ++f2)
                    ir.matrices.push_back(tensor_product(ia.matrices[f1], ib.matrices[f2]));
            s.irreps.push_back(std::move(ir));
        }
    return s;
}

IrrepSet s3_irrep_set() {
    static const std::array<std::array<int, 3>, 6> perm = {{
        {0, 1, 2},
        {1, 2, 0},
        {2, 0, 1},
        {1, 0, 2},
        {0, 2, 1},
        {2, 1, 0},
    }};
    IrrepSet s;
    s.group = symmetric3_group();
    s.factor_system = trivial_factor_system(s.group);

    Irrep trivial;
    trivial.label = 0;
    trivial.dim = 1;
    Irrep sign;
    sign.label = 1;
    sign.dim = 1;
    Irrep standard;
    standard.label = 2;
    standard.dim = 2;

    // Orthonormal basis of the plane orthogonal to (1,1,1).
    const double u[2][3] = {
        {1.0 / std::sqrt(2.0), -1.0 / std::sqrt(2.0), 0.0},
        {1.0 / std::sqrt(6.0), 1.0 / std::sqrt(6.0), -2.0 / std::sqrt(6.0)},
    };
    for (std::size_t f = 0; f < 6; ++f) {
        Matrix one(1, 1);
        one(0, 0) = 1.0;
        trivial.matrices.push_back(one);
        Matrix sg(1, 1);
        sg(0, 0) = f < 3 ? 1.0 : -1.0;
        sign.matrices.push_back(sg);
        Matrix p(3, 3);
        for (int x = 0; x < 3; ++x)
            p(perm[f][x], x) = 1.0;
        Matrix d(2, 2);
        for (int j = 0; j < 2; ++j)
            for (int k = 0; k < 2; ++k) {
                cx acc = 0.0;
                for (int r = 0; r < 3; ++r)
                    for (int c = 0; c < 3; ++c)
                        acc += u[j][r] * p(r, c) * u[k][c];
                d(j, k) = acc;
            }
        standard.matrices.push_back(std::move(d));
    }
    s.irreps = {std::move(trivial), std::move(sign), std::move(standard)};
    return s;
}

namespace {

// D4 elements: index b for r^b (b < 4), index 4 + b for r^b s.
void d4_split(std::size_t i, std::size_t& b, std::size_t& a) {
    a = i / 4;
    b = i % 4;
}

} // namespace

IrrepSet d4_ordinary_irrep_set() {
    IrrepSet s;
    s.group = dihedral_group(4);
    s.factor_system = trivial_factor_system(s.group);
    const std::array<std::array<double, 2>, 4> chars = {{
        {1.0, 1.0},
        {1.0, -1.0},
        {-1.0, 1.0},
        {-1.0, -1.0},
    }};
    for (std::size_t l = 0; l < 4; ++l) {
        Irrep ir;
        ir.label = l;
        ir.dim = 1;
        for (std::size_t f = 0; f < 8; ++f) {
            std::size_t b, a;
            d4_split(f, b, a);
            Matrix m(1, 1);
            m(0, 0) =
                std::pow(chars[l][0], static_cast<double>(b)) * (a ? chars[l][1] : 1.0);
            ir.matrices.push_back(std::move(m));
        }
        s.irreps.push_back(std::move(ir));
    }
    Irrep two;
    two.label = 4;
    two.dim = 2;
    const Matrix rot = Matrix::from_rows({{0.0, -1.0}, {1.0, 0.0}});
    const Matrix ref = Matrix::from_rows({{1.0, 0.0}, {0.0, -1.0}});
    for (std::size_t f = 0; f < 8; ++f) {
        std::size_t b, a;
        d4_split(f, b, a);
        Matrix m = Matrix::identity(2);
        for (std::size_t i = 0; i < b; ++i)
            m = m * rot;
        if (a)
            m = m * ref;
        two.matrices.push_back(std::move(m));
    }
    s.irreps.push_back(std::move(two));
    return s;
}

FactorSystem d4_projective_factor_system() {
    FactorSystem fs;
    fs.group = dihedral_group(4);
    fs.mu.assign(8, std::vector<cx>(8));
    for (std::size_t f = 0; f < 8; ++f)
        for (std::size_t g = 0; g < 8; ++g) {
            std::size_t bf, af, bg, ag;
            d4_split(f, bf, af);
            d4_split(g, bg, ag);
            // Lift through the order-16 dihedral double cover: the product of
            // transversal representatives lands at rotation exponent t, and
            // picks up -1 whenever t leaves [0,4).
            const long long t = static_cast<long long>(bf) +
                                (af ? -static_cast<long long>(bg)
                                    : static_cast<long long>(bg));
            const long long tm = ((t % 8) + 8) % 8;
            fs.mu[f][g] = (tm < 4) ? cx(1.0) : cx(-1.0);
        }
    return fs;
}

IrrepSet d4_projective_irrep_set() {
    IrrepSet s;
    s.group = dihedral_group(4);
    s.factor_system = d4_projective_factor_system();
    const Matrix swap = Matrix::from_rows({{0.0, 1.0}, {1.0, 0.0}});
    for (std::size_t which = 0; which < 2; ++which) {
        const long long kk = which == 0 ? 1 : 3; // zeta = e^(2 pi i k/8)
        Irrep ir;
        ir.label = which;
        ir.dim = 2;
        for (std::size_t f = 0; f < 8; ++f) {
            std::size_t b, a;
            d4_split(f, b, a);
            Matrix m(2, 2);
            const cx z = root_of_unity(kk * static_cast<long long>(b), 8);
            m(0, 0) = z;
            m(1, 1) = std::conj(z);
            if (a)
                m = m * swap;
            ir.matrices.push_back(std::move(m));
        }
        s.irreps.push_back(std::move(ir));
    }
    return s;
}

IrrepSet xz_irrep_set(std::size_t n) {
    XZSystem sys = xz_factor_system(n);
    IrrepSet s;
    s.group = sys.group;
    s.factor_system = sys.factor_system;
    Irrep ir;
    ir.label = 0;
    ir.dim = n;
    const Matrix x = generalized_x(n);
    const Matrix z = generalized_z(n);
    std::vector<Matrix> xp(n), zq(n);
    xp[0] = Matrix::identity(n);
    zq[0] = Matrix::identity(n);
    for (std::size_t k = 1; k < n; ++k) {
        xp[k] = xp[k - 1] * x;
        zq[k] = zq[k - 1] * z;
    }
    for (std::size_t p = 0; p < n; ++p)
        for (std::size_t q = 0; q < n; ++q)
            ir.matrices.push_back(xp[p] * zq[q]);
    s.irreps.push_back(std::move(ir));
    return s;
}

} // namespace nlg
