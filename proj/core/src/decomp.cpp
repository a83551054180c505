#include "nlg/decomp.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

namespace nlg {

namespace {

constexpr double kJacobiConvergence = 1e-14;
constexpr int kMaxSweeps = 80;

// Orthogonalize columns i and j of a against each other by a right-side
// unitary rotation; the same rotation is accumulated into v.
// Returns |a_i^dag a_j| before the rotation.
double orthogonalize_pair(Matrix& a, Matrix& v, std::size_t i, std::size_t j) {
    cx c = 0.0;
    double aa = 0.0, bb = 0.0;
    for (std::size_t r = 0; r < a.rows(); ++r) {
        c += std::conj(a(r, i)) * a(r, j);
        aa += std::norm(a(r, i));
        bb += std::norm(a(r, j));
    }
    const double off = std::abs(c);
    if (off == 0.0)
        return 0.0;
    const cx phase = c / off;
    const double tau = (bb - aa) / (2.0 * off);
    const double t = (tau >= 0.0 ? 1.0 : -1.0) / (std::abs(tau) + std::sqrt(1.0 + tau * tau));
    const double cs = 1.0 / std::sqrt(1.0 + t * t);
    const double sn = cs * t;
    for (std::size_t r = 0; r < a.rows(); ++r) {
        const cx ai = a(r, i), aj = a(r, j);
        a(r, i) = cs * ai - sn * std::conj(phase) * aj;
        a(r, j) = sn * phase * ai + cs * aj;
    }
    for (std::size_t r = 0; r < v.rows(); ++r) {
        const cx vi = v(r, i), vj = v(r, j);
        v(r, i) = cs * vi - sn * std::conj(phase) * vj;
        v(r, j) = sn * phase * vi + cs * vj;
    }
    return off;
}

Svd svd_tall(const Matrix& input) {
    Matrix a = input;
    const std::size_t n = a.cols();
    Matrix v = Matrix::identity(n);
    const double norm = a.frobenius_norm();
    if (norm == 0.0 || n == 0) {
        Svd out;
        out.u = Matrix(a.rows(), n);
        out.s.assign(n, 0.0);
        out.v = v;
        return out;
    }
    for (int sweep = 0; sweep < kMaxSweeps; ++sweep) {
        double off_sq = 0.0;
        for (std::size_t i = 0; i + 1 < n; ++i)
            for (std::size_t j = i + 1; j < n; ++j) {
                const double off = orthogonalize_pair(a, v, i, j);
                off_sq += off * off;
            }
        if (std::sqrt(off_sq) < kJacobiConvergence * norm)
            break;
    }
    Svd out;
    out.s.resize(n);
    std::vector<std::size_t> order(n);
    for (std::size_t j = 0; j < n; ++j) {
        double s = 0.0;
        for (std::size_t r = 0; r < a.rows(); ++r)
            s += std::norm(a(r, j));
        out.s[j] = std::sqrt(s);
        order[j] = j;
    }
    std::stable_sort(order.begin(), order.end(),
                     [&](std::size_t x, std::size_t y) { return out.s[x] > out.s[y]; });
    std::vector<double> sorted(n);
    Matrix u(a.rows(), n), vs(n, n);
    for (std::size_t k = 0; k < n; ++k) {
        const std::size_t j = order[k];
        sorted[k] = out.s[j];
        const double inv = out.s[j] > 0.0 ? 1.0 / out.s[j] : 0.0;
        for (std::size_t r = 0; r < a.rows(); ++r)
            u(r, k) = a(r, j) * inv;
        for (std::size_t r = 0; r < n; ++r)
            vs(r, k) = v(r, j);
    }
    out.s = std::move(sorted);
    out.u = std::move(u);
    out.v = std::move(vs);
    return out;
}

} // namespace

Svd svd(const Matrix& a) {
    if (a.rows() >= a.cols())
        return svd_tall(a);
    // a = u s v^dag  <=>  a^dag = v s u^dag
    Svd t = svd_tall(a.dagger());
    Svd out;
    out.u = std::move(t.v);
    out.s = std::move(t.s);
    out.v = std::move(t.u);
    return out;
}

std::vector<double> singular_values(const Matrix& a) {
    return svd(a).s;
}

std::size_t rank_with_threshold(const Matrix& a, double rel_tol) {
    if (!(rel_tol > 0.0 && rel_tol < 1.0))
        throw ValidationError("rank_with_threshold: rel_tol must be in (0,1)");
    const auto s = singular_values(a);
    if (s.empty() || s[0] == 0.0)
        return 0;
    const double cut = rel_tol * s[0];
    std::size_t r = 0;
    while (r < s.size() && s[r] > cut)
        ++r;
    return r;
}

Eigh eigh(const Matrix& hermitian) {
    if (!hermitian.square())
        throw ShapeError("eigh: non-square matrix");
    const std::size_t n = hermitian.rows();
    Matrix a = hermitian;
    Matrix q = Matrix::identity(n);
    const double norm = a.frobenius_norm();
    for (int sweep = 0; sweep < kMaxSweeps && norm > 0.0; ++sweep) {
        double off_sq = 0.0;
        for (std::size_t p = 0; p + 1 < n; ++p)
            for (std::size_t r = p + 1; r < n; ++r) {
                const cx apr = a(p, r);
                const double off = std::abs(apr);
                off_sq += 2.0 * off * off;
                if (off < 1e-300)
                    continue;
                const cx phase = apr / off;
                const double app = a(p, p).real();
                const double arr = a(r, r).real();
                const double tau = (arr - app) / (2.0 * off);
                const double t =
                    (tau >= 0.0 ? 1.0 : -1.0) / (std::abs(tau) + std::sqrt(1.0 + tau * tau));
                const double cs = 1.0 / std::sqrt(1.0 + t * t);
                const double sn = cs * t;
                // Columns transform like the one-sided case; rows follow by
                // symmetry (a <- J^dag a J).
                for (std::size_t k = 0; k < n; ++k) {
                    const cx akp = a(k, p), akr = a(k, r);
                    a(k, p) = cs * akp - sn * std::conj(phase) * akr;
                    a(k, r) = sn * phase * akp + cs * akr;
                }
                for (std::size_t k = 0; k < n; ++k) {
                    const cx apk = a(p, k), ark = a(r, k);
                    a(p, k) = cs * apk - sn * phase * ark;
                    a(r, k) = sn * std::conj(phase) * apk + cs * ark;
                }
                for (std::size_t k = 0; k < n; ++k) {
                    const cx qkp = q(k, p), qkr = q(k, r);
                    q(k, p) = cs * qkp - sn * std::conj(phase) * qkr;
                    q(k, r) = sn * phase * qkp + cs * qkr;
                }
            }
        if (std::sqrt(off_sq) < kJacobiConvergence * norm)
            break;
    }
    Eigh out;
    out.w.resize(n);
    std::vector<std::size_t> order(n);
    for (std::size_t i = 0; i < n; ++i) {
        out.w[i] = a(i, i).real();
        order[i] = i;
    }
    std::stable_sort(order.begin(), order.end(),
                     [&](std::size_t x, std::size_t y) { return out.w[x] < out.w[y]; });
    std::vector<double> w(n);
    Matrix qs(n, n);
    for (std::size_t k = 0; k < n; ++k) {
        w[k] = out.w[order[k]];
        for (std::size_t r = 0; r < n; ++r)
            qs(r, k) = q(r, order[k]);
    }
    out.w = std::move(w);
    out.q = std::move(qs);
    return out;
}

Matrix SchmidtDecomposition::reconstruct() const {
    if (terms.empty())
        return {};
    const std::size_t da = terms[0].left.rows();
    const std::size_t db = terms[0].right.rows();
    Matrix u(da * db, da * db);
    for (const auto& t : terms)
        u += t.coefficient * tensor_product(t.left, t.right);
    return u;
}

SchmidtDecomposition operator_schmidt(const Matrix& u, std::size_t da, std::size_t db) {
    if (u.rows() != da * db || u.cols() != da * db)
        throw ShapeError("operator_schmidt: matrix is not (da*db) x (da*db)");
    Matrix r(da * da, db * db);
    for (std::size_t i = 0; i < da; ++i)
        for (std::size_t j = 0; j < da; ++j)
            for (std::size_t p = 0; p < db; ++p)
                for (std::size_t q = 0; q < db; ++q)
                    r(i * da + j, p * db + q) = u(i * db + p, j * db + q);
    Svd dec = svd(r);
    SchmidtDecomposition out;
    const double cut = dec.s.empty() ? 0.0 : dec.s[0] * 1e-300;
    for (std::size_t k = 0; k < dec.s.size(); ++k) {
        if (dec.s[k] <= cut || dec.s[k] == 0.0)
            break;
        SchmidtTerm term;
        term.coefficient = dec.s[k];
        term.left = Matrix(da, da);
        term.right = Matrix(db, db);
        for (std::size_t i = 0; i < da; ++i)
            for (std::size_t j = 0; j < da; ++j)
                term.left(i, j) = dec.u(i * da + j, k);
        for (std::size_t p = 0; p < db; ++p)
            for (std::size_t q = 0; q < db; ++q)
                term.right(p, q) = std::conj(dec.v(p * db + q, k));
        out.terms.push_back(std::move(term));
    }
    out.rank = 0;
    if (!out.terms.empty()) {
        const double thresh = kRankTol * out.terms[0].coefficient;
        for (const auto& t : out.terms)
            if (t.coefficient > thresh)
                ++out.rank;
    }
    return out;
}

std::size_t operator_schmidt_rank(const Matrix& u, std::size_t da, std::size_t db,
                                  double rel_tol) {
    if (u.rows() != da * db || u.cols() != da * db)
        throw ShapeError("operator_schmidt_rank: matrix is not (da*db) x (da*db)");
    Matrix r(da * da, db * db);
    for (std::size_t i = 0; i < da; ++i)
        for (std::size_t j = 0; j < da; ++j)
            for (std::size_t p = 0; p < db; ++p)
                for (std::size_t q = 0; q < db; ++q)
                    r(i * da + j, p * db + q) = u(i * db + p, j * db + q);
    return rank_with_threshold(r, rel_tol);
}

StateVector::StateVector(std::vector<std::size_t> d, std::vector<cx> a)
    : dims(std::move(d)), amps(std::move(a)) {
    std::size_t total = 1;
    for (std::size_t x : dims)
        total *= x;
    if (total != amps.size())
        throw ShapeError("StateVector: amplitude count does not match dims");
}

StateVector StateVector::basis(std::vector<std::size_t> dims, std::size_t index) {
    std::size_t total = 1;
    for (std::size_t x : dims)
        total *= x;
    std::vector<cx> a(total, 0.0);
    a.at(index) = 1.0;
    return StateVector(std::move(dims), std::move(a));
}

double StateVector::norm() const {
    double s = 0.0;
    for (const auto& v : amps)
        s += std::norm(v);
    return std::sqrt(s);
}

StateVector StateVector::normalized() const {
    const double n = norm();
    if (n == 0.0)
        throw ValidationError("StateVector: cannot normalize the zero vector");
    StateVector out = *this;
    for (auto& v : out.amps)
        v /= n;
    return out;
}

std::vector<double> schmidt_spectrum(const StateVector& s, std::size_t cut_after) {
    if (cut_after == 0 || cut_after >= s.dims.size())
        throw ShapeError("schmidt_spectrum: cut must split dims into two nonempty groups");
    std::size_t dl = 1, dr = 1;
    for (std::size_t i = 0; i < cut_after; ++i)
        dl *= s.dims[i];
    for (std::size_t i = cut_after; i < s.dims.size(); ++i)
        dr *= s.dims[i];
    Matrix m(dl, dr);
    for (std::size_t i = 0; i < dl; ++i)
        for (std::size_t j = 0; j < dr; ++j)
            m(i, j) = s.amps[i * dr + j];
    auto sv = singular_values(m);
    std::vector<double> lambda(sv.size());
    for (std::size_t i = 0; i < sv.size(); ++i)
        lambda[i] = sv[i] * sv[i];
    return lambda;
}

double entanglement_entropy(const StateVector& s, std::size_t cut_after) {
    if (std::abs(s.norm() - 1.0) > kNormTol)
        throw ValidationError("entanglement_entropy: state is not normalized");
    double h = 0.0;
    for (double l : schmidt_spectrum(s, cut_after))
        if (l > 1e-15)
            h -= l * std::log2(l);
    return std::max(h, 0.0);
}

} // namespace nlg
