#include "nlg/forms.hpp"

#include "nlg/rand.hpp"

#include <cmath>

namespace nlg {

GroupFormUnitary assemble_group_unitary(const ProjectiveRep& rep, const WFamily& w) {
    if (w.w.size() != rep.group.order)
        throw ShapeError("assemble_group_unitary: need one W per group element");
    for (const auto& m : w.w)
        if (m.rows() != w.dB || m.cols() != w.dB)
            throw ShapeError("assemble_group_unitary: W matrices must be dB x dB");
    GroupFormUnitary out;
    out.rep = rep;
    out.wfam = w;
    out.assembled = Matrix(rep.dim * w.dB, rep.dim * w.dB);
    for (std::size_t f = 0; f < rep.group.order; ++f)
        out.assembled += tensor_product(rep.matrices[f], w.w[f]);
    return out;
}

double check_W_condition(const FactorSystem& mu, const WFamily& w) {
    const std::size_t n = mu.group.order;
    if (w.w.size() != n)
        throw ShapeError("check_W_condition: need one W per group element");
    double worst = 0.0;
    for (std::size_t g = 0; g < n; ++g) {
        Matrix sum(w.dB, w.dB);
        for (std::size_t f = 0; f < n; ++f)
            sum += std::conj(mu.at(f, g)) * (w.w[f].dagger() * w.w[mu.group.mul(f, g)]);
        if (g == 0)
            sum -= Matrix::identity(w.dB);
        worst = std::max(worst, sum.max_abs());
    }
    return worst;
}

Matrix assemble_M(const FactorSystem& mu, const WFamily& w) {
    const std::size_t n = mu.group.order;
    const ProjectiveRep reg = regular_projective_rep(mu);
    Matrix m(n * w.dB, n * w.dB);
    for (std::size_t f = 0; f < n; ++f)
        m += tensor_product(reg.matrices[f], w.w[f]);
    return m;
}

ControlledUnitary assemble_controlled(std::vector<Matrix> projectors,
                                      std::vector<Matrix> unitaries, double tol) {
    if (projectors.empty() || projectors.size() != unitaries.size())
        throw ValidationError("assemble_controlled: need matching projector/unitary lists");
    const std::size_t da = projectors[0].rows();
    const std::size_t db = unitaries[0].rows();
    Matrix sum(da, da);
    for (std::size_t j = 0; j < projectors.size(); ++j) {
        const Matrix& p = projectors[j];
        if (!p.square() || p.rows() != da)
            throw ShapeError("assemble_controlled: projector shape mismatch");
        if (max_abs_diff(p, p.dagger()) > tol)
            throw ValidationError("assemble_controlled: projector " + std::to_string(j) +
                                  " is not Hermitian");
        for (std::size_t k = 0; k < projectors.size(); ++k) {
            const Matrix prod = p * projectors[k];
            const double res = (j == k) ? max_abs_diff(prod, p) : prod.max_abs();
            if (res > tol)
                throw ValidationError("assemble_controlled: projectors " + std::to_string(j) +
                                      "," + std::to_string(k) + " violate orthogonality");
        }
        if (unitarity_residual(unitaries[j]) > tol)
            throw ValidationError("assemble_controlled: V_" + std::to_string(j) +
                                  " is not unitary");
        if (unitaries[j].rows() != db)
            throw ShapeError("assemble_controlled: unitary shape mismatch");
        sum += p;
    }
    if (max_abs_diff(sum, Matrix::identity(da)) > tol)
        throw ValidationError("assemble_controlled: projectors do not sum to the identity");
    ControlledUnitary out;
    out.assembled = Matrix(da * db, da * db);
    for (std::size_t j = 0; j < projectors.size(); ++j)
        out.assembled += tensor_product(projectors[j], unitaries[j]);
    out.projectors = std::move(projectors);
    out.unitaries = std::move(unitaries);
    return out;
}

GroupFormUnitary controlled_to_group(const ControlledUnitary& cu) {
    const std::size_t n = cu.terms();
    const std::size_t da = cu.dA();
    FiniteGroup zn = cyclic_group(n);
    FactorSystem fs = trivial_factor_system(zn);
    std::vector<Matrix> umats(n);
    WFamily w;
    w.dB = cu.dB();
    w.w.assign(n, Matrix(w.dB, w.dB));
    for (std::size_t j = 0; j < n; ++j) {
        Matrix u(da, da);
        for (std::size_t k = 0; k < n; ++k)
            u += root_of_unity(static_cast<long long>(j * k), static_cast<long long>(n)) *
                 cu.projectors[k];
        umats[j] = std::move(u);
        for (std::size_t k = 0; k < n; ++k)
            w.w[j] += (1.0 / static_cast<double>(n)) *
                      root_of_unity(-static_cast<long long>(j * k), static_cast<long long>(n)) *
                      cu.unitaries[k];
    }
    return assemble_group_unitary(make_projective_rep(zn, fs, std::move(umats)), w);
}

ControlledUnitary group_to_controlled(const GroupFormUnitary& gfu, std::uint64_t seed) {
    const std::size_t n = gfu.group_order();
    const std::size_t da = gfu.dA();
    const auto& mats = gfu.rep.matrices;
    for (std::size_t f = 0; f < n; ++f)
        for (std::size_t g = f + 1; g < n; ++g)
            if (max_abs_diff(mats[f] * mats[g], mats[g] * mats[f]) > 1e-10)
                throw ValidationError("group_to_controlled: U(f) do not commute");

    Rng rng(seed);
    Matrix q;
    bool found = false;
    for (int attempt = 0; attempt < 8 && !found; ++attempt) {
        Matrix h(da, da);
        for (std::size_t f = 0; f < n; ++f) {
            const cx z = gaussian(rng);
            h += z * mats[f] + std::conj(z) * mats[f].dagger();
        }
        q = eigh(h).q;
        found = true;
        for (std::size_t f = 0; f < n && found; ++f) {
            Matrix d = q.dagger() * mats[f] * q;
            for (std::size_t i = 0; i < da; ++i)
                d(i, i) = 0.0;
            if (d.max_abs() > 1e-9)
                found = false;
        }
    }
    if (!found)
        throw ValidationError("group_to_controlled: failed to find a simultaneous eigenbasis");

    // Eigenphase pattern per basis column.
    std::vector<std::vector<cx>> phases(da, std::vector<cx>(n));
    for (std::size_t f = 0; f < n; ++f) {
        const Matrix d = q.dagger() * mats[f] * q;
        for (std::size_t m = 0; m < da; ++m)
            phases[m][f] = d(m, m);
    }
    std::vector<long> cls(da, -1);
    std::vector<std::size_t> reps;
    for (std::size_t m = 0; m < da; ++m) {
        for (std::size_t c = 0; c < reps.size(); ++c) {
            double diff = 0.0;
            for (std::size_t f = 0; f < n; ++f)
                diff = std::max(diff, std::abs(phases[m][f] - phases[reps[c]][f]));
            if (diff < 1e-7) {
                cls[m] = static_cast<long>(c);
                break;
            }
        }
        if (cls[m] < 0) {
            cls[m] = static_cast<long>(reps.size());
            reps.push_back(m);
        }
    }
    std::vector<Matrix> projectors(reps.size(), Matrix(da, da));
    for (std::size_t m = 0; m < da; ++m) {
        Matrix& p = projectors[static_cast<std::size_t>(cls[m])];
        for (std::size_t i = 0; i < da; ++i)
            for (std::size_t j = 0; j < da; ++j)
                p(i, j) += q(i, m) * std::conj(q(j, m));
    }
    std::vector<Matrix> vs;
    for (std::size_t c = 0; c < reps.size(); ++c) {
        Matrix v(gfu.dB(), gfu.dB());
        for (std::size_t f = 0; f < n; ++f)
            v += phases[reps[c]][f] * gfu.wfam.w[f];
        vs.push_back(std::move(v));
    }
    return assemble_controlled(std::move(projectors), std::move(vs), 1e-9);
}

double check_c_condition(const FactorSystem& gamma, const std::vector<cx>& c) {
    const std::size_t n = gamma.group.order;
    if (c.size() != n)
        throw ShapeError("check_c_condition: need one coefficient per group element");
    double worst = 0.0;
    for (std::size_t g = 0; g < n; ++g) {
        cx sum = 0.0;
        for (std::size_t f = 0; f < n; ++f)
            sum += std::conj(gamma.at(f, g)) * std::conj(c[f]) * c[gamma.group.mul(f, g)];
        if (g == 0)
            sum -= 1.0;
        worst = std::max(worst, std::abs(sum));
    }
    return worst;
}

double check_c_condition(const DoubleUnitary& du) {
    return check_c_condition(du.gamma, du.c);
}

Matrix assemble_C(const FactorSystem& gamma, const std::vector<cx>& c) {
    const std::size_t n = gamma.group.order;
    Matrix m(n, n);
    for (std::size_t g = 0; g < n; ++g)
        for (std::size_t f = 0; f < n; ++f) {
            const std::size_t h = gamma.group.mul(gamma.group.inv(g), f);
            m(g, f) = gamma.at(g, h) * c[h];
        }
    return m;
}

WFamily scaled_w_family(const std::vector<cx>& c, const ProjectiveRep& repB) {
    WFamily w;
    w.dB = repB.dim;
    for (std::size_t f = 0; f < repB.group.order; ++f)
        w.w.push_back(c[f] * repB.matrices[f]);
    return w;
}

DoubleUnitary assemble_double(const std::vector<cx>& c, const ProjectiveRep& repA,
                              const ProjectiveRep& repB) {
    if (repA.group.table != repB.group.table)
        throw ValidationError("assemble_double: representations are over different groups");
    if (c.size() != repA.group.order)
        throw ShapeError("assemble_double: need one coefficient per group element");
    DoubleUnitary out;
    out.c = c;
    out.repA = repA;
    out.repB = repB;
    out.gamma.group = repA.group;
    const std::size_t n = repA.group.order;
    out.gamma.mu.assign(n, std::vector<cx>(n));
    for (std::size_t f = 0; f < n; ++f)
        for (std::size_t g = 0; g < n; ++g)
            out.gamma.mu[f][g] = repA.factor_system.at(f, g) * repB.factor_system.at(f, g);
    {
        auto rep = validate_factor_system(out.gamma);
        if (!rep.ok())
            throw ValidationError("assemble_double: gamma is not a valid factor system: " +
                                  rep.summary());
    }
    out.assembled = Matrix(repA.dim * repB.dim, repA.dim * repB.dim);
    for (std::size_t f = 0; f < n; ++f) {
        if (c[f] == cx(0.0))
            continue;
        out.assembled += c[f] * tensor_product(repA.matrices[f], repB.matrices[f]);
    }
    out.c_operator = assemble_C(out.gamma, c);
    return out;
}

Matrix controlled_each(const std::vector<Matrix>& blocks) {
    std::size_t dim = 0;
    for (const auto& b : blocks)
        dim += b.rows();
    Matrix m(dim, dim);
    std::size_t off = 0;
    for (const auto& b : blocks) {
        for (std::size_t i = 0; i < b.rows(); ++i)
            for (std::size_t j = 0; j < b.cols(); ++j)
                m(off + i, off + j) = b(i, j);
        off += b.rows();
    }
    return m;
}

Matrix factorized_M(const DoubleUnitary& du) {
    const Matrix ctrl_v = controlled_each(du.repB.matrices);
    const Matrix c_ext = tensor_product(du.c_operator, Matrix::identity(du.repB.dim));
    return ctrl_v.dagger() * c_ext * ctrl_v;
}

} // namespace nlg
