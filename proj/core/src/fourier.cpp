#include "nlg/fourier.hpp"

#include <cmath>

namespace nlg {

const Matrix& BBlockTable::at(std::size_t lambda, std::size_t j, std::size_t k) const {
    for (const auto& e : entries)
        if (e.lambda == lambda && e.j == j && e.k == k)
            return e.block;
    throw LookupError("BBlockTable: no block (" + std::to_string(lambda) + "," +
                      std::to_string(j) + "," + std::to_string(k) + ")");
}

Matrix hat_fourier_matrix(const IrrepSet& set) {
    {
        auto rep = validate_irrep_set(set);
        if (!rep.ok())
            throw ValidationError("hat_fourier_matrix: invalid irrep set: " + rep.summary());
    }
    const std::size_t n = set.group.order;
    Matrix hat(n, n);
    std::size_t row = 0;
    for (const auto& ir : set.irreps) {
        const double scale = std::sqrt(static_cast<double>(ir.dim) / static_cast<double>(n));
        for (std::size_t j = 0; j < ir.dim; ++j)
            for (std::size_t k = 0; k < ir.dim; ++k) {
                for (std::size_t f = 0; f < n; ++f)
                    hat(row, f) = scale * ir.matrices[f](j, k);
                ++row;
            }
    }
    return hat;
}

WFamily synthesize_W(const IrrepSet& set, const QBlockFamily& q) {
    if (q.blocks.size() != set.count())
        throw ShapeError("synthesize_W: need one Q block per irrep");
    const std::size_t n = set.group.order;
    const std::size_t dB = q.dB;
    for (std::size_t l = 0; l < set.count(); ++l)
        if (q.blocks[l].rows() != set.dim_of(l) * dB || q.blocks[l].cols() != set.dim_of(l) * dB)
            throw ShapeError("synthesize_W: Q block " + std::to_string(l) + " has wrong shape");
    WFamily out;
    out.dB = dB;
    out.w.assign(n, Matrix(dB, dB));
    for (std::size_t f = 0; f < n; ++f)
        for (std::size_t l = 0; l < set.count(); ++l) {
            const std::size_t d = set.dim_of(l);
            const double scale = static_cast<double>(d) / static_cast<double>(n);
            const Matrix& dm = set.irreps[l].matrices[f];
            const Matrix& qb = q.blocks[l];
            for (std::size_t p = 0; p < dB; ++p)
                for (std::size_t qq = 0; qq < dB; ++qq) {
                    cx acc = 0.0;
                    for (std::size_t j = 0; j < d; ++j)
                        for (std::size_t k = 0; k < d; ++k)
                            acc += std::conj(dm(j, k)) * qb(j * dB + p, k * dB + qq);
                    out.w[f](p, qq) += scale * acc;
                }
        }
    return out;
}

QBlockFamily extract_Q(const IrrepSet& set, const WFamily& w) {
    if (w.w.size() != set.group.order)
        throw ShapeError("extract_Q: need one W per group element");
    QBlockFamily out;
    out.dB = w.dB;
    for (std::size_t l = 0; l < set.count(); ++l) {
        const std::size_t d = set.dim_of(l);
        Matrix q(d * w.dB, d * w.dB);
        for (std::size_t f = 0; f < set.group.order; ++f)
            q += tensor_product(set.irreps[l].matrices[f], w.w[f]);
        out.blocks.push_back(std::move(q));
    }
    return out;
}

std::vector<cx> synthesize_c(const IrrepSet& set, const RBlockFamily& r) {
    if (r.blocks.size() != set.count())
        throw ShapeError("synthesize_c: need one R block per irrep");
    const std::size_t n = set.group.order;
    std::vector<cx> c(n, 0.0);
    for (std::size_t l = 0; l < set.count(); ++l) {
        const std::size_t d = set.dim_of(l);
        if (r.blocks[l].rows() != d || r.blocks[l].cols() != d)
            throw ShapeError("synthesize_c: R block " + std::to_string(l) + " has wrong shape");
        const double scale = static_cast<double>(d) / static_cast<double>(n);
        for (std::size_t f = 0; f < n; ++f) {
            cx acc = 0.0;
            for (std::size_t j = 0; j < d; ++j)
                for (std::size_t k = 0; k < d; ++k)
                    acc += std::conj(set.irreps[l].matrices[f](j, k)) * r.blocks[l](j, k);
            c[f] += scale * acc;
        }
    }
    return c;
}

RBlockFamily extract_R(const IrrepSet& set, const std::vector<cx>& c) {
    if (c.size() != set.group.order)
        throw ShapeError("extract_R: need one coefficient per group element");
    RBlockFamily out;
    for (std::size_t l = 0; l < set.count(); ++l) {
        const std::size_t d = set.dim_of(l);
        Matrix r(d, d);
        for (std::size_t f = 0; f < set.group.order; ++f) {
            if (c[f] == cx(0.0))
                continue;
            for (std::size_t j = 0; j < d; ++j)
                for (std::size_t k = 0; k < d; ++k)
                    r(j, k) += set.irreps[l].matrices[f](j, k) * c[f];
        }
        out.blocks.push_back(std::move(r));
    }
    return out;
}

BBlockTable extract_blocks_B(const IrrepSet& set, const WFamily& w) {
    BBlockTable out;
    out.dB = w.dB;
    for (std::size_t l = 0; l < set.count(); ++l) {
        const std::size_t d = set.dim_of(l);
        for (std::size_t j = 0; j < d; ++j)
            for (std::size_t k = 0; k < d; ++k) {
                Matrix b(w.dB, w.dB);
                for (std::size_t f = 0; f < set.group.order; ++f) {
                    const cx djk = set.irreps[l].matrices[f](j, k);
                    if (djk == cx(0.0))
                        continue;
                    b += djk * w.w[f];
                }
                out.entries.push_back({l, j, k, std::move(b)});
            }
    }
    return out;
}

std::size_t independent_block_count(const BBlockTable& table, const MultiplicityPattern& present,
                                    double rel_tol) {
    std::vector<const Matrix*> rows;
    for (const auto& e : table.entries) {
        if (e.lambda < present.counts.size() && present.counts[e.lambda] == 0)
            continue;
        rows.push_back(&e.block);
    }
    if (rows.empty())
        return 0;
    Matrix flat(rows.size(), table.dB * table.dB);
    for (std::size_t r = 0; r < rows.size(); ++r)
        for (std::size_t k = 0; k < table.dB * table.dB; ++k)
            flat(r, k) = rows[r]->data()[k];
    return rank_with_threshold(flat, rel_tol);
}

std::size_t independent_block_count(const BBlockTable& table, double rel_tol) {
    MultiplicityPattern all;
    return independent_block_count(table, all, rel_tol);
}

QBlockFamily q_blocks_from_B(const IrrepSet& set, const BBlockTable& table) {
    QBlockFamily out;
    out.dB = table.dB;
    for (std::size_t l = 0; l < set.count(); ++l) {
        const std::size_t d = set.dim_of(l);
        Matrix q = Matrix::identity(d * table.dB);
        bool any = false;
        for (const auto& e : table.entries)
            if (e.lambda == l) {
                if (!any) {
                    q = Matrix(d * table.dB, d * table.dB);
                    any = true;
                }
                for (std::size_t p = 0; p < table.dB; ++p)
                    for (std::size_t qq = 0; qq < table.dB; ++qq)
                        q(e.j * table.dB + p, e.k * table.dB + qq) = e.block(p, qq);
            }
        out.blocks.push_back(std::move(q));
    }
    return out;
}

} // namespace nlg
