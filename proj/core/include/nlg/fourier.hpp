#pragma once

#include "nlg/rep.hpp"

namespace nlg {

/// One unitary block Q^(lambda) per irrep, of size (d_lambda * dB) square.
/// Index convention matches the tensor product D^(lambda)(f) (x) W(f):
/// row (j,p) = j*dB + p, column (k,q) = k*dB + q.
struct QBlockFamily {
    std::size_t dB = 0;
    std::vector<Matrix> blocks; // one per irrep, in set order
};

/// One d_lambda x d_lambda unitary block R^(lambda) per irrep (the scalar
/// analogue of QBlockFamily, dB = 1).
struct RBlockFamily {
    std::vector<Matrix> blocks;
};

/// Operators W(f) on the B side, one per group element.
struct WFamily {
    std::size_t dB = 0;
    std::vector<Matrix> w;

    const Matrix& at(std::size_t f) const { return w[f]; }
};

/// dB x dB blocks indexed by (lambda, j, k); each block is row K of the
/// squashed coefficient matrix reshaped to dB x dB.
struct BBlockTable {
    struct Entry {
        std::size_t lambda = 0, j = 0, k = 0;
        Matrix block;
    };
    std::size_t dB = 0;
    std::vector<Entry> entries;

    const Matrix& at(std::size_t lambda, std::size_t j, std::size_t k) const;
};

/// The |G| x |G| unitary with rows K = (lambda, j, k) (lambda outermost) and
/// columns f, entries sqrt(d_lambda/|G|) D^(lambda)_jk(f).
Matrix hat_fourier_matrix(const IrrepSet& set);

/// Inverse group Fourier transform:
/// W_pq(f) = sum_lambda (d_lambda/N) sum_jk conj(D^(lambda)_jk(f)) Q^(lambda)_(jp;kq).
/// Requires one block per irrep (use identities for irreps absent from the
/// A-side representation).
WFamily synthesize_W(const IrrepSet& set, const QBlockFamily& q);

/// Forward transform Q^(lambda) = sum_f D^(lambda)(f) (x) W(f); inverse of
/// synthesize_W over a complete irrep set.
QBlockFamily extract_Q(const IrrepSet& set, const WFamily& w);

/// c(f) = sum_lambda (d_lambda/N) sum_jk conj(D^(lambda)_jk(f)) R^(lambda)_jk.
std::vector<cx> synthesize_c(const IrrepSet& set, const RBlockFamily& r);

/// R^(lambda)_jk = sum_f D^(lambda)_jk(f) c(f); inverse of synthesize_c.
RBlockFamily extract_R(const IrrepSet& set, const std::vector<cx>& c);

/// B^(lambda j k)_pq = sum_f D^(lambda)_jk(f) W_pq(f).
BBlockTable extract_blocks_B(const IrrepSet& set, const WFamily& w);

/// Number of linearly independent blocks among those whose irrep is present
/// (nonzero multiplicity); with all irreps counted this equals the Schmidt
/// rank of the assembled unitary.
std::size_t independent_block_count(const BBlockTable& table, const MultiplicityPattern& present,
                                    double rel_tol = kRankTol);
std::size_t independent_block_count(const BBlockTable& table, double rel_tol = kRankTol);

/// Packs explicit B blocks into a QBlockFamily via Q^(lambda)_(jp;kq) =
/// B^(lambda j k)_pq; irreps with no listed blocks get identity fillers.
QBlockFamily q_blocks_from_B(const IrrepSet& set, const BBlockTable& table);

} // namespace nlg
