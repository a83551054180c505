#pragma once

#include "nlg/decomp.hpp"
#include "nlg/group.hpp"

namespace nlg {

/// Unitary matrices per group element obeying U(f)U(g) = mu(f,g) U(fg),
/// with U(e) = I.
struct ProjectiveRep {
    FiniteGroup group;
    FactorSystem factor_system;
    std::size_t dim = 0;
    std::vector<Matrix> matrices;

    const Matrix& at(std::size_t f) const { return matrices[f]; }
};

struct Irrep {
    std::size_t label = 0;
    std::size_t dim = 0;
    std::vector<Matrix> matrices;
};

/// Complete set of inequivalent irreducibles for one factor system:
/// sum of squared dimensions equals the group order and the orthogonality
/// relations hold across all pairs.
struct IrrepSet {
    FiniteGroup group;
    FactorSystem factor_system;
    std::vector<Irrep> irreps;

    std::size_t count() const { return irreps.size(); }
    std::size_t dim_of(std::size_t lambda) const { return irreps[lambda].dim; }
};

/// Multiplicity n_lambda of each irrep in a block-diagonal representation.
struct MultiplicityPattern {
    std::vector<std::size_t> counts;

    std::size_t total_dim(const IrrepSet& set) const;
};

struct BlockDiagonalRep {
    ProjectiveRep rep;
    std::vector<Matrix> projectors; // one per (lambda, eta) block, summing to I
};

/// Checks per-element unitarity and the multiplication rule over all pairs.
ValidationReport validate_projective_rep(const ProjectiveRep& r, double tol = kUnitaryTol);

/// mu(f,g) recovered as tr(U(fg)^dag U(f) U(g)) / d. Callers should validate
/// the resulting representation afterwards.
FactorSystem factor_system_from_matrices(const FiniteGroup& g, const std::vector<Matrix>& m);

ProjectiveRep make_projective_rep(const FiniteGroup& g, const FactorSystem& fs,
                                  std::vector<Matrix> matrices);

/// Projective regular representation R(f) = sum_g mu(g,f) |g><gf| of
/// dimension |G|; phased permutation matrices.
ProjectiveRep regular_projective_rep(const FactorSystem& fs);

/// U(f) = directsum_lambda directsum_eta D^(lambda)(f); projectors returned
/// per block in (lambda outer, eta inner) order.
BlockDiagonalRep block_diagonal_rep(const IrrepSet& set, const MultiplicityPattern& pattern);

/// Gamma(f) = a(f) (x) b(f); factor system is the product of the two.
ProjectiveRep tensor_rep(const ProjectiveRep& a, const ProjectiveRep& b);

/// Dimension of the operator span of {U(f)}: rank of the |G| x d^2 matrix of
/// flattened representation matrices.
std::size_t span_dimension(const ProjectiveRep& r, double rel_tol = kRankTol);

/// Verifies sum d^2 = |G| and the orthogonality relations
/// (d/|G|) sum_f D_jk(f) D*_j'k'(f) = delta over all index pairs.
ValidationReport validate_irrep_set(const IrrepSet& s, double tol = kUnitaryTol);

/// Cyclic shift X|k> = |k-1 mod n> and clock Z|k> = e^(2 pi i k/n)|k>.
Matrix generalized_x(std::size_t n);
Matrix generalized_z(std::size_t n);

// Built-in irreducible sets.
IrrepSet cyclic_irrep_set(std::size_t n);
IrrepSet direct_product_irrep_set(const IrrepSet& a, const IrrepSet& b);
/// Trivial, sign, and the real orthogonal two-dimensional representation.
IrrepSet s3_irrep_set();
/// Four characters plus the rotation/reflection two-dimensional irrep.
IrrepSet d4_ordinary_irrep_set();
/// The two inequivalent two-dimensional projective irreps for the nontrivial
/// (+-1 valued) factor system of D4; see d4_projective_factor_system().
IrrepSet d4_projective_irrep_set();
FactorSystem d4_projective_factor_system();
/// The single n-dimensional irrep D(p,q) = X^p Z^q of Z_n x Z_n with the
/// xz factor system.
IrrepSet xz_irrep_set(std::size_t n);

} // namespace nlg
