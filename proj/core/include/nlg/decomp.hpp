#pragma once

#include "nlg/matrix.hpp"

namespace nlg {

inline constexpr double kRankTol = 1e-8;
inline constexpr double kUnitaryTol = 1e-10;
inline constexpr double kResidualTol = 1e-9;
inline constexpr double kNormTol = 1e-9;

/// a = u * diag(s) * v^dag, s sorted descending, u/v have orthonormal columns
/// for every nonzero singular value.
struct Svd {
    Matrix u;
    std::vector<double> s;
    Matrix v;
};

/// One-sided Jacobi SVD. Converges when the off-diagonal column correlations
/// fall below 1e-14 relative to the matrix norm; suited to the small,
/// well-conditioned matrices used here.
Svd svd(const Matrix& a);

std::vector<double> singular_values(const Matrix& a);

/// Number of singular values above rel_tol * largest; 0 for the zero matrix.
/// Requires rel_tol in (0,1).
std::size_t rank_with_threshold(const Matrix& a, double rel_tol = kRankTol);

/// h = q * diag(w) * q^dag for Hermitian h; eigenvalues ascending.
struct Eigh {
    std::vector<double> w;
    Matrix q;
};

Eigh eigh(const Matrix& hermitian);

struct SchmidtTerm {
    double coefficient = 0.0; // nonnegative
    Matrix left;              // dA x dA
    Matrix right;             // dB x dB
};

/// Operator Schmidt decomposition u = sum_k c_k L_k (x) R_k with the factor
/// pairs trace-orthonormal. `rank` counts coefficients at kRankTol.
struct SchmidtDecomposition {
    std::vector<SchmidtTerm> terms;
    std::size_t rank = 0;

    Matrix reconstruct() const;
};

/// Reshape convention: row-major with A-indices outermost, i.e. the
/// coefficient matrix is R[(i,j),(p,q)] = u[(i,p),(j,q)] of shape dA^2 x dB^2.
SchmidtDecomposition operator_schmidt(const Matrix& u, std::size_t da, std::size_t db);

std::size_t operator_schmidt_rank(const Matrix& u, std::size_t da, std::size_t db,
                                  double rel_tol = kRankTol);

/// Pure multi-partite state: amplitudes over the tensor product of `dims`,
/// row-major (last subsystem fastest).
struct StateVector {
    std::vector<std::size_t> dims;
    std::vector<cx> amps;

    StateVector() = default;
    StateVector(std::vector<std::size_t> d, std::vector<cx> a);

    static StateVector basis(std::vector<std::size_t> dims, std::size_t index);

    std::size_t dim() const { return amps.size(); }
    double norm() const;
    StateVector normalized() const;
};

/// Schmidt coefficients squared across the cut after `cut_after` subsystems.
std::vector<double> schmidt_spectrum(const StateVector& s, std::size_t cut_after);

/// Entanglement entropy in bits, -sum lambda log2 lambda over the squared
/// Schmidt coefficients. Throws ValidationError if the state norm deviates
/// from 1 by more than kNormTol.
double entanglement_entropy(const StateVector& s, std::size_t cut_after);

} // namespace nlg
