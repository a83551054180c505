#pragma once

#include "nlg/fourier.hpp"

#include <cstdint>

namespace nlg {

/// U = sum_f U(f) (x) W(f) with {U(f)} a projective representation on the
/// A side and arbitrary operators W(f) on the B side.
struct GroupFormUnitary {
    ProjectiveRep rep;
    WFamily wfam;
    Matrix assembled;

    std::size_t dA() const { return rep.dim; }
    std::size_t dB() const { return wfam.dB; }
    std::size_t group_order() const { return rep.group.order; }
};

/// U = sum_j P_j (x) V_j with {P_j} a projective decomposition of the
/// identity (any ranks) and V_j unitary.
struct ControlledUnitary {
    std::vector<Matrix> projectors;
    std::vector<Matrix> unitaries;
    Matrix assembled;

    std::size_t terms() const { return projectors.size(); }
    std::size_t dA() const { return projectors.empty() ? 0 : projectors[0].rows(); }
    std::size_t dB() const { return unitaries.empty() ? 0 : unitaries[0].rows(); }
};

/// U = sum_f c(f) U(f) (x) V(f) with both factors projective representations
/// of the same group; gamma = mu * nu is the factor system of the products.
struct DoubleUnitary {
    std::vector<cx> c;
    ProjectiveRep repA;
    ProjectiveRep repB;
    FactorSystem gamma;
    Matrix assembled;
    Matrix c_operator; // C, |G| x |G|

    std::size_t dA() const { return repA.dim; }
    std::size_t dB() const { return repB.dim; }
    std::size_t group_order() const { return repA.group.order; }
};

GroupFormUnitary assemble_group_unitary(const ProjectiveRep& rep, const WFamily& w);

/// Worst residual over g of sum_f mu*(f,g) W(f)^dag W(fg) - delta(e,g) I.
/// Zero exactly when the W family came from unitary Fourier blocks.
double check_W_condition(const FactorSystem& mu, const WFamily& w);

/// M = sum_f R(f) (x) W(f); block (g,f) equals mu(g, g^-1 f) W(g^-1 f).
/// Unitary iff the W condition holds.
Matrix assemble_M(const FactorSystem& mu, const WFamily& w);

ControlledUnitary assemble_controlled(std::vector<Matrix> projectors,
                                      std::vector<Matrix> unitaries,
                                      double tol = kUnitaryTol);

/// Rewrites a controlled unitary over the cyclic group of order N:
/// U(j) = sum_k omega^(jk) P_k and W(j) the inverse transform of the V_k.
/// The assembled matrices agree exactly.
GroupFormUnitary controlled_to_group(const ControlledUnitary& cu);

/// Requires commuting U(f) (pairwise commutator < tol). Finds a simultaneous
/// eigenbasis by diagonalizing a random Hermitian combination, merges
/// matching eigenphase patterns into projectors, and sets
/// V_lambda = sum_f phase(lambda,f) W(f). Deterministic for a fixed seed.
ControlledUnitary group_to_controlled(const GroupFormUnitary& gfu,
                                      std::uint64_t seed = 0x5eed);

/// Worst absolute deviation over g of sum_f gamma*(f,g) c*(f) c(fg) - delta(e,g).
double check_c_condition(const FactorSystem& gamma, const std::vector<cx>& c);
double check_c_condition(const DoubleUnitary& du);

/// <g|C|f> = gamma(g, g^-1 f) c(g^-1 f); unitary iff the c condition holds.
Matrix assemble_C(const FactorSystem& gamma, const std::vector<cx>& c);

/// W(f) = c(f) V(f): the group-form W family of a double unitary.
WFamily scaled_w_family(const std::vector<cx>& c, const ProjectiveRep& repB);

/// Validates that repA and repB share the group, builds gamma = mu * nu,
/// and assembles both U and C.
DoubleUnitary assemble_double(const std::vector<cx>& c, const ProjectiveRep& repA,
                              const ProjectiveRep& repB);

/// CtrlV^dag (C (x) I) CtrlV with CtrlV = sum_f |f><f| (x) V(f); equals
/// assemble_M over W(f) = c(f) V(f).
Matrix factorized_M(const DoubleUnitary& du);

/// Block-diagonal controlled gate sum_f |f><f| (x) blocks[f].
Matrix controlled_each(const std::vector<Matrix>& blocks);

} // namespace nlg
