#pragma once

#include "nlg/matrix.hpp"

#include <cstddef>
#include <string>
#include <vector>

namespace nlg {

/// Structured list of axiom/identity violations. Empty means valid.
struct ValidationReport {
    std::vector<std::string> violations;
    double worst_residual = 0.0;

    bool ok() const { return violations.empty(); }
    void add(std::string v) { violations.push_back(std::move(v)); }
    void add(std::string v, double residual) {
        violations.push_back(std::move(v));
        worst_residual = std::max(worst_residual, residual);
    }
    std::string summary() const;
};

/// Finite group as a multiplication table. Elements are dense indices
/// 0..order-1 and the identity is always index 0.
struct FiniteGroup {
    std::size_t order = 0;
    std::vector<std::vector<std::size_t>> table; // table[f][g] = index of fg
    std::vector<std::size_t> inverses;
    std::vector<std::string> labels;

    std::size_t identity() const { return 0; }
    std::size_t mul(std::size_t f, std::size_t g) const { return table[f][g]; }
    std::size_t inv(std::size_t f) const { return inverses[f]; }
    bool is_abelian() const;

    /// Builds inverses/labels from a table whose identity is index 0.
    static FiniteGroup from_table(std::vector<std::vector<std::size_t>> table,
                                  std::vector<std::string> labels = {});
};

ValidationReport validate_group(const FiniteGroup& g);

FiniteGroup cyclic_group(std::size_t n);
/// Dihedral group of order 2n: indices 0..n-1 are the rotations r^i,
/// indices n..2n-1 are the reflections r^(i-n) s.
FiniteGroup dihedral_group(std::size_t n);
/// S3 with elements ordered e, (123), (132), (12), (23), (13) and composed
/// as functions, (fg)(x) = f(g(x)).
FiniteGroup symmetric3_group();
/// Element (x1,x2) has index x1 * b.order + x2 (lexicographic).
FiniteGroup direct_product(const FiniteGroup& a, const FiniteGroup& b);

/// Unit-modulus phase table mu(f,g) twisting group multiplication,
/// normalized so mu(e,f) = mu(f,e) = 1.
struct FactorSystem {
    FiniteGroup group;
    std::vector<std::vector<cx>> mu;

    cx at(std::size_t f, std::size_t g) const { return mu[f][g]; }
    bool is_trivial(double tol = 1e-12) const;
};

FactorSystem trivial_factor_system(const FiniteGroup& g);

/// Checks unit modulus, the normalization mu(e,f)=mu(f,e)=1 and the cocycle
/// rule mu(h,f)mu(hf,g) = mu(h,fg)mu(f,g) over all triples.
ValidationReport validate_factor_system(const FactorSystem& fs, double tol = 1e-10);

/// Z_n x Z_n with mu((p,q),(p',q')) = omega^(-q p'), omega = e^(2 pi i / n).
/// Phases are exact roots of unity computed from integer exponents.
struct XZSystem {
    FiniteGroup group;
    FactorSystem factor_system;
};
XZSystem xz_factor_system(std::size_t n);

} // namespace nlg
