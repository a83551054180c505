#include "nlg/group.hpp"

#include <array>
#include <cmath>

namespace nlg {

std::string ValidationReport::summary() const {
    if (ok())
        return "valid";
    std::string s = std::to_string(violations.size()) + " violation(s):";
    for (const auto& v : violations) {
        s += "\n  - ";
        s += v;
    }
    return s;
}

bool FiniteGroup::is_abelian() const {
    for (std::size_t f = 0; f < order; ++f)
        for (std::size_t g = 0; g < f; ++g)
            if (table[f][g] != table[g][f])
                return false;
    return true;
}

FiniteGroup FiniteGroup::from_table(std::vector<std::vector<std::size_t>> table,
                                    std::vector<std::string> labels) {
    FiniteGroup g;
    g.order = table.size();
    g.table = std::move(table);
    g.labels = std::move(labels);
    if (g.labels.empty()) {
        for (std::size_t i = 0; i < g.order; ++i)
            g.labels.push_back("g" + std::to_string(i));
        if (g.order > 0)
            g.labels[0] = "e";
    }
    g.inverses.assign(g.order, 0);
    for (std::size_t f = 0; f < g.order; ++f)
        for (std::size_t h = 0; h < g.order; ++h)
            if (f < g.table.size() && h < g.table[f].size() && g.table[f][h] == 0) {
                g.inverses[f] = h;
                break;
            }
    return g;
}

ValidationReport validate_group(const FiniteGroup& g) {
    ValidationReport rep;
    const std::size_t n = g.order;
    if (g.table.size() != n) {
        rep.add("table has " + std::to_string(g.table.size()) + " rows, expected " +
                std::to_string(n));
        return rep;
    }
    for (std::size_t f = 0; f < n; ++f) {
        if (g.table[f].size() != n) {
            rep.add("row " + std::to_string(f) + " has wrong length");
            return rep;
        }
        for (std::size_t h = 0; h < n; ++h)
            if (g.table[f][h] >= n)
                rep.add("closure violation at (" + std::to_string(f) + "," + std::to_string(h) +
                        "): entry " + std::to_string(g.table[f][h]));
    }
    if (!rep.ok())
        return rep;
    for (std::size_t f = 0; f < n; ++f) {
        if (g.table[0][f] != f || g.table[f][0] != f)
            rep.add("identity violation at element " + std::to_string(f));
    }
    if (g.inverses.size() != n) {
        rep.add("inverse list has wrong length");
    } else {
        for (std::size_t f = 0; f < n; ++f)
            if (g.inverses[f] >= n || g.table[f][g.inverses[f]] != 0)
                rep.add("inverse violation at element " + std::to_string(f));
    }
    for (std::size_t f = 0; f < n; ++f)
        for (std::size_t h = 0; h < n; ++h)
            for (std::size_t k = 0; k < n; ++k)
                if (g.table[g.table[f][h]][k] != g.table[f][g.table[h][k]]) {
                    rep.add("associativity violation at triple (" + std::to_string(f) + "," +
                            std::to_string(h) + "," + std::to_string(k) + ")");
                    if (rep.violations.size() > 32) {
                        rep.add("... further violations suppressed");
                        return rep;
                    }
                }
    return rep;
}

FiniteGroup cyclic_group(std::size_t n) {
    if (n == 0)
        throw ValidationError("cyclic_group: order must be positive");
    std::vector<std::vector<std::size_t>> t(n, std::vector<std::size_t>(n));
    std::vector<std::string> labels(n);
    for (std::size_t i = 0; i < n; ++i) {
        labels[i] = i == 0 ? "e" : "r" + std::to_string(i);
        for (std::size_t j = 0; j < n; ++j)
            t[i][j] = (i + j) % n;
    }
    return FiniteGroup::from_table(std::move(t), std::move(labels));
}

FiniteGroup dihedral_group(std::size_t n) {
    if (n == 0)
        throw ValidationError("dihedral_group: n must be positive");
    const std::size_t order = 2 * n;
    std::vector<std::vector<std::size_t>> t(order, std::vector<std::size_t>(order));
    for (std::size_t i = 0; i < order; ++i)
        for (std::size_t j = 0; j < order; ++j) {
            const bool fi = i >= n, fj = j >= n;
            const std::size_t bi = fi ? i - n : i;
            const std::size_t bj = fj ? j - n : j;
            // s r^b = r^(-b) s
            const std::size_t b = fi ? (bi + n - bj % n) % n : (bi + bj) % n;
            t[i][j] = (fi != fj) ? b + n : b;
        }
    std::vector<std::string> labels(order);
    for (std::size_t i = 0; i < n; ++i) {
        labels[i] = i == 0 ? "e" : "r" + std::to_string(i);
        labels[i + n] = i == 0 ? "s" : "r" + std::to_string(i) + "s";
    }
    return FiniteGroup::from_table(std::move(t), std::move(labels));
}

FiniteGroup symmetric3_group() {
    // Permutations listed in the fixed column order; perm[i][x] is the image
    // of x under element i.
    static const std::array<std::array<int, 3>, 6> perm = {{
        {0, 1, 2}, // e
        {1, 2, 0}, // (123): 1->2, 2->3, 3->1
        {2, 0, 1}, // (132)
        {1, 0, 2}, // (12)
        {0, 2, 1}, // (23)
        {2, 1, 0}, // (13)
    }};
    auto compose_index = [&](std::size_t f, std::size_t g) {
        std::array<int, 3> fg{};
        for (int x = 0; x < 3; ++x)
            fg[x] = perm[f][perm[g][x]];
        for (std::size_t k = 0; k < 6; ++k)
            if (perm[k] == fg)
                return k;
        throw ValidationError("symmetric3_group: composition not found");
    };
    std::vector<std::vector<std::size_t>> t(6, std::vector<std::size_t>(6));
    for (std::size_t f = 0; f < 6; ++f)
        for (std::size_t g = 0; g < 6; ++g)
            t[f][g] = compose_index(f, g);
    return FiniteGroup::from_table(std::move(t),
                                   {"e", "(123)", "(132)", "(12)", "(23)", "(13)"});
}

FiniteGroup direct_product(const FiniteGroup& a, const FiniteGroup& b) {
    const std::size_t n = a.order * b.order;
    std::vector<std::vector<std::size_t>> t(n, std::vector<std::size_t>(n));
    std::vector<std::string> labels(n);
    for (std::size_t i1 = 0; i1 < a.order; ++i1)
        for (std::size_t i2 = 0; i2 < b.order; ++i2) {
            const std::size_t i = i1 * b.order + i2;
            labels[i] = "(" + a.labels[i1] + "," + b.labels[i2] + ")";
            for (std::size_t j1 = 0; j1 < a.order; ++j1)
                for (std::size_t j2 = 0; j2 < b.order; ++j2)
                    t[i][j1 * b.order + j2] = a.table[i1][j1] * b.order + b.table[i2][j2];
        }
    return FiniteGroup::from_table(std::move(t), std::move(labels));
}

bool FactorSystem::is_trivial(double tol) const {
    for (const auto& row : mu)
        for (cx v : row)
            if (std::abs(v - cx(1.0)) > tol)
                return false;
    return true;
}

FactorSystem trivial_factor_system(const FiniteGroup& g) {
    FactorSystem fs;
    fs.group = g;
    fs.mu.assign(g.order, std::vector<cx>(g.order, cx(1.0)));
    return fs;
}

ValidationReport validate_factor_system(const FactorSystem& fs, double tol) {
    ValidationReport rep;
    const std::size_t n = fs.group.order;
    if (fs.mu.size() != n) {
        rep.add("mu table has wrong number of rows");
        return rep;
    }
    for (std::size_t f = 0; f < n; ++f) {
        if (fs.mu[f].size() != n) {
            rep.add("mu row " + std::to_string(f) + " has wrong length");
            return rep;
        }
        for (std::size_t g = 0; g < n; ++g) {
            const double r = std::abs(std::abs(fs.mu[f][g]) - 1.0);
            if (r > 1e-12)
                rep.add("modulus violation at (" + std::to_string(f) + "," + std::to_string(g) +
                            "): |mu| = " + std::to_string(std::abs(fs.mu[f][g])),
                        r);
        }
    }
    for (std::size_t f = 0; f < n; ++f) {
        double r = std::abs(fs.mu[0][f] - cx(1.0));
        if (r > tol)
            rep.add("normalization violation: mu(e," + std::to_string(f) + ") != 1", r);
        r = std::abs(fs.mu[f][0] - cx(1.0));
        if (r > tol)
            rep.add("normalization violation: mu(" + std::to_string(f) + ",e) != 1", r);
    }
    std::size_t reported = 0;
    for (std::size_t h = 0; h < n && reported < 32; ++h)
        for (std::size_t f = 0; f < n && reported < 32; ++f)
            for (std::size_t g = 0; g < n && reported < 32; ++g) {
                const cx lhs = fs.mu[h][f] * fs.mu[fs.group.mul(h, f)][g];
                const cx rhs = fs.mu[h][fs.group.mul(f, g)] * fs.mu[f][g];
                const double r = std::abs(lhs - rhs);
                if (r > tol) {
                    rep.add("cocycle violation at triple (" + std::to_string(h) + "," +
                                std::to_string(f) + "," + std::to_string(g) + ")",
                            r);
                    ++reported;
                }
            }
    return rep;
}

XZSystem xz_factor_system(std::size_t n) {
    if (n < 2)
        throw ValidationError("xz_factor_system: n must be >= 2");
    XZSystem out;
    out.group = direct_product(cyclic_group(n), cyclic_group(n));
    // relabel as integer pairs (p,q)
    for (std::size_t p = 0; p < n; ++p)
        for (std::size_t q = 0; q < n; ++q)
            out.group.labels[p * n + q] =
                "(" + std::to_string(p) + "," + std::to_string(q) + ")";
    const std::size_t order = out.group.order;
    out.factor_system.group = out.group;
    out.factor_system.mu.assign(order, std::vector<cx>(order));
    const long long nn = static_cast<long long>(n);
    for (std::size_t f = 0; f < order; ++f)
        for (std::size_t g = 0; g < order; ++g) {
            const long long q = static_cast<long long>(f % n);
            const long long pp = static_cast<long long>(g / n);
            out.factor_system.mu[f][g] = root_of_unity(-q * pp, nn);
        }
    return out;
}

} // namespace nlg
