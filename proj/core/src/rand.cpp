#include "nlg/rand.hpp"

#include <cmath>

namespace nlg {

cx gaussian(Rng& rng) {
    std::normal_distribution<double> n(0.0, 1.0);
    return cx(n(rng), n(rng));
}

Matrix random_matrix(Rng& rng, std::size_t rows, std::size_t cols) {
    Matrix m(rows, cols);
    for (auto& v : m.data())
        v = gaussian(rng);
    return m;
}

Matrix random_unitary(Rng& rng, std::size_t n) {
    Matrix a = random_matrix(rng, n, n);
    // Modified Gram-Schmidt, run twice for orthogonality near machine epsilon.
    for (int pass = 0; pass < 2; ++pass) {
        for (std::size_t j = 0; j < n; ++j) {
            for (std::size_t k = 0; k < j; ++k) {
                cx dot = 0.0;
                for (std::size_t r = 0; r < n; ++r)
                    dot += std::conj(a(r, k)) * a(r, j);
                for (std::size_t r = 0; r < n; ++r)
                    a(r, j) -= dot * a(r, k);
            }
            double norm = 0.0;
            for (std::size_t r = 0; r < n; ++r)
                norm += std::norm(a(r, j));
            norm = std::sqrt(norm);
            for (std::size_t r = 0; r < n; ++r)
                a(r, j) /= norm;
        }
    }
    return a;
}

std::vector<cx> random_state(Rng& rng, std::size_t dim) {
    std::vector<cx> v(dim);
    double norm = 0.0;
    for (auto& x : v) {
        x = gaussian(rng);
        norm += std::norm(x);
    }
    norm = std::sqrt(norm);
    for (auto& x : v)
        x /= norm;
    return v;
}

} // namespace nlg
