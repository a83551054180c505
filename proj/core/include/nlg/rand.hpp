#pragma once

#include "nlg/matrix.hpp"

#include <random>

namespace nlg {

using Rng = std::mt19937_64;

cx gaussian(Rng& rng);

/// Standard complex Gaussian entries.
Matrix random_matrix(Rng& rng, std::size_t rows, std::size_t cols);

/// Haar-like random unitary: Gram-Schmidt of a Gaussian matrix, with one
/// re-orthogonalization pass.
Matrix random_unitary(Rng& rng, std::size_t n);

/// Normalized random amplitude vector.
std::vector<cx> random_state(Rng& rng, std::size_t dim);

} // namespace nlg
