#pragma once

#include "nlg/decomp.hpp"

#include <cstdint>
#include <string>

namespace nlg {

struct StrengthOptions {
    std::size_t restarts = 32;
    std::uint64_t seed = 12345;
    double initial_step = 0.3;
    double min_step = 1e-7;
};

/// Lower-bound estimate (in ebits) of the entangling strength of a unitary u
/// acting on dA (x) dB: the best entanglement across the AAbar|BBbar cut that
/// (u (x) I) produces from ancilla-assisted product states, maximized by
/// cyclic coordinate descent from `restarts` random starts. Ancilla
/// dimensions equal dA and dB. Deterministic for a fixed seed, and monotone
/// nondecreasing in the restart count.
double entangling_strength_estimate(const Matrix& u, std::size_t dA, std::size_t dB,
                                    const StrengthOptions& opts = {});

struct ResourceBoundReport {
    bool pass = false;
    std::size_t schmidt_rank = 0;
    std::size_t resource_schmidt_rank = 0;
    double strength_estimate = 0.0;
    double resource_entanglement = 0.0;
    bool rank_ok = false;
    bool strength_ok = false;

    std::string summary() const;
};

/// Necessary-condition check for implementing u with a given entangled
/// resource: the resource Schmidt rank must cover the operator Schmidt rank
/// of u and the resource entanglement must cover the strength estimate.
ResourceBoundReport resource_bound_check(const Matrix& u, std::size_t dA, std::size_t dB,
                                         std::size_t resource_schmidt_rank,
                                         double resource_entanglement,
                                         const StrengthOptions& opts = {});

} // namespace nlg
