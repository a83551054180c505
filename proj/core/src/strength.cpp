#include "nlg/strength.hpp"

#include "nlg/rand.hpp"

#include <cmath>

namespace nlg {

namespace {

// Objective for one parameter vector: entanglement across AAbar|BBbar after
// applying u to the A,B slots of sigma (x) tau. Parameters are the raw
// real/imaginary parts of sigma (dA^2 amplitudes) then tau (dB^2 amplitudes);
// normalization happens here.
class StrengthObjective {
  public:
    StrengthObjective(const Matrix& u, std::size_t dA, std::size_t dB)
        : u_(u), dA_(dA), dB_(dB), sigma_(dA * dA), tau_(dB * dB),
          state_(dA * dA * dB * dB), gathered_(dA * dB), reshaped_(dA * dA, dB * dB) {}

    std::size_t param_count() const { return 2 * (sigma_.size() + tau_.size()); }

    double evaluate(const std::vector<double>& params) {
        double ns = 0.0, nt = 0.0;
        for (std::size_t i = 0; i < sigma_.size(); ++i) {
            sigma_[i] = cx(params[2 * i], params[2 * i + 1]);
            ns += std::norm(sigma_[i]);
        }
        const std::size_t off = 2 * sigma_.size();
        for (std::size_t i = 0; i < tau_.size(); ++i) {
            tau_[i] = cx(params[off + 2 * i], params[off + 2 * i + 1]);
            nt += std::norm(tau_[i]);
        }
        if (ns < 1e-24 || nt < 1e-24)
            return 0.0;
        const double scale = 1.0 / std::sqrt(ns * nt);

        // state index (iA, iAbar, iB, iBbar), row-major
        for (std::size_t ia = 0; ia < dA_; ++ia)
            for (std::size_t iab = 0; iab < dA_; ++iab)
                for (std::size_t ib = 0; ib < dB_; ++ib)
                    for (std::size_t ibb = 0; ibb < dB_; ++ibb)
                        state_[((ia * dA_ + iab) * dB_ + ib) * dB_ + ibb] =
                            scale * sigma_[ia * dA_ + iab] * tau_[ib * dB_ + ibb];
        // apply u on (A, B)
        for (std::size_t iab = 0; iab < dA_; ++iab)
            for (std::size_t ibb = 0; ibb < dB_; ++ibb) {
                for (std::size_t ia = 0; ia < dA_; ++ia)
                    for (std::size_t ib = 0; ib < dB_; ++ib)
                        gathered_[ia * dB_ + ib] =
                            state_[((ia * dA_ + iab) * dB_ + ib) * dB_ + ibb];
                auto out = u_.apply(gathered_);
                for (std::size_t ia = 0; ia < dA_; ++ia)
                    for (std::size_t ib = 0; ib < dB_; ++ib)
                        state_[((ia * dA_ + iab) * dB_ + ib) * dB_ + ibb] =
                            out[ia * dB_ + ib];
            }
        // entropy across (iA,iAbar) | (iB,iBbar)
        for (std::size_t r = 0; r < dA_ * dA_; ++r)
            for (std::size_t ccol = 0; ccol < dB_ * dB_; ++ccol)
                reshaped_(r, ccol) = state_[r * dB_ * dB_ + ccol];
        double h = 0.0;
        for (double s : singular_values(reshaped_)) {
            const double l = s * s;
            if (l > 1e-15)
                h -= l * std::log2(l);
        }
        return std::max(h, 0.0);
    }

  private:
    const Matrix& u_;
    std::size_t dA_, dB_;
    std::vector<cx> sigma_, tau_;
    std::vector<cx> state_;
    std::vector<cx> gathered_;
    Matrix reshaped_;
};

} // namespace

double entangling_strength_estimate(const Matrix& u, std::size_t dA, std::size_t dB,
                                    const StrengthOptions& opts) {
    if (u.rows() != dA * dB || u.cols() != dA * dB)
        throw ShapeError("entangling_strength_estimate: matrix is not (dA*dB) square");
    if (unitarity_residual(u) > 1e-9)
        throw ValidationError("entangling_strength_estimate: input is not unitary");
    StrengthObjective obj(u, dA, dB);
    Rng rng(opts.seed);
    std::normal_distribution<double> normal(0.0, 1.0);
    double best_overall = 0.0;
    std::vector<double> params(obj.param_count());
    for (std::size_t restart = 0; restart < opts.restarts; ++restart) {
        for (auto& p : params)
            p = normal(rng);
        double best = obj.evaluate(params);
        double step = opts.initial_step;
        while (step >= opts.min_step) {
            bool improved = false;
            for (std::size_t i = 0; i < params.size(); ++i) {
                for (double delta : {step, -step}) {
                    const double saved = params[i];
                    params[i] = saved + delta;
                    const double val = obj.evaluate(params);
                    if (val > best + 1e-13) {
                        best = val;
                        improved = true;
                        break;
                    }
                    params[i] = saved;
                }
            }
            if (!improved)
                step *= 0.5;
        }
        best_overall = std::max(best_overall, best);
    }
    return best_overall;
}

std::string ResourceBoundReport::summary() const {
    std::string s = pass ? "PASS" : "FAIL";
    s += ": schmidt rank " + std::to_string(schmidt_rank) +
         (rank_ok ? " <= " : " > ") + std::to_string(resource_schmidt_rank);
    char buf[96];
    std::snprintf(buf, sizeof(buf), "; strength estimate %.6f %s %.6f ebits",
                  strength_estimate, strength_ok ? "<=" : ">", resource_entanglement);
    return s + buf;
}

ResourceBoundReport resource_bound_check(const Matrix& u, std::size_t dA, std::size_t dB,
                                         std::size_t resource_schmidt_rank,
                                         double resource_entanglement,
                                         const StrengthOptions& opts) {
    ResourceBoundReport rep;
    rep.schmidt_rank = operator_schmidt_rank(u, dA, dB);
    rep.resource_schmidt_rank = resource_schmidt_rank;
    rep.strength_estimate = entangling_strength_estimate(u, dA, dB, opts);
    rep.resource_entanglement = resource_entanglement;
    rep.rank_ok = rep.schmidt_rank <= resource_schmidt_rank;
    rep.strength_ok = rep.strength_estimate <= resource_entanglement + 1e-6;
    rep.pass = rep.rank_ok && rep.strength_ok;
    return rep;
}

} // namespace nlg
