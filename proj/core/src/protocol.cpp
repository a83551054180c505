#include "nlg/protocol.hpp"

#include <array>
#include <cmath>

namespace nlg {

Matrix build_F(std::size_t n) {
    if (n == 0)
        throw ValidationError("build_F: N must be positive");
    Matrix f(n, n);
    const double scale = 1.0 / std::sqrt(static_cast<double>(n));
    for (std::size_t m = 0; m < n; ++m)
        for (std::size_t j = 0; j < n; ++j)
            f(m, j) = scale * root_of_unity(static_cast<long long>(m * j),
                                            static_cast<long long>(n));
    return f;
}

namespace {

void require_unbiased(const Matrix& f) {
    const std::size_t n = f.rows();
    if (!f.square())
        throw ShapeError("F must be square");
    const double want = 1.0 / std::sqrt(static_cast<double>(n));
    for (std::size_t m = 0; m < n; ++m)
        for (std::size_t j = 0; j < n; ++j)
            if (std::abs(std::abs(f(m, j)) - want) > 1e-10)
                throw ValidationError("F is not unbiased: |<m|F|j>| must be N^(-1/2)");
}

} // namespace

Matrix build_Zh(const Matrix& f, std::size_t h) {
    require_unbiased(f);
    const std::size_t n = f.rows();
    const double rootn = std::sqrt(static_cast<double>(n));
    Matrix z(n, n);
    for (std::size_t j = 0; j < n; ++j)
        z(j, j) = 1.0 / (rootn * f(h, j));
    return z;
}

ProtocolSpec group_protocol_spec(const GroupFormUnitary& gfu) {
    ProtocolSpec spec;
    spec.variant = ProtocolVariant::Group;
    spec.N = gfu.group_order();
    spec.dA = gfu.dA();
    spec.dB = gfu.dB();
    spec.target = gfu.assembled;
    spec.F = build_F(spec.N);
    spec.rep = gfu.rep;
    spec.wfam = gfu.wfam;
    spec.M = assemble_M(gfu.rep.factor_system, gfu.wfam);
    spec.form_condition_residual = check_W_condition(gfu.rep.factor_system, gfu.wfam);
    return spec;
}

ProtocolSpec controlled_protocol_spec(const ControlledUnitary& cu) {
    ProtocolSpec spec;
    spec.variant = ProtocolVariant::Controlled;
    spec.N = cu.terms();
    spec.dA = cu.dA();
    spec.dB = cu.dB();
    spec.target = cu.assembled;
    spec.F = build_F(spec.N);
    spec.cu = cu;
    spec.form_condition_residual = 0.0;
    return spec;
}

namespace {

ProtocolSpec double_spec_common(const DoubleUnitary& du) {
    ProtocolSpec spec;
    spec.variant = ProtocolVariant::Double;
    spec.N = du.group_order();
    spec.dA = du.dA();
    spec.dB = du.dB();
    spec.target = du.assembled;
    spec.F = build_F(spec.N);
    spec.rep = du.repA;
    spec.wfam = scaled_w_family(du.c, du.repB);
    spec.form_condition_residual = check_c_condition(du);
    return spec;
}

} // namespace

ProtocolSpec double_protocol_spec(const DoubleUnitary& du) {
    ProtocolSpec spec = double_spec_common(du);
    spec.M = factorized_M(du);
    return spec;
}

ProtocolSpec double_protocol_spec_generic_m(const DoubleUnitary& du) {
    ProtocolSpec spec = double_spec_common(du);
    spec.M = assemble_M(du.repA.factor_system, spec.wfam);
    return spec;
}

namespace {

// Dense state over registers [a, b, A, B]; gates are explicit matrices over
// an ordered register subset (first listed register is the most significant
// gate index).
class CircuitState {
  public:
    CircuitState(std::size_t n, std::size_t da, std::size_t db)
        : dims_{n, n, da, db}, amps_(n * n * da * db) {}

    std::vector<cx>& amps() { return amps_; }
    const std::vector<cx>& amps() const { return amps_; }

    void apply(const Matrix& gate, const std::vector<int>& regs) {
        std::size_t m = 1;
        for (int r : regs)
            m *= dims_[static_cast<std::size_t>(r)];
        if (gate.rows() != m || gate.cols() != m)
            throw ShapeError("CircuitState::apply: gate dimension mismatch");
        const std::array<std::size_t, 4> strides = {dims_[1] * dims_[2] * dims_[3],
                                                    dims_[2] * dims_[3], dims_[3], 1};
        // Offsets of each gate basis index within the full state.
        std::vector<std::size_t> gate_offsets(m, 0);
        for (std::size_t gi = 0; gi < m; ++gi) {
            std::size_t rem = gi, off = 0;
            for (std::size_t ri = regs.size(); ri-- > 0;) {
                const std::size_t d = dims_[static_cast<std::size_t>(regs[ri])];
                off += (rem % d) * strides[static_cast<std::size_t>(regs[ri])];
                rem /= d;
            }
            gate_offsets[gi] = off;
        }
        // Base offsets: all states with the selected registers at index 0.
        std::vector<std::size_t> bases;
        bases.reserve(amps_.size() / m);
        for (std::size_t idx = 0; idx < amps_.size(); ++idx) {
            bool zero = true;
            for (int r : regs) {
                const std::size_t ri = static_cast<std::size_t>(r);
                if ((idx / strides[ri]) % dims_[ri] != 0) {
                    zero = false;
                    break;
                }
            }
            if (zero)
                bases.push_back(idx);
        }
        std::vector<cx> in(m), out(m);
        for (std::size_t base : bases) {
            for (std::size_t gi = 0; gi < m; ++gi)
                in[gi] = amps_[base + gate_offsets[gi]];
            for (std::size_t i = 0; i < m; ++i) {
                cx acc = 0.0;
                for (std::size_t j = 0; j < m; ++j)
                    acc += gate(i, j) * in[j];
                out[i] = acc;
            }
            for (std::size_t gi = 0; gi < m; ++gi)
                amps_[base + gate_offsets[gi]] = out[gi];
        }
    }

  private:
    std::array<std::size_t, 4> dims_;
    std::vector<cx> amps_;
};

struct Gate {
    Matrix matrix;
    std::vector<int> regs;
};

// Register ids for readability.
constexpr int kRegA = 0; // Alice ancilla a
constexpr int kRegB = 1; // Bob ancilla b
constexpr int kRegSysA = 2;
constexpr int kRegSysB = 3;

std::vector<Gate> build_gates(const ProtocolSpec& spec) {
    const std::size_t n = spec.N;
    std::vector<Gate> gates;
    if (spec.variant == ProtocolVariant::Controlled) {
        const auto& cu = spec.cu;
        // sum_j P_j (x) X^j on (A, a), gate order (a, A): sum_j X^j (x) P_j
        Matrix ctrl_x(n * spec.dA, n * spec.dA);
        const Matrix x = generalized_x(n);
        Matrix xj = Matrix::identity(n);
        for (std::size_t j = 0; j < n; ++j) {
            ctrl_x += tensor_product(xj, cu.projectors[j]);
            xj = xj * x;
        }
        gates.push_back({std::move(ctrl_x), {kRegA, kRegSysA}});
        // classical message l: X^l on b
        Matrix msg(n * n, n * n);
        Matrix xl = Matrix::identity(n);
        for (std::size_t l = 0; l < n; ++l) {
            msg += tensor_product(Matrix::dyad(n, l, l), xl);
            xl = xl * x;
        }
        gates.push_back({std::move(msg), {kRegA, kRegB}});
        gates.push_back({controlled_each(cu.unitaries), {kRegB, kRegSysB}});
        gates.push_back({spec.F, {kRegB}});
        // correction Z_m = sum_j (sqrt(N) <m|F|j>)^(-1) P_j on A
        Matrix corr(n * spec.dA, n * spec.dA);
        const double rootn = std::sqrt(static_cast<double>(n));
        for (std::size_t m = 0; m < n; ++m) {
            Matrix zm(spec.dA, spec.dA);
            for (std::size_t j = 0; j < n; ++j)
                zm += (cx(1.0) / (rootn * spec.F(m, j))) * cu.projectors[j];
            corr += tensor_product(Matrix::dyad(n, m, m), zm);
        }
        gates.push_back({std::move(corr), {kRegB, kRegSysA}});
    } else {
        gates.push_back({controlled_each(spec.rep.matrices), {kRegA, kRegSysA}});
        gates.push_back({spec.F, {kRegA}});
        Matrix phase_fix(n * n, n * n);
        for (std::size_t h = 0; h < n; ++h)
            phase_fix += tensor_product(Matrix::dyad(n, h, h), build_Zh(spec.F, h));
        gates.push_back({std::move(phase_fix), {kRegA, kRegB}});
        gates.push_back({spec.M, {kRegB, kRegSysB}});
        std::vector<Matrix> corrections;
        for (const auto& u : spec.rep.matrices)
            corrections.push_back(u.dagger());
        gates.push_back({controlled_each(corrections), {kRegB, kRegSysA}});
    }
    return gates;
}

} // namespace

double ProtocolTranscript::worst_residual() const {
    double w = 0.0;
    for (const auto& b : branches)
        w = std::max(w, b.residual);
    return w;
}

double ProtocolTranscript::probability_spread() const {
    const double uniform = 1.0 / static_cast<double>(N * N);
    double w = 0.0;
    for (const auto& b : branches)
        w = std::max(w, std::abs(b.probability - uniform));
    return w;
}

ProtocolTranscript simulate(const ProtocolSpec& spec, const StateVector& input) {
    const std::size_t n = spec.N, da = spec.dA, db = spec.dB;
    const std::size_t d = da * db;
    if (input.dim() != d)
        throw ShapeError("simulate: input dimension must be dA*dB");
    if (std::abs(input.norm() - 1.0) > kNormTol)
        throw ValidationError("simulate: input state is not normalized");
    require_unbiased(spec.F);

    const auto gates = build_gates(spec);
    const double amp = 1.0 / std::sqrt(static_cast<double>(n));

    // Final circuit state for every basis input |i>_A |p>_B.
    std::vector<std::vector<cx>> columns(d);
    for (std::size_t col = 0; col < d; ++col) {
        CircuitState state(n, da, db);
        for (std::size_t f = 0; f < n; ++f)
            state.amps()[(f * n + f) * d + col] = amp;
        for (const auto& g : gates)
            state.apply(g.matrix, g.regs);
        columns[col] = std::move(state.amps());
    }

    ProtocolTranscript t;
    t.N = n;
    t.dA = da;
    t.dB = db;
    t.target = spec.target;
    t.form_condition_residual = spec.form_condition_residual;
    t.flagged_invalid = spec.form_condition_residual > kResidualTol;

    Matrix completeness(d, d);
    for (std::size_t h = 0; h < n; ++h)
        for (std::size_t g = 0; g < n; ++g) {
            Branch br;
            br.outcome_a = h;
            br.outcome_b = g;
            br.kraus = Matrix(d, d);
            for (std::size_t col = 0; col < d; ++col)
                for (std::size_t row = 0; row < d; ++row)
                    br.kraus(row, col) = columns[col][(h * n + g) * d + row];
            completeness += br.kraus.dagger() * br.kraus;

            const cx overlap = (spec.target.dagger() * br.kraus).trace();
            br.phase = std::abs(overlap) > 0.0 ? overlap / std::abs(overlap) : cx(1.0);
            Matrix expect = (br.phase / static_cast<double>(n)) * spec.target;
            br.residual = max_abs_diff(br.kraus, expect);

            auto out = br.kraus.apply(input.amps);
            double norm_sq = 0.0;
            for (const auto& v : out)
                norm_sq += std::norm(v);
            br.probability = norm_sq;
            if (norm_sq > 1e-24) {
                const double inv = 1.0 / std::sqrt(norm_sq);
                for (auto& v : out)
                    v *= inv;
            }
            br.output = std::move(out);
            t.branches.push_back(std::move(br));
        }
    t.completeness_residual = max_abs_diff(completeness, Matrix::identity(d));
    return t;
}

ProtocolTranscript simulate_group_protocol(const GroupFormUnitary& gfu, const StateVector& in) {
    return simulate(group_protocol_spec(gfu), in);
}

ProtocolTranscript simulate_controlled_protocol(const ControlledUnitary& cu,
                                                const StateVector& in) {
    return simulate(controlled_protocol_spec(cu), in);
}

ProtocolTranscript simulate_double_protocol(const DoubleUnitary& du, const StateVector& in) {
    return simulate(double_protocol_spec(du), in);
}

std::string InfoAbsenceReport::summary() const {
    char buf[160];
    std::snprintf(buf, sizeof(buf),
                  "%s: worst K^dag K deviation %.3e, worst pairwise deviation %.3e (tol %.1e)",
                  pass ? "PASS" : "FAIL", worst_kraus_deviation, worst_pairwise, tolerance);
    return buf;
}

InfoAbsenceReport information_absence_check(const ProtocolTranscript& t, double tol) {
    InfoAbsenceReport rep;
    rep.tolerance = tol;
    const std::size_t d = t.dA * t.dB;
    std::vector<Matrix> normalized;
    for (const auto& br : t.branches) {
        Matrix gram = br.kraus.dagger() * br.kraus;
        const double c2 = gram.trace().real() / static_cast<double>(d);
        Matrix dev = gram - c2 * Matrix::identity(d);
        rep.worst_kraus_deviation = std::max(rep.worst_kraus_deviation, dev.max_abs());
        const double norm = br.kraus.frobenius_norm();
        normalized.push_back(norm > 0.0 ? (1.0 / norm) * br.kraus : br.kraus);
    }
    for (std::size_t i = 0; i < normalized.size(); ++i)
        for (std::size_t j = i + 1; j < normalized.size(); ++j)
            rep.worst_pairwise = std::max(
                rep.worst_pairwise, phase_aligned_diff(normalized[i], normalized[j]));
    rep.pass = rep.worst_kraus_deviation < tol && rep.worst_pairwise < tol;
    return rep;
}

} // namespace nlg
