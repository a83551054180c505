#pragma once

#include "nlg/forms.hpp"

#include <optional>

namespace nlg {

/// N x N discrete Fourier matrix F_mj = e^(2 pi i m j / N) / sqrt(N); the
/// default unbiased basis change for the ancilla measurements.
Matrix build_F(std::size_t n);

/// Diagonal phase correction Z(h) with entries 1 / (sqrt(N) <h|F|f>).
/// Unitary exactly when F is unbiased; throws ValidationError otherwise.
Matrix build_Zh(const Matrix& f, std::size_t h);

enum class ProtocolVariant { Controlled, Group, Double };

/// Everything the circuit simulator needs for one protocol run. Built by the
/// spec builders below; M or F may be overridden before simulating (e.g. for
/// negative controls).
struct ProtocolSpec {
    ProtocolVariant variant = ProtocolVariant::Group;
    std::size_t N = 0;  // resource Schmidt rank = group order / projector count
    std::size_t dA = 0;
    std::size_t dB = 0;
    Matrix target;
    Matrix F;

    // Group/Double: A-side representation and W family; M as applied on bB.
    ProjectiveRep rep;
    WFamily wfam;
    Matrix M;
    double form_condition_residual = 0.0; // W condition (group) or c condition (double)

    // Controlled
    ControlledUnitary cu;
};

ProtocolSpec group_protocol_spec(const GroupFormUnitary& gfu);
ProtocolSpec controlled_protocol_spec(const ControlledUnitary& cu);
/// M realized as CtrlV^dag (C (x) I) CtrlV.
ProtocolSpec double_protocol_spec(const DoubleUnitary& du);
/// Same double unitary but with the generic block-form M.
ProtocolSpec double_protocol_spec_generic_m(const DoubleUnitary& du);

struct Branch {
    std::size_t outcome_a = 0; // first measurement (h, or l for controlled)
    std::size_t outcome_b = 0; // second measurement (g, or m for controlled)
    Matrix kraus;              // on H_A (x) H_B
    cx phase;                  // unit modulus; kraus ~ (phase/N) target
    double residual = 0.0;     // max-abs(kraus - (phase/N) target)
    double probability = 0.0;  // for the supplied input
    std::vector<cx> output;    // normalized branch output for the input
};

struct ProtocolTranscript {
    std::vector<Branch> branches; // all N^2, keyed by (outcome_a, outcome_b)
    Matrix target;
    std::size_t N = 0, dA = 0, dB = 0;
    double completeness_residual = 0.0;   // max-abs(sum K^dag K - I)
    double form_condition_residual = 0.0; // copied from the ProtocolSpec
    bool flagged_invalid = false;         // form condition exceeded tolerance

    double worst_residual() const;
    /// max |p - 1/N^2| over branches.
    double probability_spread() const;
};

/// Runs the quantized circuit exhaustively: ancilla measurements become
/// projections of the final state, so every (h,g) branch is enumerated.
/// The input must live on dims {dA, dB} (or any dims with that product).
ProtocolTranscript simulate(const ProtocolSpec& spec, const StateVector& input);

ProtocolTranscript simulate_group_protocol(const GroupFormUnitary& gfu, const StateVector& in);
ProtocolTranscript simulate_controlled_protocol(const ControlledUnitary& cu,
                                                const StateVector& in);
ProtocolTranscript simulate_double_protocol(const DoubleUnitary& du, const StateVector& in);

struct InfoAbsenceReport {
    bool pass = false;
    double worst_kraus_deviation = 0.0; // max-abs(K^dag K - |c|^2 I) over branches
    double worst_pairwise = 0.0;        // phase-aligned distance between normalized branches
    double tolerance = 0.0;

    std::string summary() const;
};

/// Checks that the ancilla outcomes reveal nothing about the
/// input: every branch Kraus operator is proportional to one unitary.
InfoAbsenceReport information_absence_check(const ProtocolTranscript& t,
                                            double tol = kResidualTol);

} // namespace nlg
