#pragma once

#include "nlg/catalog.hpp"
#include "nlg/protocol.hpp"

#include <json.hpp>

#include <optional>

namespace nlg {

struct ParseError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct ProblemOptions {
    double tolerance = 1e-9;
    double rank_tol = 1e-8;
    std::uint64_t seed = 12345;
    std::size_t restarts = 32;
};

/// A representation as read from a file: either explicit matrices or a
/// multiplicity pattern over the file's irreps section.
struct RawRep {
    std::vector<Matrix> matrices;
    std::optional<std::vector<std::size_t>> pattern;
};

struct RawForm {
    std::string kind; // groupForm | qBlocks | controlled | double | rBlocks
    RawRep repA;
    RawRep repB;
    std::vector<Matrix> w;      // groupForm
    std::vector<Matrix> blocks; // qBlocks (identity fill for null) / rBlocks
    std::size_t dB = 0;         // qBlocks
    std::vector<Matrix> projectors; // controlled
    std::vector<Matrix> unitaries;  // controlled
    std::vector<cx> c;              // double
};

/// Parsed problem file. Parsing is purely structural; semantic validation
/// and form materialization are separate steps.
struct Problem {
    int schema_version = 1;
    std::string name;
    FiniteGroup group;
    FactorSystem factor_system;
    std::optional<IrrepSet> irreps;
    RawForm form;
    ProblemOptions options;
};

/// Structural validators plus the conditional residuals worth reporting.
struct ProblemCheck {
    ValidationReport report; // violations fail cmd_validate
    double w_condition = -1.0;
    double c_condition = -1.0;
    double assembled_unitarity = -1.0;
    bool ok() const { return report.ok(); }
};

/// Throws ParseError (malformed JSON / schema problems).
Problem parse_problem(const nlohmann::json& j);
Problem load_problem(const std::string& path);

/// Runs group/factor-system/irreps/form validators; collects violations
/// instead of throwing.
ProblemCheck validate_problem(const Problem& p);

/// Builds the concrete form object (resolving patterns and Fourier blocks).
/// Throws ValidationError when the problem is not valid.
FormVariant materialize_form(const Problem& p);

nlohmann::json problem_to_json(const Problem& p);

/// Self-contained problem file for a catalog variant (explicit group table,
/// factor system and form matrices).
Problem problem_from_catalog(const CatalogEntry& entry, const CatalogVariant& variant);

nlohmann::json transcript_to_json(const ProtocolTranscript& t, const InfoAbsenceReport& info);

// JSON value helpers shared with the CLI.
cx parse_complex(const nlohmann::json& j);
Matrix parse_matrix(const nlohmann::json& j);
nlohmann::json complex_to_json(cx z);
nlohmann::json matrix_to_json(const Matrix& m);

} // namespace nlg
