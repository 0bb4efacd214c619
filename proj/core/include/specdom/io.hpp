#pragma once

#include "specdom/coxeter.hpp"
#include "specdom/criterion.hpp"
#include "specdom/matrix.hpp"
#include "specdom/rational.hpp"
#include "specdom/spectral.hpp"

#include <optional>
#include <stdexcept>
#include <string>

namespace specdom {

enum class Regime { Exact, Float };
enum class OutputFormat { Text, Json };

struct ParseError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Matrix file contents: one regime populated, plus optional user eigendata
/// in the same regime. Eigendata are verified downstream, not here.
struct MatrixInput {
    Regime regime = Regime::Exact;
    std::optional<Matrix<Rational>> exact;
    std::optional<Matrix<double>> approx;
    std::optional<EigenPair<Rational>> exact_eigendata;
    std::optional<EigenPair<double>> float_eigendata;
};

/// Parses {"n": ..., "mode": "exact"|"float", "entries": [[...]],
/// "eigendata": {"lambda": ..., "v": [...], "u": [...]}}. Exact entries are
/// "p/q" / integer / decimal strings; float entries may also be JSON numbers.
MatrixInput parse_matrix_json(const std::string& text);

/// Parses {"n": ..., "m": [[1, "inf", ...], ...], "c": [[null, "2", ...], ...]}.
/// "c" may be omitted entirely (all weights 1); when present it must carry a
/// value exactly on the infinite bonds.
CoxeterDatum parse_coxeter_json(const std::string& text);

std::string read_file(const std::string& path);

/// %.12g rendering used for every float in reports.
std::string format_significant(double x);

/// Exit code is a function of the verdict kind alone: 0 for SimpleDominant,
/// 2 for certified negatives, 3 for partial or inconclusive outcomes.
int exit_code_for(VerdictKind kind);

/// Full run configuration: the analysis knobs plus the run-level switches the
/// CLI flags mirror one-to-one (--tol, --tol-orth, --tol-zero, --eps-pos,
/// --k-max, --max-iter, --seed, --mode, --output).
struct RunConfig {
    AnalyzeConfig analysis;
    std::optional<Regime> mode_override;  // force exact or float; default: file regime
    OutputFormat output = OutputFormat::Text;
};

// Report rendering is deterministic: JSON object keys are sorted, rationals
// render as "p/q" strings, floats as %.12g strings. Identical inputs and
// seeds produce byte-identical reports.

struct MatrixRunReport {
    Regime input_regime = Regime::Exact;
    VerdictVariant verdict;
    AnalyzeConfig config;
};

struct CoxeterRunReport {
    CoxeterDatum datum;
    Word word;  // 0-based letters
    CoxeterAnalysis analysis;
    AnalyzeConfig config;
};

std::string render_matrix_report(const MatrixRunReport& report, OutputFormat format);
std::string render_coxeter_report(const CoxeterRunReport& report, OutputFormat format);

}  // namespace specdom
