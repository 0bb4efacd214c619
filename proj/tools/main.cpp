#include "specdom/coxeter.hpp"
#include "specdom/criterion.hpp"
#include "specdom/io.hpp"

#include <CLI11.hpp>

#include <cstdint>
#include <iostream>
#include <optional>
#include <string>

namespace {

// CLI11 binds to these; resolve_config() turns them into a RunConfig.
struct CommonFlags {
    specdom::AnalyzeConfig config;
    std::string mode;
    std::string output = "text";
};

void add_common_flags(CLI::App* cmd, CommonFlags& flags) {
    cmd->add_option("--tol", flags.config.tol, "residual tolerance (float regime)")
        ->check(CLI::PositiveNumber)
        ->capture_default_str();
    cmd->add_option("--tol-orth", flags.config.tol_orth,
                    "u.v threshold for the multiplicity-2 verdict")
        ->check(CLI::PositiveNumber)
        ->capture_default_str();
    cmd->add_option("--tol-zero", flags.config.tol_zero,
                    "relative threshold for zero eigenvector entries")
        ->check(CLI::PositiveNumber)
        ->capture_default_str();
    cmd->add_option("--eps-pos", flags.config.eps_pos,
                    "relative strict-positivity threshold (float regime)")
        ->check(CLI::PositiveNumber)
        ->capture_default_str();
    cmd->add_option("--k-max", flags.config.k_max, "power-scan bound")
        ->check(CLI::PositiveNumber)
        ->capture_default_str();
    cmd->add_option("--max-iter", flags.config.max_iter, "power-iteration bound")
        ->check(CLI::PositiveNumber)
        ->capture_default_str();
    cmd->add_option("--seed", flags.config.seed, "seed for power-iteration restarts")
        ->capture_default_str();
    cmd->add_option("--mode", flags.mode, "force regime: exact or float");
    cmd->add_option("--output", flags.output, "report format: text or json")
        ->check(CLI::IsMember({"text", "json"}))
        ->capture_default_str();
}

specdom::RunConfig resolve_config(const CommonFlags& flags) {
    specdom::RunConfig run;
    run.analysis = flags.config;
    run.output = flags.output == "json" ? specdom::OutputFormat::Json
                                        : specdom::OutputFormat::Text;
    if (!flags.mode.empty()) {
        if (flags.mode == "exact")
            run.mode_override = specdom::Regime::Exact;
        else if (flags.mode == "float")
            run.mode_override = specdom::Regime::Float;
        else
            throw specdom::ParseError("--mode must be exact or float");
    }
    return run;
}

void warn_if_tolerances_moot(const CLI::App* cmd, bool exact_pipeline) {
    if (!exact_pipeline) return;
    for (const char* name : {"--tol", "--tol-orth", "--tol-zero", "--eps-pos"}) {
        if (cmd->count(name) > 0)
            std::cerr << "warning: " << name
                      << " has no effect on the exact pipeline\n";
    }
}

int run_analyze(const CLI::App* cmd, const std::string& path, const CommonFlags& flags) {
    const specdom::RunConfig run = resolve_config(flags);
    specdom::MatrixInput input = specdom::parse_matrix_json(specdom::read_file(path));

    bool run_exact = input.regime == specdom::Regime::Exact;
    if (run.mode_override == specdom::Regime::Float) run_exact = false;
    if (run.mode_override == specdom::Regime::Exact &&
        input.regime != specdom::Regime::Exact)
        throw specdom::ParseError(
            "--mode exact requires a file in exact mode; float entries cannot be "
            "promoted");
    warn_if_tolerances_moot(cmd, run_exact);

    specdom::MatrixRunReport report;
    report.config = run.analysis;
    if (run_exact) {
        report.input_regime = specdom::Regime::Exact;
        report.verdict =
            specdom::analyze_exact_auto(*input.exact, input.exact_eigendata, run.analysis);
    } else {
        report.input_regime = specdom::Regime::Float;
        specdom::Matrix<double> a =
            input.approx ? *input.approx : specdom::to_float(*input.exact);
        std::optional<specdom::EigenPair<double>> eigendata = input.float_eigendata;
        if (!eigendata && input.exact_eigendata) {
            specdom::EigenPair<double> pair;
            pair.lambda = specdom::to_double(input.exact_eigendata->lambda);
            pair.v = specdom::to_float(input.exact_eigendata->v);
            pair.u = specdom::to_float(input.exact_eigendata->u);
            eigendata = pair;
        }
        report.verdict = specdom::analyze(a, eigendata, run.analysis);
    }

    std::cout << specdom::render_matrix_report(report, run.output);
    return std::visit([](const auto& v) { return specdom::exit_code_for(v.kind); },
                      report.verdict);
}

int run_coxeter(const CLI::App* cmd, const std::string& path, const std::string& word_text,
                const CommonFlags& flags) {
    const specdom::RunConfig run = resolve_config(flags);
    specdom::CoxeterRunReport report;
    report.datum = specdom::parse_coxeter_json(specdom::read_file(path));
    report.word = specdom::parse_word(word_text, report.datum.rank);
    report.config = run.analysis;
    warn_if_tolerances_moot(cmd, report.datum.exact_capable());
    report.analysis = specdom::analyze_element(report.datum, report.word, run.analysis);

    std::cout << specdom::render_coxeter_report(report, run.output);
    return std::visit([](const auto& v) { return specdom::exit_code_for(v.kind); },
                      report.analysis.verdict);
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{
        "Decides whether the spectral radius of a real square matrix is a simple and "
        "dominant eigenvalue by testing an explicit conjugate matrix for eventual "
        "positivity, with a Coxeter-group front end."};
    app.require_subcommand(1);

    std::string matrix_path;
    CommonFlags analyze_flags;
    CLI::App* analyze_cmd =
        app.add_subcommand("analyze", "analyze a matrix file (JSON)");
    analyze_cmd->add_option("file", matrix_path, "matrix JSON file")->required();
    add_common_flags(analyze_cmd, analyze_flags);

    std::string datum_path, word_text;
    CommonFlags coxeter_flags;
    CLI::App* coxeter_cmd = app.add_subcommand(
        "coxeter", "analyze a Coxeter group element given a datum file and a word");
    coxeter_cmd->add_option("file", datum_path, "Coxeter datum JSON file")->required();
    coxeter_cmd->add_option("word", word_text, "word, e.g. \"1,2,3,2\" or \"s1 s2 s3 s2\"")
        ->required();
    add_common_flags(coxeter_cmd, coxeter_flags);

    CLI11_PARSE(app, argc, argv);

    try {
        if (analyze_cmd->parsed())
            return run_analyze(analyze_cmd, matrix_path, analyze_flags);
        return run_coxeter(coxeter_cmd, datum_path, word_text, coxeter_flags);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
}
