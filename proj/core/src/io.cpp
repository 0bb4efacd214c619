#include "specdom/io.hpp"

#include <json.hpp>

#include <cstdio>
#include <fstream>
#include <sstream>

namespace specdom {

using nlohmann::json;

namespace {

constexpr int kSchemaVersion = 1;

json parse_json_text(const std::string& text) {
    json j = json::parse(text, nullptr, false);
    if (j.is_discarded()) throw ParseError("malformed JSON");
    return j;
}

Rational exact_scalar_from(const json& j) {
    if (j.is_string()) return parse_rational(j.get<std::string>());
    if (j.is_number_integer()) return Rational(j.get<long long>());
    throw ParseError("exact entries must be \"p/q\"/integer/decimal strings");
}

double float_scalar_from(const json& j) {
    if (j.is_number()) return j.get<double>();
    if (j.is_string()) {
        const std::string s = j.get<std::string>();
        try {
            std::size_t consumed = 0;
            const double value = std::stod(s, &consumed);
            if (consumed == s.size()) return value;
        } catch (const std::exception&) {
        }
        return to_double(parse_rational(s));
    }
    throw ParseError("float entries must be numbers or numeric strings");
}

template <class T>
Matrix<T> matrix_from(const json& rows, std::size_t n, T (*scalar)(const json&)) {
    if (!rows.is_array() || rows.size() != n)
        throw ParseError("entries must be an n x n array");
    Matrix<T> m(n, n);
    for (std::size_t i = 0; i < n; ++i) {
        const json& row = rows[i];
        if (!row.is_array() || row.size() != n)
            throw ParseError("entries must be an n x n array");
        for (std::size_t j = 0; j < n; ++j) m(i, j) = scalar(row[j]);
    }
    return m;
}

template <class T>
Matrix<T> vector_from(const json& items, std::size_t n, bool column,
                      T (*scalar)(const json&)) {
    if (!items.is_array() || items.size() != n)
        throw ParseError("eigendata vectors must have length n");
    Matrix<T> v = column ? Matrix<T>(n, 1) : Matrix<T>(1, n);
    for (std::size_t i = 0; i < n; ++i)
        (column ? v(i, 0) : v(0, i)) = scalar(items[i]);
    return v;
}

// ---- report building -------------------------------------------------------

std::string scalar_string(const Rational& x) { return to_string(x); }
std::string scalar_string(double x) { return format_significant(x); }

template <class T>
json matrix_json(const Matrix<T>& m) {
    json rows = json::array();
    for (std::size_t i = 0; i < m.rows(); ++i) {
        json row = json::array();
        for (std::size_t j = 0; j < m.cols(); ++j) row.push_back(scalar_string(m(i, j)));
        rows.push_back(std::move(row));
    }
    return rows;
}

template <class T>
json vector_json(const Matrix<T>& v) {
    json items = json::array();
    for (std::size_t i = 0; i < v.vec_size(); ++i) items.push_back(scalar_string(v.vec(i)));
    return items;
}

template <class T>
json certificate_json(const NeverCertificate<T>& cert) {
    json j;
    if (cert.kind == NeverCertificate<T>::Kind::PowerCycle) {
        j["kind"] = "power_cycle";
        j["k"] = cert.k;
        j["period"] = cert.period;
        j["scale"] = scalar_string(cert.scale);
    } else {
        j["kind"] = "negative_limit_entry";
        j["k"] = cert.k;
        j["row"] = cert.row + 1;  // matrix indices are 1-based in reports
        j["col"] = cert.col + 1;
        j["entry"] = format_significant(cert.entry);
    }
    return j;
}

template <class T>
json verdict_json(const Verdict<T>& verdict) {
    json j;
    j["kind"] = verdict_kind_name(verdict.kind);
    j["regime"] = is_exact_scalar_v<T> ? "exact" : "float";
    if (verdict.lambda) j["lambda"] = scalar_string(*verdict.lambda);
    if (verdict.v) j["v"] = vector_json(*verdict.v);
    if (verdict.k_positive) j["k_positive"] = *verdict.k_positive;
    if (verdict.z) j["z"] = matrix_json(*verdict.z);
    if (verdict.limit) j["limit"] = matrix_json(*verdict.limit);
    if (verdict.multiplicity_estimate)
        j["multiplicity_estimate"] = format_significant(*verdict.multiplicity_estimate);
    if (verdict.uv) j["uv"] = scalar_string(*verdict.uv);
    if (verdict.geometric_multiplicity)
        j["geometric_multiplicity"] = *verdict.geometric_multiplicity;
    if (verdict.certificate) j["certificate"] = certificate_json(*verdict.certificate);
    if (verdict.signature_flips) j["signature_flips"] = *verdict.signature_flips;
    if (verdict.k_max_reached) j["k_max_reached"] = true;
    if (!verdict.diagnostics.empty()) j["diagnostics"] = verdict.diagnostics;
    return j;
}

json verdict_json(const VerdictVariant& verdict) {
    return std::visit([](const auto& v) { return verdict_json(v); }, verdict);
}

json config_json(const AnalyzeConfig& cfg) {
    json j;
    j["tol"] = format_significant(cfg.tol);
    j["tol_orth"] = format_significant(cfg.tol_orth);
    j["tol_zero"] = format_significant(cfg.tol_zero);
    j["eps_pos"] = format_significant(cfg.eps_pos);
    j["k_max"] = cfg.k_max;
    j["max_iter"] = cfg.max_iter;
    j["probe_k_max"] = cfg.probe_k_max;
    j["conv_tol"] = format_significant(cfg.conv_tol);
    j["seed"] = cfg.seed;
    return j;
}

VerdictKind kind_of(const VerdictVariant& verdict) {
    return std::visit([](const auto& v) { return v.kind; }, verdict);
}

template <class T>
void verdict_text(std::ostream& out, const Verdict<T>& verdict) {
    out << "verdict: " << verdict_kind_name(verdict.kind) << "\n";
    if (verdict.lambda) out << "lambda: " << scalar_string(*verdict.lambda) << "\n";
    if (verdict.k_positive) out << "k_positive: " << *verdict.k_positive << "\n";
    if (verdict.v) {
        out << "v:";
        for (std::size_t i = 0; i < verdict.v->vec_size(); ++i)
            out << " " << scalar_string(verdict.v->vec(i));
        out << "\n";
    }
    if (verdict.z) {
        out << "Z:\n";
        for (std::size_t i = 0; i < verdict.z->rows(); ++i) {
            out << "  ";
            for (std::size_t j = 0; j < verdict.z->cols(); ++j)
                out << (j ? " " : "") << scalar_string((*verdict.z)(i, j));
            out << "\n";
        }
    }
    if (verdict.multiplicity_estimate)
        out << "multiplicity_estimate: " << format_significant(*verdict.multiplicity_estimate)
            << "\n";
    if (verdict.uv) out << "uv: " << scalar_string(*verdict.uv) << "\n";
    if (verdict.geometric_multiplicity)
        out << "geometric_multiplicity: " << *verdict.geometric_multiplicity << "\n";
    if (verdict.certificate) {
        const auto& cert = *verdict.certificate;
        if (cert.kind == NeverCertificate<T>::Kind::PowerCycle)
            out << "certificate: power cycle Z^" << cert.k + cert.period << " = "
                << scalar_string(cert.scale) << " * Z^" << cert.k << "\n";
        else
            out << "certificate: normalized power limit entry (" << cert.row + 1 << ","
                << cert.col + 1 << ") = " << format_significant(cert.entry) << " < 0\n";
    }
    if (verdict.k_max_reached) out << "k_max_reached: true\n";
    for (const std::string& d : verdict.diagnostics) out << "note: " << d << "\n";
}

void verdict_text(std::ostream& out, const VerdictVariant& verdict) {
    std::visit([&](const auto& v) { verdict_text(out, v); }, verdict);
}

}  // namespace

std::string format_significant(double x) {
    char buffer[64];
    std::snprintf(buffer, sizeof(buffer), "%.12g", x);
    return buffer;
}

int exit_code_for(VerdictKind kind) {
    switch (kind) {
        case VerdictKind::SimpleDominant:
            return 0;
        case VerdictKind::MultiplicityAtLeastTwo:
        case VerdictKind::NotSimpleDominantCertified:
            return 2;
        default:
            return 3;
    }
}

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw ParseError("cannot read file: " + path);
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return buffer.str();
}

MatrixInput parse_matrix_json(const std::string& text) {
    const json j = parse_json_text(text);
    if (!j.is_object()) throw ParseError("matrix file must be a JSON object");
    if (!j.contains("n") || !j["n"].is_number_integer())
        throw ParseError("matrix file needs an integer \"n\"");
    const long long n_signed = j["n"].get<long long>();
    if (n_signed < 1) throw ParseError("n must be at least 1");
    const std::size_t n = static_cast<std::size_t>(n_signed);

    MatrixInput input;
    const std::string mode = j.value("mode", std::string("exact"));
    if (mode == "exact")
        input.regime = Regime::Exact;
    else if (mode == "float")
        input.regime = Regime::Float;
    else
        throw ParseError("mode must be \"exact\" or \"float\"");

    if (!j.contains("entries")) throw ParseError("matrix file needs \"entries\"");
    try {
        if (input.regime == Regime::Exact)
            input.exact = matrix_from<Rational>(j["entries"], n, exact_scalar_from);
        else
            input.approx = matrix_from<double>(j["entries"], n, float_scalar_from);
    } catch (const std::invalid_argument& e) {
        throw ParseError(e.what());
    }

    if (j.contains("eigendata") && !j["eigendata"].is_null()) {
        const json& e = j["eigendata"];
        if (!e.is_object() || !e.contains("lambda") || !e.contains("v") || !e.contains("u"))
            throw ParseError("eigendata needs lambda, v and u");
        try {
            if (input.regime == Regime::Exact) {
                EigenPair<Rational> pair;
                pair.lambda = exact_scalar_from(e["lambda"]);
                pair.v = vector_from<Rational>(e["v"], n, true, exact_scalar_from);
                pair.u = vector_from<Rational>(e["u"], n, false, exact_scalar_from);
                input.exact_eigendata = std::move(pair);
            } else {
                EigenPair<double> pair;
                pair.lambda = float_scalar_from(e["lambda"]);
                pair.v = vector_from<double>(e["v"], n, true, float_scalar_from);
                pair.u = vector_from<double>(e["u"], n, false, float_scalar_from);
                input.float_eigendata = std::move(pair);
            }
        } catch (const std::invalid_argument& err) {
            throw ParseError(err.what());
        }
    }
    return input;
}

CoxeterDatum parse_coxeter_json(const std::string& text) {
    const json j = parse_json_text(text);
    if (!j.is_object()) throw ParseError("coxeter file must be a JSON object");
    if (!j.contains("n") || !j["n"].is_number_integer())
        throw ParseError("coxeter file needs an integer \"n\"");
    const long long rank_signed = j["n"].get<long long>();
    if (rank_signed < 1) throw ParseError("n must be at least 1");
    const int rank = static_cast<int>(rank_signed);

    CoxeterDatum d;
    d.rank = rank;
    d.m.assign(static_cast<std::size_t>(rank) * rank, 1);
    d.c.assign(static_cast<std::size_t>(rank) * rank, Rational(1));

    if (!j.contains("m") || !j["m"].is_array() || j["m"].size() != static_cast<std::size_t>(rank))
        throw ParseError("coxeter file needs an n x n \"m\" table");
    for (int i = 0; i < rank; ++i) {
        const json& row = j["m"][i];
        if (!row.is_array() || row.size() != static_cast<std::size_t>(rank))
            throw ParseError("coxeter file needs an n x n \"m\" table");
        for (int k = 0; k < rank; ++k) {
            const json& cell = row[k];
            if (cell.is_string()) {
                if (cell.get<std::string>() != "inf")
                    throw ParseError("m entries must be integers or \"inf\"");
                d.m[static_cast<std::size_t>(i) * rank + k] = kInfiniteBond;
            } else if (cell.is_number_integer()) {
                const long long e = cell.get<long long>();
                if (e < 1) throw ParseError("m entries must be >= 1");
                d.m[static_cast<std::size_t>(i) * rank + k] = static_cast<int>(e);
            } else {
                throw ParseError("m entries must be integers or \"inf\"");
            }
        }
    }

    if (j.contains("c") && !j["c"].is_null()) {
        const json& c = j["c"];
        if (!c.is_array() || c.size() != static_cast<std::size_t>(rank))
            throw ParseError("\"c\" must be an n x n table");
        for (int i = 0; i < rank; ++i) {
            const json& row = c[i];
            if (!row.is_array() || row.size() != static_cast<std::size_t>(rank))
                throw ParseError("\"c\" must be an n x n table");
            for (int k = 0; k < rank; ++k) {
                const json& cell = row[k];
                const bool infinite =
                    d.m[static_cast<std::size_t>(i) * rank + k] == kInfiniteBond;
                if (cell.is_null()) {
                    if (infinite)
                        throw ParseError("missing weight c for an infinite bond");
                    continue;
                }
                if (!infinite)
                    throw ParseError("weight c given on a finite bond");
                try {
                    d.c[static_cast<std::size_t>(i) * rank + k] = cell.is_string()
                        ? parse_rational(cell.get<std::string>())
                        : Rational(cell.get<long long>());
                } catch (const std::invalid_argument& e) {
                    throw ParseError(e.what());
                }
            }
        }
    }

    try {
        d.validate();
    } catch (const std::invalid_argument& e) {
        throw ParseError(e.what());
    }
    return d;
}

std::string render_matrix_report(const MatrixRunReport& report, OutputFormat format) {
    if (format == OutputFormat::Json) {
        json j;
        j["schema_version"] = kSchemaVersion;
        j["command"] = "analyze";
        j["mode"] = report.input_regime == Regime::Exact ? "exact" : "float";
        j["verdict"] = verdict_json(report.verdict);
        j["config"] = config_json(report.config);
        j["exit_code"] = exit_code_for(kind_of(report.verdict));
        return j.dump(2) + "\n";
    }
    std::ostringstream out;
    out << "mode: " << (report.input_regime == Regime::Exact ? "exact" : "float") << "\n";
    verdict_text(out, report.verdict);
    out << "exit_code: " << exit_code_for(kind_of(report.verdict)) << "\n";
    return out.str();
}

std::string render_coxeter_report(const CoxeterRunReport& report, OutputFormat format) {
    const auto& analysis = report.analysis;
    json word = json::array();
    for (int letter : report.word.letters) word.push_back(letter + 1);

    if (format == OutputFormat::Json) {
        json j;
        j["schema_version"] = kSchemaVersion;
        j["command"] = "coxeter";
        j["mode"] = analysis.exact ? "exact" : "float";
        j["rank"] = report.datum.rank;
        j["word"] = word;
        j["bilinear_form"] = std::visit([](const auto& b) { return matrix_json(b); },
                                        analysis.bilinear);
        j["form_signature"] = {{"positive", analysis.signature.positive},
                               {"negative", analysis.signature.negative},
                               {"zero", analysis.signature.zero}};
        j["element"] =
            std::visit([](const auto& h) { return matrix_json(h); }, analysis.element);
        j["gates"] = {{"column_signs", analysis.column_signs_ok},
                      {"form_invariance", analysis.form_invariant}};
        if (analysis.lehmer) {
            j["lehmer"] = {{"applicable", analysis.lehmer->applicable},
                           {"radius_is_one", analysis.lehmer->radius_is_one},
                           {"at_least_lehmer", analysis.lehmer->at_least_lehmer}};
        }
        j["verdict"] = verdict_json(analysis.verdict);
        j["config"] = config_json(report.config);
        j["exit_code"] = exit_code_for(kind_of(analysis.verdict));
        return j.dump(2) + "\n";
    }

    std::ostringstream out;
    out << "mode: " << (analysis.exact ? "exact" : "float") << "\n";
    out << "rank: " << report.datum.rank << "\nword:";
    for (int letter : report.word.letters) out << " " << letter + 1;
    out << "\n";
    out << "form_signature: (" << analysis.signature.positive << ","
        << analysis.signature.negative << "," << analysis.signature.zero << ")\n";
    out << "gates: column_signs=" << (analysis.column_signs_ok ? "ok" : "FAIL")
        << " form_invariance=" << (analysis.form_invariant ? "ok" : "FAIL") << "\n";
    std::visit(
        [&](const auto& h) {
            out << "phi(w):\n";
            for (std::size_t i = 0; i < h.rows(); ++i) {
                out << "  ";
                for (std::size_t jj = 0; jj < h.cols(); ++jj)
                    out << (jj ? " " : "") << scalar_string(h(i, jj));
                out << "\n";
            }
        },
        analysis.element);
    if (analysis.lehmer && analysis.lehmer->applicable) {
        out << "lehmer: radius_is_one=" << (analysis.lehmer->radius_is_one ? "yes" : "no")
            << " at_least_lehmer=" << (analysis.lehmer->at_least_lehmer ? "yes" : "no")
            << "\n";
    }
    verdict_text(out, analysis.verdict);
    out << "exit_code: " << exit_code_for(kind_of(analysis.verdict)) << "\n";
    return out.str();
}

}  // namespace specdom
