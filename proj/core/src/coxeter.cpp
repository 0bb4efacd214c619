#include "specdom/coxeter.hpp"

#include <cctype>
#include <cmath>
#include <sstream>

namespace specdom {

void CoxeterDatum::validate() const {
    if (rank < 1) throw std::invalid_argument("rank must be at least 1");
    if (m.size() != static_cast<std::size_t>(rank) * rank ||
        c.size() != static_cast<std::size_t>(rank) * rank)
        throw std::invalid_argument("exponent/weight tables must be rank x rank");
    for (int i = 0; i < rank; ++i) {
        if (exponent(i, i) != 1)
            throw std::invalid_argument("diagonal exponents must be 1");
        for (int j = 0; j < rank; ++j) {
            const int e = exponent(i, j);
            if (e != exponent(j, i))
                throw std::invalid_argument("exponent table must be symmetric");
            if (i != j && e != kInfiniteBond && e < 2)
                throw std::invalid_argument("off-diagonal exponents must be >= 2 or infinite");
            if (e == kInfiniteBond) {
                if (weight(i, j) != weight(j, i))
                    throw std::invalid_argument("weight table must be symmetric");
                if (weight(i, j) < 1)
                    throw std::invalid_argument("infinite-bond weights must be >= 1");
            }
        }
    }
}

Word parse_word(const std::string& text, int rank) {
    Word w;
    std::string cleaned;
    cleaned.reserve(text.size());
    for (char ch : text) {
        if (ch == ',' || ch == 's' || ch == 'S') {
            cleaned.push_back(' ');
        } else {
            cleaned.push_back(ch);
        }
    }
    std::istringstream in(cleaned);
    std::string token;
    while (in >> token) {
        std::size_t consumed = 0;
        int index = 0;
        try {
            index = std::stoi(token, &consumed);
        } catch (const std::exception&) {
            throw std::invalid_argument("bad word token: '" + token + "'");
        }
        if (consumed != token.size())
            throw std::invalid_argument("bad word token: '" + token + "'");
        if (index < 1 || index > rank)
            throw std::invalid_argument("generator index out of range: " + token);
        w.letters.push_back(index - 1);
    }
    return w;
}

FormSignature form_signature(const Matrix<Rational>& b) {
    b.require_square("form_signature");
    if (b != b.transpose())
        throw std::invalid_argument("form_signature requires a symmetric matrix");
    const auto counts = real_root_sign_counts(char_poly(b).coefficients);
    return FormSignature{counts.positive, counts.negative, counts.zero};
}

FormSignature form_signature(const Matrix<double>& b, double tol) {
    b.require_square("form_signature");
    const std::size_t n = b.rows();
    if (max_abs_diff(b, b.transpose()) > tol * std::max(1.0, b.max_abs()))
        throw std::invalid_argument("form_signature requires a symmetric matrix");

    // Cyclic Jacobi: rotate away off-diagonal entries until they vanish.
    Matrix<double> a = b;
    const double scale = std::max(1.0, a.max_abs());
    for (int sweep = 0; sweep < 64; ++sweep) {
        double off = 0;
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = i + 1; j < n; ++j) off = std::max(off, std::fabs(a(i, j)));
        if (off < 1e-14 * scale) break;
        for (std::size_t p = 0; p < n; ++p) {
            for (std::size_t q = p + 1; q < n; ++q) {
                if (std::fabs(a(p, q)) < 1e-300) continue;
                const double theta = (a(q, q) - a(p, p)) / (2.0 * a(p, q));
                const double t = (theta >= 0 ? 1.0 : -1.0) /
                                 (std::fabs(theta) + std::sqrt(theta * theta + 1.0));
                const double cosine = 1.0 / std::sqrt(t * t + 1.0);
                const double sine = t * cosine;
                for (std::size_t k = 0; k < n; ++k) {
                    const double akp = a(k, p), akq = a(k, q);
                    a(k, p) = cosine * akp - sine * akq;
                    a(k, q) = sine * akp + cosine * akq;
                }
                for (std::size_t k = 0; k < n; ++k) {
                    const double apk = a(p, k), aqk = a(q, k);
                    a(p, k) = cosine * apk - sine * aqk;
                    a(q, k) = sine * apk + cosine * aqk;
                }
            }
        }
    }

    FormSignature sig;
    const double zero_band = tol * scale;
    for (std::size_t i = 0; i < n; ++i) {
        if (a(i, i) > zero_band)
            ++sig.positive;
        else if (a(i, i) < -zero_band)
            ++sig.negative;
        else
            ++sig.zero;
    }
    return sig;
}

namespace {

std::optional<double> verdict_lambda(const VerdictVariant& verdict) {
    return std::visit(
        [](const auto& v) -> std::optional<double> {
            if (!v.lambda) return std::nullopt;
            return to_double(*v.lambda);
        },
        verdict);
}

template <class T>
CoxeterAnalysis analyze_in_regime(const CoxeterDatum& d, const Word& w,
                                  const AnalyzeConfig& cfg) {
    CoxeterAnalysis out;
    out.exact = is_exact_scalar_v<T>;
    const Matrix<T> b = bilinear_form<T>(d);
    const Matrix<T> h = evaluate_word(b, w);
    out.bilinear = b;
    out.element = h;

    out.column_signs_ok = column_sign_check(h);
    out.form_invariant = check_form_invariance(h, b, cfg.tol_orth);
    if (!out.column_signs_ok || !out.form_invariant)
        throw std::logic_error(
            "representation bug: phi(w) failed a sanity gate (column signs or form "
            "invariance)");

    if constexpr (is_exact_scalar_v<T>) {
        out.signature = form_signature(b);
        out.verdict = analyze_exact_auto(h, std::nullopt, cfg);
    } else {
        out.signature = form_signature(b, cfg.tol_zero);
        out.verdict = analyze(h, std::nullopt, cfg);
    }

    if (d.classical()) {
        LehmerFlag flag;
        flag.applicable = true;
        if (const auto rho = verdict_lambda(out.verdict)) {
            flag.radius_is_one = std::fabs(std::fabs(*rho) - 1.0) <= 1e-9;
            flag.at_least_lehmer = std::fabs(*rho) >= kLehmerNumber - 1e-9;
        }
        out.lehmer = flag;
    }
    return out;
}

}  // namespace

CoxeterAnalysis analyze_element(const CoxeterDatum& d, const Word& w,
                                const AnalyzeConfig& cfg) {
    d.validate();
    for (int letter : w.letters)
        if (letter < 0 || letter >= d.rank)
            throw std::invalid_argument("word letter out of range");
    if (d.exact_capable()) return analyze_in_regime<Rational>(d, w, cfg);
    return analyze_in_regime<double>(d, w, cfg);
}

}  // namespace specdom
