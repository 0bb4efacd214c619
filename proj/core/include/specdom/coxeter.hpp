#pragma once

#include "specdom/charpoly.hpp"
#include "specdom/criterion.hpp"
#include "specdom/matrix.hpp"
#include "specdom/rational.hpp"

#include <cmath>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace specdom {

/// Sentinel for m_ij = infinity in CoxeterDatum::m.
inline constexpr int kInfiniteBond = 0;

/// Lehmer's number, the conjectured-minimal spectral radius > 1 in the
/// classical geometric representation.
inline constexpr double kLehmerNumber = 1.1762808;

/// Coxeter system data: rank, exponents m_ij (m_ii = 1, m_ij >= 2 or
/// infinite off-diagonal) and bond weights c_ij >= 1 wherever m_ij is
/// infinite. Weights are stored exactly; c_ij is meaningful only on infinite
/// bonds and fixed to 1 elsewhere.
struct CoxeterDatum {
    int rank = 0;
    std::vector<int> m;       // rank x rank, row-major; kInfiniteBond = infinity
    std::vector<Rational> c;  // rank x rank, row-major

    int exponent(int i, int j) const { return m[static_cast<std::size_t>(i) * rank + j]; }
    const Rational& weight(int i, int j) const {
        return c[static_cast<std::size_t>(i) * rank + j];
    }

    /// All infinite bonds carry weight 1 (the canonical bilinear form).
    bool classical() const {
        for (int i = 0; i < rank; ++i)
            for (int j = 0; j < rank; ++j)
                if (exponent(i, j) == kInfiniteBond && weight(i, j) != 1) return false;
        return true;
    }

    /// The bilinear form is rational exactly when every finite off-diagonal
    /// exponent is 2 or 3 (cosine 0 or 1/2); other exponents force floats.
    bool exact_capable() const {
        for (int i = 0; i < rank; ++i)
            for (int j = 0; j < rank; ++j) {
                if (i == j) continue;
                const int e = exponent(i, j);
                if (e != kInfiniteBond && e != 2 && e != 3) return false;
            }
        return true;
    }

    void validate() const;
};

/// Group element as a sequence of generator indices, 0-based internally.
struct Word {
    std::vector<int> letters;
};

/// Parses "1,2,3,2" or "s1 s2 s3 s2" (1-based indices) into a Word.
Word parse_word(const std::string& text, int rank);

namespace coxdetail {

template <class T>
T bond_entry(const CoxeterDatum& d, int i, int j);

template <>
inline Rational bond_entry<Rational>(const CoxeterDatum& d, int i, int j) {
    const int e = d.exponent(i, j);
    if (e == kInfiniteBond) return -d.weight(i, j);
    switch (e) {
        case 1: return Rational(1);    // -cos(pi) on the diagonal
        case 2: return Rational(0);    // -cos(pi/2)
        case 3: return Rational(-1, 2);
        default:
            throw std::invalid_argument(
                "exact bilinear form needs every finite off-diagonal exponent in {2,3}");
    }
}

template <>
inline double bond_entry<double>(const CoxeterDatum& d, int i, int j) {
    const int e = d.exponent(i, j);
    if (e == kInfiniteBond) return -to_double(d.weight(i, j));
    return -std::cos(M_PI / e);
}

}  // namespace coxdetail

/// Symmetric bilinear form matrix B with b_ij = -cos(pi/m_ij) on finite bonds
/// and -c_ij on infinite ones; the diagonal is 1.
template <class T>
Matrix<T> bilinear_form(const CoxeterDatum& d) {
    d.validate();
    if constexpr (is_exact_scalar_v<T>) {
        if (!d.exact_capable())
            throw std::invalid_argument(
                "datum is not exactly representable; use the float form");
    }
    Matrix<T> b(d.rank, d.rank);
    for (int i = 0; i < d.rank; ++i)
        for (int j = 0; j < d.rank; ++j) b(i, j) = coxdetail::bond_entry<T>(d, i, j);
    return b;
}

/// Matrix of the simple reflection along alpha_i in the basis Delta, acting
/// on column coordinate vectors: I - 2 e_i b_i^T with b_i the i-th row of B.
template <class T>
Matrix<T> generator_matrix(const Matrix<T>& b, int i) {
    b.require_square("generator_matrix");
    const int n = static_cast<int>(b.rows());
    if (i < 0 || i >= n) throw std::invalid_argument("generator index out of range");
    Matrix<T> m = Matrix<T>::identity(b.rows());
    for (int j = 0; j < n; ++j) m(i, j) -= T(2) * b(i, j);
    return m;
}

/// phi(w) for w = l_1 l_2 ... l_k: the product of generator matrices taken
/// left to right, acting on column coordinate vectors. The convention is
/// pinned by the reference elements in the test suite.
template <class T>
Matrix<T> evaluate_word(const Matrix<T>& b, const Word& w) {
    const int n = static_cast<int>(b.rows());
    Matrix<T> result = Matrix<T>::identity(b.rows());
    for (int letter : w.letters) {
        if (letter < 0 || letter >= n)
            throw std::invalid_argument("word letter out of range");
        result = result * generator_matrix(b, letter);
    }
    return result;
}

/// m^T B m == B, exactly or within tol * max|B|.
template <class T>
bool check_form_invariance(const Matrix<T>& m, const Matrix<T>& b, double tol = 1e-9) {
    if (m.rows() != b.rows() || !m.is_square() || !b.is_square())
        throw std::invalid_argument("check_form_invariance dimension mismatch");
    const Matrix<T> transported = m.transpose() * b * m;
    if constexpr (is_exact_scalar_v<T>) {
        return transported == b;
    } else {
        const double scale = std::max(1.0, to_double(b.max_abs()));
        return max_abs_diff(transported, b) <= tol * scale;
    }
}

/// Every column entrywise >= 0 or entrywise <= 0; a structural property of
/// geometric-representation matrices. Float entries within tol * max|m| of
/// zero are sign-neutral.
template <class T>
bool column_sign_check(const Matrix<T>& m, double tol = 1e-9) {
    const double threshold =
        is_exact_scalar_v<T> ? 0.0 : tol * to_double(m.max_abs());
    for (std::size_t j = 0; j < m.cols(); ++j) {
        bool has_pos = false, has_neg = false;
        for (std::size_t i = 0; i < m.rows(); ++i) {
            const double e = to_double(m(i, j));
            if (e > threshold) has_pos = true;
            if (e < -threshold) has_neg = true;
        }
        if (has_pos && has_neg) return false;
    }
    return true;
}

/// Inertia (p, q, r) of a symmetric matrix: counts of positive, negative and
/// zero eigenvalues. p + q + r = n.
struct FormSignature {
    int positive = 0;
    int negative = 0;
    int zero = 0;

    bool operator==(const FormSignature&) const = default;
};

/// Exact signature via Sturm sign counts on the characteristic polynomial.
FormSignature form_signature(const Matrix<Rational>& b);

/// Float signature via cyclic Jacobi iteration; |eigenvalue| < tol * max|B|
/// counts as zero.
FormSignature form_signature(const Matrix<double>& b, double tol = 1e-9);

/// Informational spectral-radius classification for the classical form.
struct LehmerFlag {
    bool applicable = false;  // only emitted for c == 1
    bool radius_is_one = false;
    bool at_least_lehmer = false;
};

/// Full per-element report: representation data, sanity gates, the criterion
/// verdict, and the Lehmer flag.
struct CoxeterAnalysis {
    bool exact = false;
    std::variant<Matrix<Rational>, Matrix<double>> bilinear;
    std::variant<Matrix<Rational>, Matrix<double>> element;
    FormSignature signature;
    bool column_signs_ok = false;
    bool form_invariant = false;
    VerdictVariant verdict;
    std::optional<LehmerFlag> lehmer;
};

/// Evaluates phi(w), runs the representation sanity gates, and feeds the
/// matrix to the criterion pipeline. Gate failures throw: they indicate a
/// representation bug, not a property of the input.
CoxeterAnalysis analyze_element(const CoxeterDatum& d, const Word& w,
                                const AnalyzeConfig& cfg = {});

}  // namespace specdom
