#pragma once

#include "specdom/matrix.hpp"
#include "specdom/rational.hpp"

#include <cstddef>
#include <stdexcept>
#include <vector>

namespace specdom {

/// Monic characteristic polynomial det(lambda I - A), coefficients ordered
/// from lambda^n down to the constant term.
template <class T>
struct CharPoly {
    std::vector<T> coefficients;
    /// Set in the float regime for n > 30, where coefficient growth makes the
    /// recurrence unreliable.
    bool accuracy_warning = false;

    std::size_t degree() const { return coefficients.size() - 1; }

    T eval(const T& x) const {
        T acc(0);
        for (const T& c : coefficients) acc = acc * x + c;
        return acc;
    }
};

/// Faddeev-LeVerrier recurrence: trace-based, divides by integers only, so it
/// is exact over rationals.
template <class T>
CharPoly<T> char_poly(const Matrix<T>& a) {
    a.require_square("char_poly");
    const std::size_t n = a.rows();
    CharPoly<T> out;
    out.coefficients.assign(n + 1, T(0));
    out.coefficients[0] = T(1);
    out.accuracy_warning = !is_exact_scalar_v<T> && n > 30;

    Matrix<T> m = Matrix<T>::identity(n);
    for (std::size_t k = 1; k <= n; ++k) {
        Matrix<T> am = a * m;
        T c = -am.trace() / T(static_cast<int>(k));
        out.coefficients[k] = c;
        if (k < n) {
            m = am;
            for (std::size_t i = 0; i < n; ++i) m(i, i) += c;
        }
    }
    return out;
}

// --- exact polynomial utilities (Sturm sign counts) ------------------------
//
// Polynomials are coefficient vectors in descending order, as in CharPoly.
// Used for counting eigenvalue signs of symmetric rational matrices, whose
// characteristic polynomials have only real roots.

namespace polydetail {

using Poly = std::vector<Rational>;

inline Poly trim(Poly p) {
    std::size_t lead = 0;
    while (lead + 1 < p.size() && p[lead] == 0) ++lead;
    p.erase(p.begin(), p.begin() + static_cast<std::ptrdiff_t>(lead));
    return p;
}

inline bool is_zero(const Poly& p) { return p.size() == 1 && p[0] == 0; }

inline std::size_t degree(const Poly& p) { return p.size() - 1; }

inline Poly derivative(const Poly& p) {
    if (p.size() == 1) return Poly{Rational(0)};
    Poly d(p.size() - 1);
    const std::size_t n = degree(p);
    for (std::size_t i = 0; i + 1 < p.size(); ++i)
        d[i] = p[i] * Rational(static_cast<long>(n - i));
    return trim(d);
}

inline Poly mod(Poly num, const Poly& den) {
    // Long division remainder; den is nonzero.
    num = trim(num);
    while (!is_zero(num) && degree(num) >= degree(den)) {
        const Rational factor = num[0] / den[0];
        const std::size_t shift = degree(num) - degree(den);
        for (std::size_t i = 0; i < den.size(); ++i)
            num[i] -= factor * den[i];
        (void)shift;
        num = trim(num);
    }
    return num;
}

inline Poly divide_exact(Poly num, const Poly& den) {
    // Exact quotient; remainder must vanish.
    Poly q(num.size() - den.size() + 1, Rational(0));
    while (!is_zero(num) && degree(num) >= degree(den)) {
        const Rational factor = num[0] / den[0];
        q[q.size() - 1 - (degree(num) - degree(den))] = factor;
        for (std::size_t i = 0; i < den.size(); ++i) num[i] -= factor * den[i];
        num = trim(num);
    }
    if (!is_zero(num)) throw std::logic_error("polynomial division was not exact");
    return trim(q);
}

inline Poly make_monic(Poly p) {
    if (is_zero(p)) return p;
    const Rational lead = p[0];
    for (Rational& c : p) c /= lead;
    return p;
}

inline Poly gcd(Poly a, Poly b) {
    a = trim(a);
    b = trim(b);
    while (!is_zero(b)) {
        Poly r = mod(a, b);
        a = b;
        b = make_monic(r);
    }
    return make_monic(a);
}

inline int sign_of(const Rational& x) { return x > 0 ? 1 : (x < 0 ? -1 : 0); }

inline Poly negate(Poly p) {
    for (Rational& c : p) c = -c;
    return p;
}

/// Sturm chain of p (p square-free for exact distinct-root counts).
inline std::vector<Poly> sturm_chain(const Poly& p) {
    std::vector<Poly> chain;
    chain.push_back(trim(p));
    Poly d = derivative(chain[0]);
    if (is_zero(d)) return chain;
    chain.push_back(d);
    while (true) {
        Poly r = mod(chain[chain.size() - 2], chain.back());
        if (is_zero(r)) break;
        // Scaling by a positive constant keeps the sign sequence intact.
        Rational lead = abs_value(r[0]);
        for (Rational& c : r) c /= lead;
        chain.push_back(negate(r));
    }
    return chain;
}

inline int variations(const std::vector<int>& signs) {
    int count = 0;
    int prev = 0;
    for (int s : signs) {
        if (s == 0) continue;
        if (prev != 0 && s != prev) ++count;
        prev = s;
    }
    return count;
}

inline int variations_at_zero(const std::vector<Poly>& chain) {
    std::vector<int> signs;
    for (const Poly& p : chain) signs.push_back(sign_of(p.back()));
    return variations(signs);
}

inline int variations_at_plus_inf(const std::vector<Poly>& chain) {
    std::vector<int> signs;
    for (const Poly& p : chain) signs.push_back(sign_of(p[0]));
    return variations(signs);
}

inline int variations_at_minus_inf(const std::vector<Poly>& chain) {
    std::vector<int> signs;
    for (const Poly& p : chain) {
        int s = sign_of(p[0]);
        if (degree(p) % 2 == 1) s = -s;
        signs.push_back(s);
    }
    return variations(signs);
}

}  // namespace polydetail

struct RootSignCounts {
    int positive = 0;
    int negative = 0;
    int zero = 0;
};

/// Sign counts, with multiplicity, of the real roots of a monic rational
/// polynomial all of whose roots are real (e.g. a symmetric characteristic
/// polynomial). Multiplicities are resolved through the gcd chain
/// s_{k+1} = gcd(s_k, s_k'), whose square-free quotients are Sturm-counted.
inline RootSignCounts real_root_sign_counts(const std::vector<Rational>& monic_descending) {
    using namespace polydetail;
    RootSignCounts counts;
    Poly p = trim(monic_descending);

    // Roots at zero are the trailing zero coefficients.
    while (p.size() > 1 && p.back() == 0) {
        ++counts.zero;
        p.pop_back();
    }
    if (p.size() == 1) return counts;

    Poly s = make_monic(p);
    while (degree(s) > 0) {
        Poly s_next = gcd(s, derivative(s));
        Poly f = divide_exact(s, s_next);  // square-free, f(0) != 0
        if (degree(f) > 0) {
            const auto chain = sturm_chain(f);
            const int v_minus = variations_at_minus_inf(chain);
            const int v_zero = variations_at_zero(chain);
            const int v_plus = variations_at_plus_inf(chain);
            counts.negative += v_minus - v_zero;
            counts.positive += v_zero - v_plus;
        }
        s = s_next;
    }
    return counts;
}

}  // namespace specdom
