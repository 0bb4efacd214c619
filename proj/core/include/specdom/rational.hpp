#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cmath>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace specdom {

/// Arbitrary-precision rational scalar for the exact regime.
using Rational = boost::multiprecision::cpp_rational;
using BigInt = boost::multiprecision::cpp_int;

template <class T>
inline constexpr bool is_exact_scalar_v = false;
template <>
inline constexpr bool is_exact_scalar_v<Rational> = true;

inline double to_double(double x) { return x; }
inline double to_double(const Rational& x) { return x.template convert_to<double>(); }

inline double abs_value(double x) { return std::fabs(x); }
inline Rational abs_value(const Rational& x) { return x < 0 ? Rational(-x) : x; }

/// Renders "p/q", or "p" when the denominator is one.
inline std::string to_string(const Rational& x) {
    std::string s = numerator(x).str();
    if (denominator(x) != 1) {
        s += "/";
        s += denominator(x).str();
    }
    return s;
}

/// Parses "p/q", plain integers, and plain decimals ("-1.25") exactly.
/// Throws std::invalid_argument on anything else, including zero denominators.
inline Rational parse_rational(const std::string& text) {
    const auto bad = [&]() -> Rational {
        throw std::invalid_argument("not a rational literal: '" + text + "'");
    };
    std::size_t begin = text.find_first_not_of(" \t");
    std::size_t end = text.find_last_not_of(" \t");
    if (begin == std::string::npos) return bad();
    const std::string s = text.substr(begin, end - begin + 1);

    const auto parse_int = [&](const std::string& t) -> BigInt {
        if (t.empty()) bad();
        std::size_t i = (t[0] == '+' || t[0] == '-') ? 1 : 0;
        if (i == t.size()) bad();
        for (; i < t.size(); ++i)
            if (t[i] < '0' || t[i] > '9') bad();
        return BigInt(t);
    };

    const std::size_t slash = s.find('/');
    if (slash != std::string::npos) {
        const BigInt num = parse_int(s.substr(0, slash));
        const BigInt den = parse_int(s.substr(slash + 1));
        if (den == 0) throw std::invalid_argument("zero denominator: '" + text + "'");
        return Rational(num, den);
    }
    const std::size_t dot = s.find('.');
    if (dot != std::string::npos) {
        std::string digits = s.substr(0, dot) + s.substr(dot + 1);
        if (digits == "+" || digits == "-" || digits.empty()) bad();
        const std::size_t frac_len = s.size() - dot - 1;
        if (frac_len == 0) bad();
        BigInt den = 1;
        for (std::size_t i = 0; i < frac_len; ++i) den *= 10;
        return Rational(parse_int(digits), den);
    }
    return Rational(parse_int(s));
}

/// Small-denominator rational approximations of x via continued-fraction
/// convergents. Returns every convergent with denominator <= max_denominator
/// whose distance from x is at most rel_tol * max(1, |x|).
inline std::vector<Rational> rational_candidates(double x,
                                                 std::int64_t max_denominator,
                                                 double rel_tol) {
    std::vector<Rational> out;
    if (!std::isfinite(x)) return out;
    const double bound = rel_tol * std::max(1.0, std::fabs(x));

    auto consider = [&](std::int64_t p, std::int64_t q) {
        if (q <= 0 || q > max_denominator) return;
        const double approx = static_cast<double>(p) / static_cast<double>(q);
        if (std::fabs(x - approx) > bound) return;
        Rational r(p, q);
        for (const Rational& seen : out)
            if (seen == r) return;
        out.push_back(r);
    };

    // Convergents p_k/q_k of the continued fraction of x.
    std::int64_t p_prev = 1, q_prev = 0;
    std::int64_t p_cur = static_cast<std::int64_t>(std::floor(x)), q_cur = 1;
    consider(p_cur, q_cur);
    double frac = x - std::floor(x);
    for (int step = 0; step < 32 && frac > 1e-12; ++step) {
        const double inv = 1.0 / frac;
        if (inv > 9.0e18) break;
        const std::int64_t a = static_cast<std::int64_t>(std::floor(inv));
        frac = inv - std::floor(inv);
        const std::int64_t p_next = a * p_cur + p_prev;
        const std::int64_t q_next = a * q_cur + q_prev;
        if (q_next > max_denominator || q_next < q_cur) break;
        p_prev = p_cur;
        q_prev = q_cur;
        p_cur = p_next;
        q_cur = q_next;
        consider(p_cur, q_cur);
    }
    consider(static_cast<std::int64_t>(std::llround(x)), 1);
    return out;
}

}  // namespace specdom
