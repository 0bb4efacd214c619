#pragma once

#include "specdom/matrix.hpp"
#include "specdom/rational.hpp"
#include "specdom/spectral.hpp"

#include <cstdint>
#include <random>
#include <vector>

namespace testsupport {

using specdom::Matrix;
using specdom::Rational;

inline Matrix<Rational> rat(std::initializer_list<std::initializer_list<long>> rows) {
    Matrix<Rational> m(rows.size(), rows.begin()->size());
    std::size_t i = 0;
    for (const auto& row : rows) {
        std::size_t j = 0;
        for (long x : row) m(i, j++) = Rational(x);
        ++i;
    }
    return m;
}

inline Matrix<double> flt(std::initializer_list<std::initializer_list<double>> rows) {
    Matrix<double> m(rows.size(), rows.begin()->size());
    std::size_t i = 0;
    for (const auto& row : rows) {
        std::size_t j = 0;
        for (double x : row) m(i, j++) = x;
        ++i;
    }
    return m;
}

inline Matrix<Rational> rat_col(std::initializer_list<Rational> xs) {
    return Matrix<Rational>::column(std::vector<Rational>(xs));
}

inline Matrix<Rational> rat_row(std::initializer_list<Rational> xs) {
    return Matrix<Rational>::row(std::vector<Rational>(xs));
}

/// Deterministic small-rational generator for property suites.
class RationalGen {
public:
    explicit RationalGen(std::uint64_t seed) : rng_(seed) {}

    Rational small(long num_bound = 6, long den_bound = 4) {
        std::uniform_int_distribution<long> num(-num_bound, num_bound);
        std::uniform_int_distribution<long> den(1, den_bound);
        return Rational(num(rng_), den(rng_));
    }

    Rational nonzero(long num_bound = 6, long den_bound = 4) {
        while (true) {
            Rational r = small(num_bound, den_bound);
            if (r != 0) return r;
        }
    }

    Rational positive(long num_bound = 6, long den_bound = 4) {
        std::uniform_int_distribution<long> num(1, num_bound);
        std::uniform_int_distribution<long> den(1, den_bound);
        return Rational(num(rng_), den(rng_));
    }

    Matrix<Rational> matrix(std::size_t n, long num_bound = 6, long den_bound = 4) {
        Matrix<Rational> m(n, n);
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j) m(i, j) = small(num_bound, den_bound);
        return m;
    }

    std::size_t index(std::size_t bound) {
        std::uniform_int_distribution<std::size_t> d(0, bound - 1);
        return d(rng_);
    }

    std::mt19937_64& engine() { return rng_; }

private:
    std::mt19937_64 rng_;
};

/// Column v with nonzero entries, plus rows u and u' with u v = u' v = 1.
/// These are the admissibility conditions of the conjugation construction.
struct AdmissibleTriple {
    Matrix<Rational> v;
    Matrix<Rational> u;
    Matrix<Rational> u_prime;
};

inline AdmissibleTriple admissible_triple(RationalGen& gen, std::size_t n) {
    AdmissibleTriple t;
    t.v = Matrix<Rational>(n, 1);
    for (std::size_t i = 0; i < n; ++i) t.v(i, 0) = gen.nonzero();

    const auto unit_row_against = [&](Matrix<Rational>& row) {
        Rational partial(0);
        for (std::size_t i = 0; i + 1 < n; ++i) {
            row(0, i) = gen.small();
            partial += row(0, i) * t.v.vec(i);
        }
        row(0, n - 1) = (Rational(1) - partial) / t.v.vec(n - 1);
    };
    t.u = Matrix<Rational>(1, n);
    t.u_prime = Matrix<Rational>(1, n);
    unit_row_against(t.u);
    unit_row_against(t.u_prime);
    return t;
}

/// Matrix with a planted eigentriple: A = lambda v u + (I - v u) C (I - v u)
/// has right eigenvector v and left eigenvector u for lambda when u v = 1.
inline Matrix<Rational> planted_eigen_matrix(RationalGen& gen, std::size_t n,
                                             const Rational& lambda,
                                             const Matrix<Rational>& v,
                                             const Matrix<Rational>& u) {
    const Matrix<Rational> vu = v * u;
    const Matrix<Rational> proj = Matrix<Rational>::identity(n) - vu;
    const Matrix<Rational> c = gen.matrix(n, 3, 2);
    return vu * lambda + proj * c * proj;
}

}  // namespace testsupport
