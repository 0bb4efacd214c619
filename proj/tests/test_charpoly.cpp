#include "specdom/charpoly.hpp"

#include "test_support.hpp"

#include <doctest.h>

using namespace specdom;
using testsupport::flt;
using testsupport::rat;

TEST_CASE("characteristic polynomial reference values") {
    // (lambda + 1)(lambda - 1)^2 = lambda^3 - lambda^2 - lambda + 1
    const auto p = char_poly(rat({{-1, 2, 0}, {-2, 2, 1}, {-2, 3, 0}}));
    CHECK(p.coefficients ==
          std::vector<Rational>{Rational(1), Rational(-1), Rational(-1), Rational(1)});
    CHECK_FALSE(p.accuracy_warning);

    const auto q = char_poly(rat({{-4, 5}, {-3, 4}}));
    CHECK(q.coefficients == std::vector<Rational>{Rational(1), Rational(0), Rational(-1)});

    const auto r = char_poly(Matrix<Rational>::identity(3));
    CHECK(r.coefficients ==
          std::vector<Rational>{Rational(1), Rational(-3), Rational(3), Rational(-1)});
}

TEST_CASE("characteristic polynomial in the float regime") {
    const auto p = char_poly(flt({{-11, 14}, {-26, 29}}));
    // lambda^2 - 18 lambda + 45 = (lambda - 15)(lambda - 3)
    CHECK(p.coefficients[0] == doctest::Approx(1.0));
    CHECK(p.coefficients[1] == doctest::Approx(-18.0));
    CHECK(p.coefficients[2] == doctest::Approx(45.0));
    CHECK(p.eval(15.0) == doctest::Approx(0.0).epsilon(1e-9));

    Matrix<double> big(31, 31);
    for (std::size_t i = 0; i < 31; ++i) big(i, i) = 1.0;
    CHECK(char_poly(big).accuracy_warning);
    CHECK_FALSE(char_poly(flt({{1.0, 0.0}, {0.0, 1.0}})).accuracy_warning);
}

TEST_CASE("char_poly evaluates to zero at planted eigenvalues") {
    testsupport::RationalGen gen(5151);
    for (int trial = 0; trial < 20; ++trial) {
        const std::size_t n = 2 + gen.index(3);
        const auto triple = testsupport::admissible_triple(gen, n);
        const Rational lambda = gen.nonzero();
        const auto a =
            testsupport::planted_eigen_matrix(gen, n, lambda, triple.v, triple.u);
        CHECK(char_poly(a).eval(lambda) == 0);
    }
}

TEST_CASE("real root sign counts with multiplicity") {
    // (lambda + 1)(lambda - 1)^2
    const std::vector<Rational> p{Rational(1), Rational(-1), Rational(-1), Rational(1)};
    const auto counts = real_root_sign_counts(p);
    CHECK(counts.positive == 2);
    CHECK(counts.negative == 1);
    CHECK(counts.zero == 0);

    // lambda^2 (lambda - 2)
    const std::vector<Rational> q{Rational(1), Rational(-2), Rational(0), Rational(0)};
    const auto qc = real_root_sign_counts(q);
    CHECK(qc.positive == 1);
    CHECK(qc.negative == 0);
    CHECK(qc.zero == 2);

    // (lambda - 1/2)^3 (lambda + 3): all-real quartic with a triple root
    // lambda^4 + (3/2)... expand: (x-1/2)^3 = x^3 - (3/2)x^2 + (3/4)x - 1/8
    // times (x+3): x^4 + (3/2)x^3 - (15/4)x^2 + (17/8)x - 3/8
    const std::vector<Rational> r{Rational(1), Rational(3, 2), Rational(-15, 4),
                                  Rational(17, 8), Rational(-3, 8)};
    const auto rc = real_root_sign_counts(r);
    CHECK(rc.positive == 3);
    CHECK(rc.negative == 1);
    CHECK(rc.zero == 0);
}
