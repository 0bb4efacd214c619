#include "specdom/coxeter.hpp"

#include "test_support.hpp"

#include <doctest.h>

#include <cmath>

using namespace specdom;
using testsupport::rat;

namespace {

CoxeterDatum free_rank3(const Rational& weight) {
    CoxeterDatum d;
    d.rank = 3;
    d.m.assign(9, kInfiniteBond);
    d.c.assign(9, weight);
    for (int i = 0; i < 3; ++i) {
        d.m[i * 3 + i] = 1;
        d.c[i * 3 + i] = Rational(1);
    }
    return d;
}

CoxeterDatum affine_rank2() {
    CoxeterDatum d;
    d.rank = 2;
    d.m = {1, kInfiniteBond, kInfiniteBond, 1};
    d.c = {Rational(1), Rational(1), Rational(1), Rational(1)};
    return d;
}

// All bonds infinite; c_12 = 2, c_34 = 6, all other weights 1.
CoxeterDatum mixed_rank4() {
    CoxeterDatum d;
    d.rank = 4;
    d.m.assign(16, kInfiniteBond);
    d.c.assign(16, Rational(1));
    for (int i = 0; i < 4; ++i) d.m[i * 4 + i] = 1;
    d.c[0 * 4 + 1] = d.c[1 * 4 + 0] = Rational(2);
    d.c[2 * 4 + 3] = d.c[3 * 4 + 2] = Rational(6);
    return d;
}

// Infinite bonds around a 5-cycle with weight 2; all other pairs commute.
CoxeterDatum pentagon_rank5() {
    CoxeterDatum d;
    d.rank = 5;
    d.m.assign(25, 2);
    d.c.assign(25, Rational(1));
    for (int i = 0; i < 5; ++i) d.m[i * 5 + i] = 1;
    const auto bond = [&](int i, int j) {
        d.m[i * 5 + j] = d.m[j * 5 + i] = kInfiniteBond;
        d.c[i * 5 + j] = d.c[j * 5 + i] = Rational(2);
    };
    bond(0, 1);
    bond(1, 2);
    bond(2, 3);
    bond(3, 4);
    bond(0, 4);
    return d;
}

template <class T>
const Verdict<T>& expect_regime(const VerdictVariant& v) {
    REQUIRE(std::holds_alternative<Verdict<T>>(v));
    return std::get<Verdict<T>>(v);
}

}  // namespace

TEST_CASE("bilinear form of the free rank-3 group with weight 2") {
    const auto b = bilinear_form<Rational>(free_rank3(Rational(2)));
    CHECK(b == rat({{1, -2, -2}, {-2, 1, -2}, {-2, -2, 1}}));

    // Oracle for the reflection construction: the generators derived from B
    // must equal the reference generating set.
    CHECK(generator_matrix(b, 0) == rat({{-1, 4, 4}, {0, 1, 0}, {0, 0, 1}}));
    CHECK(generator_matrix(b, 1) == rat({{1, 0, 0}, {4, -1, 4}, {0, 0, 1}}));
    CHECK(generator_matrix(b, 2) == rat({{1, 0, 0}, {0, 1, 0}, {4, 4, -1}}));
}

TEST_CASE("bilinear form of the affine rank-2 group") {
    const auto b = bilinear_form<Rational>(affine_rank2());
    CHECK(b == rat({{1, -1}, {-1, 1}}));
    CHECK(generator_matrix(b, 0) == rat({{-1, 2}, {0, 1}}));
    CHECK(generator_matrix(b, 1) == rat({{1, 0}, {2, -1}}));
}

TEST_CASE("finite exponents map to the right cosines") {
    CoxeterDatum d;
    d.rank = 2;
    d.m = {1, 2, 2, 1};
    d.c.assign(4, Rational(1));
    CHECK(bilinear_form<Rational>(d) == rat({{1, 0}, {0, 1}}));

    d.m = {1, 3, 3, 1};
    CHECK(bilinear_form<Rational>(d)(0, 1) == Rational(-1, 2));

    d.m = {1, 4, 4, 1};
    CHECK_FALSE(d.exact_capable());
    const auto bf = bilinear_form<double>(d);
    CHECK(bf(0, 1) == doctest::Approx(-std::cos(M_PI / 4)).epsilon(1e-15));
    CHECK_THROWS_AS(bilinear_form<Rational>(d), std::invalid_argument);
}

TEST_CASE("rank-4 generator matches the reference matrix") {
    const auto b = bilinear_form<Rational>(mixed_rank4());
    CHECK(b == rat({{1, -2, -1, -1}, {-2, 1, -1, -1}, {-1, -1, 1, -6}, {-1, -1, -6, 1}}));
    CHECK(generator_matrix(b, 2) ==
          rat({{1, 0, 0, 0}, {0, 1, 0, 0}, {2, 2, -1, 12}, {0, 0, 0, 1}}));
}

TEST_CASE("generators are involutions") {
    for (const auto& d : {free_rank3(Rational(2)), affine_rank2(), mixed_rank4(),
                          pentagon_rank5()}) {
        const auto b = bilinear_form<Rational>(d);
        for (int i = 0; i < d.rank; ++i) {
            const auto g = generator_matrix(b, i);
            CHECK(g * g == Matrix<Rational>::identity(d.rank));
        }
    }
}

TEST_CASE("word evaluation reproduces the reference elements") {
    const auto b3 = bilinear_form<Rational>(free_rank3(Rational(2)));
    CHECK(evaluate_word(b3, Word{{0, 1, 2, 1}}) ==
          rat({{399, -76, 284}, {80, -15, 56}, {20, -4, 15}}));

    const auto b2 = bilinear_form<Rational>(affine_rank2());
    CHECK(evaluate_word(b2, Word{{0, 1}}) == rat({{3, -2}, {2, -1}}));

    CHECK(evaluate_word(b3, Word{}) == Matrix<Rational>::identity(3));

    const auto b5 = bilinear_form<Rational>(pentagon_rank5());
    CHECK(evaluate_word(b5, Word{{0, 1, 2, 3, 4, 0, 1}}) ==
          rat({{16065, -4280, 17360, 976, 3960},
               {3960, -1055, 4280, 240, 976},
               {976, -260, 1055, 60, 240},
               {240, -64, 260, 15, 60},
               {60, -16, 64, 4, 15}}));

    const auto b4 = bilinear_form<Rational>(mixed_rank4());
    CHECK(evaluate_word(b4, Word{{0, 2, 1, 3, 1, 2}}) ==
          rat({{1763, 1264, -670, 8150},
               {84, 61, -32, 388},
               {672, 480, -255, 3104},
               {42, 30, -16, 195}}));
}

TEST_CASE("word evaluation is a homomorphism") {
    testsupport::RationalGen gen(424242);
    const auto b = bilinear_form<Rational>(pentagon_rank5());
    for (int trial = 0; trial < 25; ++trial) {
        Word w1, w2;
        const std::size_t l1 = gen.index(5), l2 = gen.index(5);
        for (std::size_t i = 0; i < l1; ++i) w1.letters.push_back(static_cast<int>(gen.index(5)));
        for (std::size_t i = 0; i < l2; ++i) w2.letters.push_back(static_cast<int>(gen.index(5)));
        Word joined = w1;
        joined.letters.insert(joined.letters.end(), w2.letters.begin(), w2.letters.end());
        CHECK(evaluate_word(b, joined) == evaluate_word(b, w1) * evaluate_word(b, w2));
    }
}

TEST_CASE("form invariance") {
    const auto b = bilinear_form<Rational>(free_rank3(Rational(2)));
    const auto h = evaluate_word(b, Word{{0, 1, 2, 1}});
    CHECK(check_form_invariance(h, b));
    CHECK(check_form_invariance(Matrix<Rational>::identity(3), b));
    CHECK_FALSE(check_form_invariance(rat({{2, 0}, {0, 1}}),
                                      Matrix<Rational>::identity(2)));
}

TEST_CASE("column sign property") {
    CHECK(column_sign_check(rat({{399, -76, 284}, {80, -15, 56}, {20, -4, 15}})));
    CHECK(column_sign_check(Matrix<Rational>::identity(4)));
    CHECK_FALSE(column_sign_check(rat({{1, -1}, {-1, 1}})));
}

TEST_CASE("form signatures of the reference groups") {
    CHECK(form_signature(bilinear_form<Rational>(free_rank3(Rational(2)))) ==
          FormSignature{2, 1, 0});
    CHECK(form_signature(bilinear_form<Rational>(affine_rank2())) ==
          FormSignature{1, 0, 1});
    CHECK(form_signature(bilinear_form<Rational>(mixed_rank4())) ==
          FormSignature{2, 2, 0});
    CHECK(form_signature(bilinear_form<Rational>(pentagon_rank5())) ==
          FormSignature{2, 3, 0});

    // Float route must agree.
    CHECK(form_signature(bilinear_form<double>(free_rank3(Rational(2)))) ==
          FormSignature{2, 1, 0});
    CHECK(form_signature(bilinear_form<double>(affine_rank2())) ==
          FormSignature{1, 0, 1});
    CHECK(form_signature(bilinear_form<double>(pentagon_rank5())) ==
          FormSignature{2, 3, 0});
}

TEST_CASE("analyze_element: rank-3 hyperbolic element") {
    const auto report = analyze_element(free_rank3(Rational(2)), Word{{0, 1, 2, 1}});
    CHECK(report.exact);
    CHECK(report.signature == FormSignature{2, 1, 0});
    CHECK(report.column_signs_ok);
    CHECK(report.form_invariant);
    CHECK_FALSE(report.lehmer.has_value());  // weight 2 is not the classical form

    const auto& verdict = expect_regime<double>(report.verdict);
    CHECK(verdict.kind == VerdictKind::SimpleDominant);
    CHECK(*verdict.k_positive == 1);
    CHECK(std::fabs(*verdict.lambda - 397.9974) <= 1e-3);

    const auto expected_z = testsupport::flt({{318.23857, 318.19990, 318.38071},
                                              {63.807131, 64.038071, 62.893420},
                                              {15.951783, 15.759518, 16.723355}});
    REQUIRE(verdict.z.has_value());
    CHECK(max_abs_diff(*verdict.z, expected_z) <= 1e-3);
    CHECK(is_strictly_positive(*verdict.z));
}

TEST_CASE("analyze_element: affine element has multiplicity two") {
    const auto report = analyze_element(affine_rank2(), Word{{0, 1}});
    CHECK(report.exact);
    CHECK(report.signature == FormSignature{1, 0, 1});
    const auto& verdict = expect_regime<Rational>(report.verdict);
    CHECK(verdict.kind == VerdictKind::MultiplicityAtLeastTwo);
    CHECK(*verdict.uv == 0);
    REQUIRE(report.lehmer.has_value());
    CHECK(report.lehmer->applicable);
    CHECK(report.lehmer->radius_is_one);
    CHECK_FALSE(report.lehmer->at_least_lehmer);
}

TEST_CASE("analyze_element: rank-4 element") {
    const auto report = analyze_element(mixed_rank4(), Word{{0, 2, 1, 3, 1, 2}});
    CHECK(report.signature == FormSignature{2, 2, 0});
    const auto& verdict = expect_regime<double>(report.verdict);
    CHECK(verdict.kind == VerdictKind::SimpleDominant);
    CHECK(*verdict.k_positive == 1);
    CHECK(std::fabs(*verdict.lambda - 1761.9994) <= 1e-3);
}

TEST_CASE("analyze_element: rank-5 element") {
    const auto report = analyze_element(pentagon_rank5(), Word{{0, 1, 2, 3, 4, 0, 1}});
    CHECK(report.signature == FormSignature{2, 3, 0});
    const auto& verdict = expect_regime<double>(report.verdict);
    CHECK(verdict.kind == VerdictKind::SimpleDominant);
    CHECK(*verdict.k_positive == 1);
    CHECK(std::fabs(*verdict.lambda - 16094.04766330161) <=
          1e-6 * 16094.04766330161);
}

TEST_CASE("analyze_element: classical rank-3 essential element") {
    // Parabolic closure is the whole group; the spectral radius ~193.9948 is
    // simple and dominant, far above Lehmer's number.
    const auto report = analyze_element(free_rank3(Rational(1)), Word{{0, 1, 0, 2, 1, 2}});
    const auto& verdict = expect_regime<double>(report.verdict);
    CHECK(verdict.kind == VerdictKind::SimpleDominant);
    CHECK(std::fabs(*verdict.lambda - 193.994845) <= 1e-3);
    REQUIRE(report.lehmer.has_value());
    CHECK(report.lehmer->applicable);
    CHECK_FALSE(report.lehmer->radius_is_one);
    CHECK(report.lehmer->at_least_lehmer);
}

TEST_CASE("analyze_element: classical rank-3 element conjugate into an affine parabolic") {
    // s3 s1 s2 s3 has 1 as its only eigenvalue, with algebraic multiplicity 3.
    const auto report = analyze_element(free_rank3(Rational(1)), Word{{2, 0, 1, 2}});
    const auto& verdict = expect_regime<Rational>(report.verdict);
    CHECK(verdict.kind == VerdictKind::MultiplicityAtLeastTwo);
    REQUIRE(report.lehmer.has_value());
    CHECK(report.lehmer->radius_is_one);
}

TEST_CASE("analyze_element: float regime for exponents outside {2,3}") {
    CoxeterDatum d;
    d.rank = 3;
    d.m = {1, 4, kInfiniteBond, 4, 1, kInfiniteBond, kInfiniteBond, kInfiniteBond, 1};
    d.c.assign(9, Rational(1));
    REQUIRE_FALSE(d.exact_capable());

    const auto report = analyze_element(d, Word{{0, 1, 2}});
    CHECK_FALSE(report.exact);
    CHECK(report.signature == FormSignature{2, 1, 0});
    const auto& verdict = expect_regime<double>(report.verdict);
    CHECK(verdict.kind == VerdictKind::SimpleDominant);
    CHECK(*verdict.k_positive == 1);
    CHECK(std::fabs(*verdict.lambda - 13.5832341) <= 1e-6);
    // Independent residual check against the characteristic polynomial.
    const auto h = std::get<Matrix<double>>(report.element);
    CHECK(std::fabs(char_poly(h).eval(*verdict.lambda)) <= 1e-6 * std::pow(14.0, 3));

    // A finite-order element of the dihedral parabolic: complex spectrum on
    // the unit circle, so no real dominant candidate exists.
    const auto rotation = analyze_element(d, Word{{0, 1}});
    const auto& rot_verdict = expect_regime<double>(rotation.verdict);
    CHECK(rot_verdict.kind == VerdictKind::NoRealDominantCandidate);
}

TEST_CASE("analyze_element: rank 8 stays fast") {
    CoxeterDatum d;
    d.rank = 8;
    d.m.assign(64, kInfiniteBond);
    d.c.assign(64, Rational(2));
    for (int i = 0; i < 8; ++i) {
        d.m[i * 8 + i] = 1;
        d.c[i * 8 + i] = Rational(1);
    }
    const auto report = analyze_element(d, Word{{0, 1, 2, 3, 4, 5, 6, 7, 1, 3}});
    const auto& verdict = expect_regime<double>(report.verdict);
    CHECK(verdict.kind == VerdictKind::SimpleDominant);
    CHECK(*verdict.k_positive == 1);
    CHECK(*verdict.lambda > 1e6);
}

TEST_CASE("analyze_element validates the word") {
    CHECK_THROWS_AS(analyze_element(pentagon_rank5(), Word{{0, 6}}),
                    std::invalid_argument);
}

TEST_CASE("datum validation") {
    CoxeterDatum d = affine_rank2();
    d.m[1] = 5;  // asymmetric
    CHECK_THROWS_AS(d.validate(), std::invalid_argument);

    d = affine_rank2();
    d.c[1] = Rational(1, 2);  // weight below 1
    CHECK_THROWS_AS(d.validate(), std::invalid_argument);

    d = affine_rank2();
    d.m[0] = 2;  // diagonal exponent must be 1
    CHECK_THROWS_AS(d.validate(), std::invalid_argument);
}
