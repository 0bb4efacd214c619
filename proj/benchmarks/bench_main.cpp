#include "specdom/coxeter.hpp"
#include "specdom/criterion.hpp"
#include "specdom/matrix.hpp"
#include "specdom/spectral.hpp"

#include <benchmark/benchmark.h>

namespace {

using namespace specdom;

Matrix<Rational> lambda15_matrix() {
    return Matrix<Rational>{{Rational(-11), Rational(14)}, {Rational(-26), Rational(29)}};
}

CoxeterDatum pentagon_datum() {
    // Rank 5, infinite bonds around a cycle with weight 2, commuting otherwise.
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

void BM_mat_pow_exact(benchmark::State& state) {
    const auto a = lambda15_matrix();
    for (auto _ : state) {
        auto p = pow(a, static_cast<unsigned long>(state.range(0)));
        benchmark::DoNotOptimize(p);
    }
}
BENCHMARK(BM_mat_pow_exact)->Arg(8)->Arg(32)->Arg(128);

void BM_mat_pow_float(benchmark::State& state) {
    const auto a = to_float(lambda15_matrix());
    for (auto _ : state) {
        auto p = pow(a, static_cast<unsigned long>(state.range(0)));
        benchmark::DoNotOptimize(p);
    }
}
BENCHMARK(BM_mat_pow_float)->Arg(8)->Arg(32)->Arg(128);

void BM_char_poly_exact(benchmark::State& state) {
    const auto b = bilinear_form<Rational>(pentagon_datum());
    for (auto _ : state) {
        auto p = char_poly(b);
        benchmark::DoNotOptimize(p);
    }
}
BENCHMARK(BM_char_poly_exact);

void BM_power_iteration_rank5(benchmark::State& state) {
    const auto b = bilinear_form<Rational>(pentagon_datum());
    const auto h = to_float(evaluate_word(b, Word{{0, 1, 2, 3, 4, 0, 1}}));
    for (auto _ : state) {
        auto r = dominant_eigenpair(h);
        benchmark::DoNotOptimize(r);
    }
}
BENCHMARK(BM_power_iteration_rank5);

void BM_eventual_positivity_exact(benchmark::State& state) {
    const auto a = lambda15_matrix();
    EigenPair<Rational> pair;
    pair.lambda = 15;
    pair.v = Matrix<Rational>::column({Rational(7, 20), Rational(13, 20)});
    pair.u = Matrix<Rational>::row({Rational(-20, 6), Rational(20, 6)});
    const auto verdict = analyze(a, pair, AnalyzeConfig{});
    const auto z = *verdict.z;
    for (auto _ : state) {
        auto scan = eventual_positivity(z);
        benchmark::DoNotOptimize(scan);
    }
}
BENCHMARK(BM_eventual_positivity_exact);

void BM_word_evaluation_rank5(benchmark::State& state) {
    const auto d = pentagon_datum();
    const auto b = bilinear_form<Rational>(d);
    const Word w{{0, 1, 2, 3, 4, 0, 1, 2, 3, 4, 0, 1}};
    for (auto _ : state) {
        auto h = evaluate_word(b, w);
        benchmark::DoNotOptimize(h);
    }
}
BENCHMARK(BM_word_evaluation_rank5);

void BM_analyze_element_rank5(benchmark::State& state) {
    const auto d = pentagon_datum();
    const Word w{{0, 1, 2, 3, 4, 0, 1}};
    for (auto _ : state) {
        auto report = analyze_element(d, w);
        benchmark::DoNotOptimize(report);
    }
}
BENCHMARK(BM_analyze_element_rank5);

}  // namespace

BENCHMARK_MAIN();
