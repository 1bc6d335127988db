#include <benchmark/benchmark.h>

#include "kleinian/catalog.hpp"
#include "kleinian/invariants.hpp"
#include "kleinian/polynomial.hpp"
#include "kleinian/words.hpp"

using namespace kleinian;

static void BM_field_mul(benchmark::State& state) {
    FieldElement a{Rational(3, 5), Rational(-2), Rational(7, 3), Rational(1)};
    FieldElement b{Rational(-1, 7), Rational(4), Rational(0), Rational(5, 2)};
    for (auto _ : state) benchmark::DoNotOptimize(a * b);
}
BENCHMARK(BM_field_mul);

static void BM_minimal_polynomial(benchmark::State& state) {
    FieldElement t = evaluate_word("m*s*m^-1*g", catalog::links_namespace()).trace();
    for (auto _ : state) benchmark::DoNotOptimize(minimal_polynomial(t));
}
BENCHMARK(BM_minimal_polynomial);

static void BM_lambda_builder(benchmark::State& state) {
    int n = static_cast<int>(state.range(0));
    for (auto _ : state) benchmark::DoNotOptimize(catalog::links_lambda1(n));
}
BENCHMARK(BM_lambda_builder)->Arg(1)->Arg(4)->Arg(8);

static void BM_cusp_modulus(benchmark::State& state) {
    const Namespace& ns = catalog::links_namespace();
    Matrix p1 = ns.lookup("p1");
    Matrix lam = catalog::links_lambda1(4);
    for (auto _ : state) benchmark::DoNotOptimize(invariants::cusp_modulus(p1, lam));
}
BENCHMARK(BM_cusp_modulus);

static void BM_moduli_equivalent(benchmark::State& state) {
    ProjPoint z{FieldElement(0, 1, 0, 2)};
    ProjPoint w{FieldElement(0, 2, 0, 4)};
    for (auto _ : state) benchmark::DoNotOptimize(invariants::moduli_equivalent(z, w));
}
BENCHMARK(BM_moduli_equivalent);

static void BM_trace_field_links(benchmark::State& state) {
    auto spec = catalog::family_generators(catalog::Family::Links, static_cast<int>(state.range(0)));
    for (auto _ : state) benchmark::DoNotOptimize(invariants::trace_field(spec));
}
BENCHMARK(BM_trace_field_links)->Arg(2)->Arg(8);

static void BM_homology(benchmark::State& state) {
    for (auto _ : state) benchmark::DoNotOptimize(invariants::homology_mod2(8));
}
BENCHMARK(BM_homology);

static void BM_word_parse_eval(benchmark::State& state) {
    const Namespace& ns = catalog::links_namespace();
    for (auto _ : state)
        benchmark::DoNotOptimize(evaluate_word("Conj(c^4, s*r*s)*delta1^-1*Bar(p3)", ns));
}
BENCHMARK(BM_word_parse_eval);

BENCHMARK_MAIN();
