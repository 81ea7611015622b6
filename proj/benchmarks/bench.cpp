#include <benchmark/benchmark.h>

#include "kuores/expr.hpp"
#include "kuores/factor.hpp"
#include "kuores/galois.hpp"
#include "kuores/resultant.hpp"
#include "kuores/rng.hpp"

using namespace kuores;

namespace {

Poly<Fp> random_fp(Var v, int deg, uint64_t p, Rng& rng) {
    std::vector<Fp> cs;
    for (int i = 0; i < deg; ++i) cs.push_back(Fp{rng.below(p), p});
    cs.push_back(Fp{1, p});
    return Poly<Fp>(v, std::move(cs));
}

void bm_resultant_bareiss(benchmark::State& state) {
    Rng rng(1);
    const uint64_t p = 101;
    Poly<Fp> a = random_fp(Var::Y, static_cast<int>(state.range(0)), p, rng);
    Poly<Fp> b = random_fp(Var::Y, static_cast<int>(state.range(0)), p, rng);
    for (auto _ : state) benchmark::DoNotOptimize(resultant_bareiss(a, b));
}
BENCHMARK(bm_resultant_bareiss)->Arg(4)->Arg(8)->Arg(16);

void bm_resultant_subres(benchmark::State& state) {
    Rng rng(1);
    const uint64_t p = 101;
    Poly<Fp> a = random_fp(Var::Y, static_cast<int>(state.range(0)), p, rng);
    Poly<Fp> b = random_fp(Var::Y, static_cast<int>(state.range(0)), p, rng);
    for (auto _ : state) benchmark::DoNotOptimize(resultant_subres(a, b));
}
BENCHMARK(bm_resultant_subres)->Arg(4)->Arg(8)->Arg(16);

void bm_kuo_qx(benchmark::State& state) {
    BiPolyQ g = parse_bipoly_q("(Y^2 - X^3)^2 - X^7", Var::Y);
    BiPolyQ f = parse_bipoly_q("Y^2 - X^3", Var::Y);
    for (auto _ : state) benchmark::DoNotOptimize(kuo_resultant(g, f).h);
}
BENCHMARK(bm_kuo_qx);

void bm_kuo_fp(benchmark::State& state) {
    Rng rng(2);
    const uint64_t p = 101;
    Poly<Fp> g = random_fp(Var::Y, static_cast<int>(state.range(0)), p, rng);
    Poly<Fp> f = random_fp(Var::Y, static_cast<int>(state.range(0)) - 1, p, rng);
    for (auto _ : state) benchmark::DoNotOptimize(kuo_resultant(g, f).h);
}
BENCHMARK(bm_kuo_fp)->Arg(4)->Arg(8);

void bm_factor(benchmark::State& state) {
    Rng rng(3);
    const uint64_t p = 101;
    Poly<Fp> a = random_fp(Var::Y, static_cast<int>(state.range(0)), p, rng);
    uint64_t seed = 0;
    for (auto _ : state) benchmark::DoNotOptimize(factor(a, seed++));
}
BENCHMARK(bm_factor)->Arg(6)->Arg(12)->Arg(24);

void bm_splitting_field(benchmark::State& state) {
    Rng rng(4);
    Poly<Fp> f = random_fp(Var::Y, 6, 5, rng);
    uint64_t seed = 0;
    for (auto _ : state) benchmark::DoNotOptimize(splitting_field(f, seed++));
}
BENCHMARK(bm_splitting_field);

} // namespace

BENCHMARK_MAIN();
