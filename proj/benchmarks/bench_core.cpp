#include <benchmark/benchmark.h>

#include <gtorbit/gtpolytope.hpp>
#include <gtorbit/reconstruct.hpp>
#include <gtorbit/sampling.hpp>

using namespace gtorbit;

namespace {

Spectrum bench_spectrum() {
    return Spectrum({Rational(5), Rational(4), Rational(4), Rational(4), Rational(3), Rational(1)});
}

void BM_EigenvaluesDesc(benchmark::State& state) {
    std::mt19937_64 rng(42);
    HermitianMatrix a = random_hermitian(rng, static_cast<int>(state.range(0)));
    for (auto _ : state) benchmark::DoNotOptimize(eigenvalues_desc(a, 1e-11));
}
BENCHMARK(BM_EigenvaluesDesc)->Arg(4)->Arg(6)->Arg(8);

void BM_GtMap(benchmark::State& state) {
    std::mt19937_64 rng(43);
    HermitianMatrix a = random_hermitian(rng, 6);
    for (auto _ : state) benchmark::DoNotOptimize(gt_map(a, 1e-11));
}
BENCHMARK(BM_GtMap);

void BM_RayShoot(benchmark::State& state) {
    Spectrum lambda = bench_spectrum();
    GTPolytope poly(lambda);
    auto gv = good_vertex(lambda);
    auto dirs = edge_directions_at_good_vertex(gv.diagonal, orbit_spec(lambda));
    auto base = gv.pattern.coordinates();
    for (auto _ : state)
        for (const auto& d : dirs) benchmark::DoNotOptimize(ray_shoot(poly, base, d.delta));
}
BENCHMARK(BM_RayShoot);

void BM_GromovBound(benchmark::State& state) {
    Spectrum lambda = bench_spectrum();
    for (auto _ : state) benchmark::DoNotOptimize(gromov_lower_bound(lambda));
}
BENCHMARK(BM_GromovBound);

void BM_ReconstructRoundtrip(benchmark::State& state) {
    std::mt19937_64 rng(44);
    Spectrum lambda({Rational(4), Rational(2), Rational(1), Rational(0), Rational(-2)});
    GTPattern p = sample_interlacing_pattern(lambda, rng);
    for (auto _ : state) {
        HermitianMatrix m = reconstruct_matrix(p, 1e-11);
        benchmark::DoNotOptimize(gt_map(m, 1e-11));
    }
}
BENCHMARK(BM_ReconstructRoundtrip);

} // namespace

BENCHMARK_MAIN();
