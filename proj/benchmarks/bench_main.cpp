#include "cdu/cdiff.hpp"
#include "cdu/circle.hpp"
#include "cdu/field.hpp"
#include "cdu/niho.hpp"

#include <benchmark/benchmark.h>

#include <random>
#include <vector>

namespace {

using namespace cdu;

// Fixed seeds keep runs comparable across machines and commits.
std::vector<Elem> random_elems(const Field& f, std::size_t count,
                               std::uint32_t seed) {
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<Elem> dist(0, f.order() - 1);
    std::vector<Elem> out(count);
    for (auto& x : out) x = dist(rng);
    return out;
}

void BM_mul(benchmark::State& state) {
    const Field f(static_cast<unsigned>(state.range(0)));
    const auto xs = random_elems(f, 1024, 1);
    std::size_t i = 0;
    for (auto _ : state) {
        benchmark::DoNotOptimize(f.mul(xs[i & 1023], xs[(i + 1) & 1023]));
        ++i;
    }
}
BENCHMARK(BM_mul)->Arg(8)->Arg(14)->Arg(20);

void BM_pow(benchmark::State& state) {
    const Field f(14);
    const auto xs = random_elems(f, 1024, 2);
    std::size_t i = 0;
    for (auto _ : state) {
        benchmark::DoNotOptimize(f.pow(xs[i & 1023], 3303));
        ++i;
    }
}
BENCHMARK(BM_pow);

void BM_inv(benchmark::State& state) {
    const Field f(14);
    auto xs = random_elems(f, 1024, 3);
    for (auto& x : xs) x |= 1;  // nonzero
    std::size_t i = 0;
    for (auto _ : state) {
        benchmark::DoNotOptimize(f.inv(xs[i & 1023]));
        ++i;
    }
}
BENCHMARK(BM_inv);

void BM_power_table(benchmark::State& state) {
    const Field f(static_cast<unsigned>(state.range(0)));
    for (auto _ : state) {
        benchmark::DoNotOptimize(make_power(f, 621));
    }
}
BENCHMARK(BM_power_table)->Arg(10)->Arg(14);

void BM_spectrum(benchmark::State& state) {
    const Field f(static_cast<unsigned>(state.range(0)));
    const PowerFunc F = make_power(f, 621);
    const Elem c = unit_circle(f)[1];  // smallest circle member != 1
    for (auto _ : state) {
        benchmark::DoNotOptimize(spectrum(F, c).uniformity);
    }
}
BENCHMARK(BM_spectrum)->Arg(10)->Arg(14);

void BM_cdu_general(benchmark::State& state) {
    const Field f(8);
    const PowerFunc F = make_power(f, 83);
    for (auto _ : state) {
        benchmark::DoNotOptimize(cdu_general(f, F.table, 0x2));
    }
}
BENCHMARK(BM_cdu_general);

void BM_structural_uniformity(benchmark::State& state) {
    const auto p = make_params(3, 2);
    const Field f(p.n);
    const Elem c = unit_circle(f)[1];
    for (auto _ : state) {
        benchmark::DoNotOptimize(structural_uniformity(f, p, c));
    }
}
BENCHMARK(BM_structural_uniformity);

}  // namespace

BENCHMARK_MAIN();
