#include <benchmark/benchmark.h>

#include <random>

#include "qcong/congruence.hpp"
#include "qcong/detail/kronecker.hpp"
#include "qcong/q_objects.hpp"
#include "qcong/sun_poly.hpp"

using namespace qcong;

namespace {

std::vector<Int> random_coeffs(std::size_t len, int bits, unsigned seed) {
    gmp_randclass gr(gmp_randinit_default);
    gr.seed(seed);
    std::vector<Int> v(len);
    for (std::size_t i = 0; i < len; ++i) v[i] = (i % 3 == 0) ? Int(-gr.get_z_bits(bits)) : gr.get_z_bits(bits);
    return v;
}

void BM_Schoolbook(benchmark::State& state) {
    const auto a = random_coeffs(state.range(0), 256, 1), b = random_coeffs(state.range(0), 256, 2);
    for (auto _ : state) benchmark::DoNotOptimize(detail::schoolbook_multiply(a, b));
}
BENCHMARK(BM_Schoolbook)->RangeMultiplier(4)->Range(16, 1024);

void BM_Kronecker(benchmark::State& state) {
    const auto a = random_coeffs(state.range(0), 256, 1), b = random_coeffs(state.range(0), 256, 2);
    for (auto _ : state) benchmark::DoNotOptimize(detail::kronecker_multiply(a, b));
}
BENCHMARK(BM_Kronecker)->RangeMultiplier(4)->Range(16, 1024);

void BM_QWPoly(benchmark::State& state) {
    for (auto _ : state) benchmark::DoNotOptimize(q_w_poly_alt(state.range(0), 2));
}
BENCHMARK(BM_QWPoly)->DenseRange(4, 16, 4);

void BM_QSumPlainVerify(benchmark::State& state) {
    const Exp n = state.range(0);
    for (auto _ : state) benchmark::DoNotOptimize(verify_divisible_by_qn(qsum_plain(n, 2, 2, 2), n));
}
BENCHMARK(BM_QSumPlainVerify)->DenseRange(4, 16, 4)->Unit(benchmark::kMillisecond);

void BM_RemMonic(benchmark::State& state) {
    const QLaurent a = pow(q_w_poly(8, 1), 2);
    const QPoly& m = cyclotomic(state.range(0));
    for (auto _ : state) benchmark::DoNotOptimize(rem_monic(a, m));
}
BENCHMARK(BM_RemMonic)->Arg(7)->Arg(30)->Arg(105);

}  // namespace

BENCHMARK_MAIN();
