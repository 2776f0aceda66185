#include <benchmark/benchmark.h>

#include "oscent/covariance.hpp"
#include "oscent/eigen.hpp"
#include "oscent/entropy.hpp"
#include "oscent/graph.hpp"
#include "oscent/model.hpp"
#include "oscent/rng.hpp"
#include "oscent/sym_matrix.hpp"
#include "oscent/toeplitz.hpp"

namespace {

oscent::linalg::SymMatrix random_symmetric(int dim) {
    oscent::linalg::SymMatrix m(dim);
    std::uint64_t index = 0;
    for (int i = 0; i < dim; ++i)
        for (int j = i; j < dim; ++j)
            m.set(i, j, oscent::rng::uniform(3, 0, index++) - 0.5);
    return m;
}

void bm_sym_eigen(benchmark::State& state) {
    const int dim = static_cast<int>(state.range(0));
    oscent::linalg::SymMatrix m = random_symmetric(dim);
    for (auto _ : state) {
        benchmark::DoNotOptimize(oscent::linalg::sym_eigen(m));
    }
}
BENCHMARK(bm_sym_eigen)->Arg(32)->Arg(128);

void bm_ground_state_covariance(benchmark::State& state) {
    const int n = static_cast<int>(state.range(0));
    oscent::model::OscillatorSystem sys = oscent::model::ordered_chain(n);
    for (auto _ : state) {
        benchmark::DoNotOptimize(oscent::gaussian::ground_state_covariance(sys));
    }
}
BENCHMARK(bm_ground_state_covariance)->Arg(64);

void bm_entanglement_entropy(benchmark::State& state) {
    const int n = static_cast<int>(state.range(0));
    oscent::gaussian::CovarianceMatrix cov =
        oscent::gaussian::ground_state_covariance(oscent::model::ordered_chain(n));
    oscent::model::Region region = oscent::model::Region::range(n, 0, n / 2);
    for (auto _ : state) {
        benchmark::DoNotOptimize(oscent::entropy::entanglement_entropy(cov, region));
    }
}
BENCHMARK(bm_entanglement_entropy)->Arg(64);

void bm_truncated_chain_power(benchmark::State& state) {
    const int n_sub = static_cast<int>(state.range(0));
    const int n_full = 8 * n_sub * n_sub * n_sub * n_sub;
    for (auto _ : state) {
        benchmark::DoNotOptimize(oscent::model::truncated_chain_power(n_sub, n_full, 0.5));
    }
}
BENCHMARK(bm_truncated_chain_power)->Arg(8)->Arg(16);

void bm_limit_entry(benchmark::State& state) {
    for (auto _ : state) {
        benchmark::DoNotOptimize(oscent::toeplitz::half_line_entry(0.25, 7, 12));
    }
}
BENCHMARK(bm_limit_entry);

void bm_szego_scan(benchmark::State& state) {
    const std::vector<int> sizes = {4, 8, 16, 32, 64};
    for (auto _ : state) {
        benchmark::DoNotOptimize(oscent::toeplitz::szego_scan(0.5, sizes));
    }
}
BENCHMARK(bm_szego_scan);

} // namespace

BENCHMARK_MAIN();
