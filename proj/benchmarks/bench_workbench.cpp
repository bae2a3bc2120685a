#include <benchmark/benchmark.h>

#include <qis/bethe.hpp>
#include <qis/boundary.hpp>
#include <qis/hamiltonian.hpp>

using namespace qis;

static void BM_Kron(benchmark::State& state) {
    const int n = static_cast<int>(state.range(0));
    const Operator a(Matrix::Random(n, n));
    const Operator b = Operator::identity({n});
    for (auto _ : state) benchmark::DoNotOptimize(kron(a, b));
}
BENCHMARK(BM_Kron)->Arg(8)->Arg(32);

static void BM_EmbedPair(benchmark::State& state) {
    const int N = static_cast<int>(state.range(0));
    const std::vector<int> dims(N, 2);
    const Operator p = permutation(2);
    for (auto _ : state) benchmark::DoNotOptimize(embed_pair(p, 1, N, dims));
}
BENCHMARK(BM_EmbedPair)->Arg(6)->Arg(8);

static void BM_Monodromy(benchmark::State& state) {
    const Monodromy T(ChainSpec::periodic_xxz(static_cast<int>(state.range(0)), 0.3));
    const cplx l(0.2, 0.1);
    for (auto _ : state) benchmark::DoNotOptimize(T(l));
}
BENCHMARK(BM_Monodromy)->Arg(4)->Arg(6)->Arg(8);

static void BM_Transfer(benchmark::State& state) {
    const ChainSpec chain = ChainSpec::periodic_xxz(static_cast<int>(state.range(0)), 0.3);
    double x = 0.0;
    for (auto _ : state) {
        // fresh family each time so the cache does not hide the cost
        const TransferFamily t(chain);
        benchmark::DoNotOptimize(t(cplx(0.2, x)));
        x += 1e-3;
    }
}
BENCHMARK(BM_Transfer)->Arg(4)->Arg(6);

static void BM_OpenTransfer(benchmark::State& state) {
    KSpec k;
    k.kind = KSpec::Kind::gz_dvgr;
    const ChainSpec chain = ChainSpec::open_xxz(static_cast<int>(state.range(0)), 0.3, Gradation::principal, k, k);
    for (auto _ : state) {
        const OpenTransferFamily t(chain);
        benchmark::DoNotOptimize(t(cplx(0.2, 0.1)));
    }
}
BENCHMARK(BM_OpenTransfer)->Arg(3)->Arg(5);

static void BM_SectorSpectrum(benchmark::State& state) {
    for (auto _ : state) benchmark::DoNotOptimize(xxz_spectrum(static_cast<int>(state.range(0)), 0.5));
}
BENCHMARK(BM_SectorSpectrum)->Arg(8)->Arg(10);

static void BM_SolveBae(benchmark::State& state) {
    const int N = static_cast<int>(state.range(0));
    for (auto _ : state) benchmark::DoNotOptimize(solve_bae(N, 2, 0.7, N / 2));
}
BENCHMARK(BM_SolveBae)->Arg(4)->Arg(6);

BENCHMARK_MAIN();
