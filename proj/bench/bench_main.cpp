#include <benchmark/benchmark.h>

#include "seqlab/ambiguity.hpp"
#include "seqlab/families.hpp"
#include "seqlab/random.hpp"
#include "seqlab/verify.hpp"

using namespace seqlab;

namespace {

void BM_Surface(benchmark::State& state, AmbiguityPath path) {
    const int p = static_cast<int>(state.range(0));
    Rng rng(1);
    const auto phi = random_sequence(p, rng);
    const auto psi = random_sequence(p, rng);
    std::vector<cplx> grid;
    for (auto _ : state) {
        ambiguity_grid(phi, psi, path, grid);
        benchmark::DoNotOptimize(grid.data());
    }
    state.SetComplexityN(p);
}

void BM_VerifyOmega(benchmark::State& state, Execution exec) {
    const int p = static_cast<int>(state.range(0));
    const FamilyDescriptor fam(FamilyKind::omega, make_field(p));
    const auto bounds = default_bounds(FamilyKind::omega, p);
    VerifyOptions o;
    o.execution = exec;
    o.count_classes = false;
    if (p > 7) o.pairs = PairMode::sampled(1, 20000);
    for (auto _ : state) benchmark::DoNotOptimize(verify_family(fam, bounds, o).pass());
}

}  // namespace

BENCHMARK_CAPTURE(BM_Surface, naive, AmbiguityPath::naive)->Arg(13)->Arg(61)->Arg(251);
BENCHMARK_CAPTURE(BM_Surface, fast, AmbiguityPath::fast)->Arg(13)->Arg(61)->Arg(251)->Arg(1009);
BENCHMARK_CAPTURE(BM_VerifyOmega, serial, Execution::serial)->Arg(7)->Arg(11)->Unit(benchmark::kMillisecond);
BENCHMARK_CAPTURE(BM_VerifyOmega, parallel, Execution::parallel)->Arg(7)->Arg(11)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
