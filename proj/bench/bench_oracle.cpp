#include <benchmark/benchmark.h>

#include "oddminor/constructions.hpp"
#include "oddminor/oracle.hpp"

using namespace oddminor;

namespace {

struct Instance {
    const char* name;
    Graph graph;
    std::size_t r;
};

const std::vector<Instance>& instances() {
    static const std::vector<Instance> all = {
        {"K3xK3 cart r=5 (found)", product(ProductKind::cartesian, complete_graph(3), complete_graph(3)), 5},
        {"K3xK3 cart r=6 (absent)", product(ProductKind::cartesian, complete_graph(3), complete_graph(3)), 6},
        {"K4xK3 direct r=7 (absent)", product(ProductKind::direct, complete_graph(4), complete_graph(3)), 7},
        {"S2xS2 strong r=5 (absent)", product(ProductKind::strong, star_graph(2), star_graph(2)), 5},
    };
    return all;
}

void search_args(benchmark::internal::Benchmark* b) {
    for (int i = 0; i < static_cast<int>(instances().size()); ++i) b->Arg(i);
}

void BM_SearchSerial(benchmark::State& state) {
    const auto& inst = instances()[state.range(0)];
    state.SetLabel(inst.name);
    for (auto _ : state) benchmark::DoNotOptimize(search_serial(inst.graph, inst.r, {}));
}
BENCHMARK(BM_SearchSerial)->Apply(search_args)->Unit(benchmark::kMillisecond);

void BM_SearchParallel(benchmark::State& state) {
    const auto& inst = instances()[state.range(0)];
    state.SetLabel(inst.name);
    const int jobs = static_cast<int>(state.range(1));
    for (auto _ : state) benchmark::DoNotOptimize(search_parallel(inst.graph, inst.r, {}, jobs));
}
BENCHMARK(BM_SearchParallel)
    ->ArgsProduct({{0, 1, 2, 3}, {2, 4}})
    ->Unit(benchmark::kMillisecond);

// Connector scan without stored connectors over a large host.
struct VerifyCase {
    Graph host = product(ProductKind::direct, complete_graph(10), complete_graph(30));
    OddExpansionModel model = [] {
        auto m = direct_general_model(10, 30);
        m.connectors.reset();
        return m;
    }();
};

const VerifyCase& verify_case() {
    static const VerifyCase c;
    return c;
}

void BM_VerifySerial(benchmark::State& state) {
    const auto& c = verify_case();
    for (auto _ : state) benchmark::DoNotOptimize(verify_serial(c.host, c.model, false));
}
BENCHMARK(BM_VerifySerial)->Unit(benchmark::kMillisecond);

void BM_VerifyParallel(benchmark::State& state) {
    const auto& c = verify_case();
    const int jobs = static_cast<int>(state.range(0));
    for (auto _ : state) benchmark::DoNotOptimize(verify_parallel(c.host, c.model, false, jobs));
}
BENCHMARK(BM_VerifyParallel)->Arg(2)->Arg(4)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
