// Serial reference vs OpenMP version of each kernel. Run with
// OMP_NUM_THREADS set to compare thread counts.
#include <benchmark/benchmark.h>

#include <map>
#include <numeric>

#include "atlaslearn/kernels.hpp"
#include "atlaslearn/random.hpp"
#include "atlaslearn/synthetic.hpp"

using namespace atlaslearn;

namespace {

const PointCloud& torus(std::size_t n) {
    static std::map<std::size_t, PointCloud> cache;
    auto it = cache.find(n);
    if (it == cache.end()) it = cache.emplace(n, sample_torus(n, 1).cloud).first;
    return it->second;
}

template <auto Kernel>
void nearest(benchmark::State& state) {
    const auto& cloud = torus(static_cast<std::size_t>(state.range(0)));
    for (auto _ : state) benchmark::DoNotOptimize(Kernel(cloud, 10));
}

template <auto Kernel>
void epsilon(benchmark::State& state) {
    const auto& cloud = torus(static_cast<std::size_t>(state.range(0)));
    for (auto _ : state) benchmark::DoNotOptimize(Kernel(cloud, 1.5));
}

template <auto Kernel>
void paths(benchmark::State& state) {
    const auto n = static_cast<std::size_t>(state.range(0));
    const auto graph = build_knn_graph(torus(n), 10);
    const auto sub = whole_graph(graph);
    const CompactGraph cg(graph, sub);
    std::vector<std::uint32_t> sources(n);
    std::iota(sources.begin(), sources.end(), 0u);
    for (auto _ : state) benchmark::DoNotOptimize(Kernel(cg, sources));
}

template <auto Kernel>
void penalty(benchmark::State& state) {
    const auto n = static_cast<Eigen::Index>(state.range(0));
    Rng rng(2);
    Eigen::MatrixXd x(n, 3), y(n, 2);
    for (Eigen::Index i = 0; i < n; ++i) {
        for (Eigen::Index j = 0; j < 3; ++j) x(i, j) = uniform01(rng);
        for (Eigen::Index j = 0; j < 2; ++j) y(i, j) = x(i, j) + 0.1 * uniform01(rng);
    }
    for (auto _ : state) benchmark::DoNotOptimize(Kernel(x, y, 10));
}

template <auto Kernel>
void cycles(benchmark::State& state) {
    // a full sphere graph has no long atomic cycle, so the scan visits every source
    const auto cloud = sample_sphere(static_cast<std::size_t>(state.range(0)), 3).cloud;
    const auto graph = build_knn_graph(cloud, 10);
    const auto sub = whole_graph(graph);
    const CompactGraph cg(graph, sub);
    for (auto _ : state) benchmark::DoNotOptimize(Kernel(cg, 8, 2));
}

}  // namespace

BENCHMARK(nearest<kernels::nearest_neighbors_serial>)->Name("nearest_neighbors/serial")->Arg(1000)->Arg(4000);
BENCHMARK(nearest<kernels::nearest_neighbors_parallel>)->Name("nearest_neighbors/parallel")->Arg(1000)->Arg(4000);
BENCHMARK(epsilon<kernels::epsilon_neighbors_serial>)->Name("epsilon_neighbors/serial")->Arg(2000);
BENCHMARK(epsilon<kernels::epsilon_neighbors_parallel>)->Name("epsilon_neighbors/parallel")->Arg(2000);
BENCHMARK(paths<kernels::shortest_paths_serial>)->Name("shortest_paths/serial")->Arg(1000)->Unit(benchmark::kMillisecond);
BENCHMARK(paths<kernels::shortest_paths_parallel>)->Name("shortest_paths/parallel")->Arg(1000)->Unit(benchmark::kMillisecond);
BENCHMARK(penalty<kernels::trustworthiness_penalty_serial>)->Name("trust_penalty/serial")->Arg(1000)->Unit(benchmark::kMillisecond);
BENCHMARK(penalty<kernels::trustworthiness_penalty_parallel>)->Name("trust_penalty/parallel")->Arg(1000)->Unit(benchmark::kMillisecond);
BENCHMARK(cycles<kernels::atomic_cycle_scan_serial>)->Name("atomic_cycle_scan/serial")->Arg(500)->Unit(benchmark::kMillisecond);
BENCHMARK(cycles<kernels::atomic_cycle_scan_parallel>)->Name("atomic_cycle_scan/parallel")->Arg(500)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
