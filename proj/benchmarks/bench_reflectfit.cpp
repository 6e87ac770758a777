#include <benchmark/benchmark.h>

#include <random>

#include "reflectfit/oracle.hpp"
#include "reflectfit/reflection.hpp"
#include "reflectfit/symmetry.hpp"

using namespace reflectfit;

namespace {

PointSet make_points(std::mt19937_64& rng, std::size_t count, std::size_t dim) {
    std::uniform_real_distribution<double> coord(-1.0, 1.0);
    PointSet points(count, Vector(dim));
    for (auto& p : points)
        for (auto& x : p) x = coord(rng);
    return points;
}

Hyperplane make_plane(std::mt19937_64& rng, std::size_t dim) {
    std::normal_distribution<double> gauss(0.0, 1.0);
    Vector n(dim);
    for (auto& x : n) x = gauss(rng);
    std::uniform_real_distribution<double> offset(-0.5, 0.5);
    return canonicalize({normalized(n), offset(rng)});
}

PointSet reflect_all(const Hyperplane& plane, const PointSet& points) {
    PointSet out;
    out.reserve(points.size());
    for (const auto& p : points) out.push_back(reflect_point(plane, p));
    return out;
}

SymMatrix make_symmetric(std::mt19937_64& rng, std::size_t dim) {
    std::uniform_real_distribution<double> entry(-10.0, 10.0);
    Matrix m(dim);
    for (std::size_t i = 0; i < dim; ++i)
        for (std::size_t j = 0; j < dim; ++j) m(i, j) = entry(rng);
    return symmetrize(m);
}

void BM_jacobi_eigen(benchmark::State& state) {
    std::mt19937_64 rng(7);
    const SymMatrix a = make_symmetric(rng, static_cast<std::size_t>(state.range(0)));
    for (auto _ : state) benchmark::DoNotOptimize(jacobi_eigen(a));
}
BENCHMARK(BM_jacobi_eigen)->DenseRange(2, 8, 2);

void BM_fit_reflection(benchmark::State& state) {
    std::mt19937_64 rng(7);
    const auto dim = static_cast<std::size_t>(state.range(0));
    const auto m = static_cast<std::size_t>(state.range(1));
    const Hyperplane plane = make_plane(rng, dim);
    const PointSet P = make_points(rng, m, dim);
    const PointSet Q = reflect_all(plane, P);
    for (auto _ : state) benchmark::DoNotOptimize(fit_reflection(P, Q));
    state.SetItemsProcessed(static_cast<int64_t>(state.iterations()) * m);
}
BENCHMARK(BM_fit_reflection)
    ->Args({2, 10})
    ->Args({2, 100})
    ->Args({2, 1000})
    ->Args({3, 100})
    ->Args({3, 1000})
    ->Args({5, 1000});

void BM_grid_search_fit(benchmark::State& state) {
    std::mt19937_64 rng(7);
    const auto dim = static_cast<std::size_t>(state.range(0));
    const auto resolution = static_cast<std::size_t>(state.range(1));
    const Hyperplane plane = make_plane(rng, dim);
    const PointSet P = make_points(rng, 100, dim);
    const PointSet Q = reflect_all(plane, P);
    for (auto _ : state) benchmark::DoNotOptimize(grid_search_fit(P, Q, resolution));
}
BENCHMARK(BM_grid_search_fit)->Args({2, 4096})->Args({3, 20000})->Unit(benchmark::kMillisecond);

void BM_detect_symmetry(benchmark::State& state) {
    std::mt19937_64 rng(7);
    const auto dim = static_cast<std::size_t>(state.range(0));
    const Hyperplane plane = make_plane(rng, dim);
    const PointSet half = make_points(rng, 50, dim);
    PointSet cloud = half;
    for (const auto& p : half) cloud.push_back(reflect_point(plane, p));
    for (auto _ : state) benchmark::DoNotOptimize(detect_symmetry(cloud));
    state.SetItemsProcessed(static_cast<int64_t>(state.iterations()) * cloud.size());
}
BENCHMARK(BM_detect_symmetry)->Arg(2)->Arg(3)->Unit(benchmark::kMicrosecond);

}  // namespace

BENCHMARK_MAIN();
