#include <pach/coloring_construction.hpp>
#include <pach/exact_geometry.hpp>
#include <pach/extraction.hpp>
#include <pach/f2_cochains.hpp>
#include <pach/overlap_pipeline.hpp>
#include <pach/random.hpp>
#include <pach/sphere_construction.hpp>

#include <benchmark/benchmark.h>

using namespace pach;

namespace {

void BM_Orientation(benchmark::State& state) {
    Rng rng(1);
    std::vector<Point> pts;
    for (int i = 0; i < 256; ++i) pts.push_back({rng.bounded_rational(1000, 97), rng.bounded_rational(1000, 89)});
    std::size_t i = 0;
    for (auto _ : state) {
        benchmark::DoNotOptimize(orientation(pts[i & 255], pts[(i + 1) & 255], pts[(i + 2) & 255]));
        ++i;
    }
}
BENCHMARK(BM_Orientation);

void BM_CountTriangles(benchmark::State& state) {
    const int n = static_cast<int>(state.range(0));
    Rng rng(2);
    TripartiteGraph g({n, n, n});
    for (int i = 0; i < 3; ++i)
        for (int j = i + 1; j < 3; ++j)
            for (int a = 0; a < n; ++a)
                for (int b = 0; b < n; ++b)
                    if (rng.bit()) g.add_edge({i, a}, {j, b});
    for (auto _ : state) benchmark::DoNotOptimize(count_triangles(g));
}
BENCHMARK(BM_CountTriangles)->Arg(64)->Arg(256);

void BM_CohomologyRank(benchmark::State& state) {
    const JoinComplex X(2, static_cast<int>(state.range(0)));
    for (auto _ : state) benchmark::DoNotOptimize(cohomology_rank(X, 2));
}
BENCHMARK(BM_CohomologyRank)->Arg(4)->Arg(8)->Unit(benchmark::kMillisecond);

void BM_ExactCofilling(benchmark::State& state) {
    const JoinComplex X(2, 2);
    Rng rng(3);
    F2Cochain a = F2Cochain::zero(X, 1);
    for (std::uint64_t i = 0; i < X.face_count(1); ++i) a.bits().set(i, rng.bit());
    const F2Cochain b = coboundary(X, a);
    for (auto _ : state) benchmark::DoNotOptimize(minimal_cofilling(X, b));
}
BENCHMARK(BM_ExactCofilling)->Unit(benchmark::kMicrosecond);

void BM_MaxCompleteBox(benchmark::State& state) {
    const int n = static_cast<int>(state.range(0));
    const JoinComplex X(2, n);
    Rng rng(derive_seed(4, 1));
    const PointConfiguration config = random_configuration(3, n, rng);
    const Filling filling = random_filling(X, 4);
    const CandidateSet cs = candidate_points(configuration_edges(X, config), {});
    const PartiteHypergraph h = coverage_hypergraph(X, filling, config, cs.points.front());
    for (auto _ : state) benchmark::DoNotOptimize(max_complete_box(h));
}
BENCHMARK(BM_MaxCompleteBox)->Arg(6)->Arg(10)->Unit(benchmark::kMicrosecond);

void BM_ValidatePushedMap(benchmark::State& state) {
    const JoinComplex X(2, static_cast<int>(state.range(0)));
    const PLMap map = build_pushed_map(X, random_coloring(X, 5), 5);
    for (auto _ : state) benchmark::DoNotOptimize(validate_map(map).valid());
}
BENCHMARK(BM_ValidatePushedMap)->Arg(3)->Arg(4)->Unit(benchmark::kMillisecond);

void BM_FaceParities(benchmark::State& state) {
    const PLMap map = random_affine_map(static_cast<int>(state.range(0)), 6);
    const Point p = exterior_point(map);
    const Point q{p.x / 7, p.y / 11};
    for (auto _ : state) benchmark::DoNotOptimize(face_parities(map, q));
}
BENCHMARK(BM_FaceParities)->Arg(6)->Arg(12)->Unit(benchmark::kMicrosecond);

}  // namespace
BENCHMARK_MAIN();
