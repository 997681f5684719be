#include "telhom/borel.hpp"
#include "telhom/equivariant.hpp"
#include "telhom/genrandom.hpp"
#include "telhom/morse.hpp"

#include <benchmark/benchmark.h>

using namespace telhom;

namespace {

f2::Matrix dense_square(std::uint64_t seed, std::size_t n) {
    Rng rng(seed);
    return random_matrix(rng, n, n);
}

void BM_MatrixMultiply(benchmark::State& state) {
    std::size_t n = static_cast<std::size_t>(state.range(0));
    f2::Matrix a = dense_square(11, n), b = dense_square(12, n);
    for (auto _ : state) benchmark::DoNotOptimize(a * b);
}
BENCHMARK(BM_MatrixMultiply)->Arg(64)->Arg(256)->Arg(1024);

void BM_MatrixRank(benchmark::State& state) {
    std::size_t n = static_cast<std::size_t>(state.range(0));
    f2::Matrix a = dense_square(13, n);
    for (auto _ : state) benchmark::DoNotOptimize(f2::rank(a));
}
BENCHMARK(BM_MatrixRank)->Arg(64)->Arg(256)->Arg(1024);

void BM_TelescopeBuild(benchmark::State& state) {
    Rng rng(21);
    ComplexSequence seq = random_sequence(rng, static_cast<std::size_t>(state.range(0)), 3, 4);
    for (auto _ : state) benchmark::DoNotOptimize(build_telescope(seq));
}
BENCHMARK(BM_TelescopeBuild)->Arg(3)->Arg(6);

void BM_MorseReduce(benchmark::State& state) {
    CellComplex oct = CellComplex::from_facets(6, {{0, 2, 4},
                                                   {0, 2, 5},
                                                   {0, 3, 4},
                                                   {0, 3, 5},
                                                   {1, 2, 4},
                                                   {1, 2, 5},
                                                   {1, 3, 4},
                                                   {1, 3, 5}});
    Subdivision sd = barycentric(oct);
    auto chain = sd.complex.chain();
    for (auto _ : state) benchmark::DoNotOptimize(reduce(*chain));
}
BENCHMARK(BM_MorseReduce);

void BM_BorelStage(benchmark::State& state) {
    auto pt = CellComplex::point();
    Group g = Group::cyclic(2);
    VertexAction act = {{0}, {0}};
    std::size_t stages = static_cast<std::size_t>(state.range(0));
    for (auto _ : state) benchmark::DoNotOptimize(borel_sequence(pt, g, act, stages));
}
BENCHMARK(BM_BorelStage)->Arg(3)->Arg(5);

void BM_EquivariantPoint(benchmark::State& state) {
    auto pt = CellComplex::point();
    Group g = Group::cyclic(2);
    VertexAction act = {{0}, {0}};
    EquivariantOptions opt;
    opt.max_degree = static_cast<std::size_t>(state.range(0));
    for (auto _ : state) benchmark::DoNotOptimize(equivariant_betti(pt, g, act, opt));
}
BENCHMARK(BM_EquivariantPoint)->Arg(2)->Arg(4);

} // namespace

BENCHMARK_MAIN();
