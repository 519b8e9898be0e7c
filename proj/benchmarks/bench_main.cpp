#include <benchmark/benchmark.h>

#include <random>

#include "loophom/artin.hpp"
#include "loophom/ext_oracle.hpp"
#include "loophom/homology.hpp"
#include "loophom/loop_assembly.hpp"

using namespace loophom;

static void BM_ChainComplexBuild(benchmark::State& state) {
  auto K = skeleton_of_simplex(4, 1);
  MultiDegree I({2, 2, 1, 1});
  for (auto _ : state) {
    auto cx = tk_complex(K, I);
    benchmark::DoNotOptimize(cx.dim(0));
  }
}
BENCHMARK(BM_ChainComplexBuild);

static void BM_IntegerHomology(benchmark::State& state) {
  auto K = skeleton_of_simplex(static_cast<int>(state.range(0)), 1);
  MultiDegree I(std::vector<int>(K.vertex_count(), 1));
  for (auto _ : state) {
    auto H = integer_homology(tk_complex(K, I));
    benchmark::DoNotOptimize(H.size());
  }
}
BENCHMARK(BM_IntegerHomology)->Arg(4)->Arg(5);

static void BM_SmithNormalForm(benchmark::State& state) {
  // a real boundary matrix, the workload the pivot selection is tuned for
  auto K = skeleton_of_simplex(static_cast<int>(state.range(0)), 1);
  MultiDegree I(std::vector<int>(K.vertex_count(), 1));
  auto cx = tk_complex(K, I);
  const SparseIntMat& M = cx.boundary(1);
  for (auto _ : state) {
    auto s = smith_normal_form(M);
    benchmark::DoNotOptimize(s.rank);
  }
}
BENCHMARK(BM_SmithNormalForm)->Arg(4)->Arg(5);

static void BM_MinimalResolution(benchmark::State& state) {
  auto A = exterior_sr_algebra(skeleton_of_simplex(4, 1));
  for (auto _ : state) {
    auto betti = minimal_resolution_betti(A, 0, 4);
    benchmark::DoNotOptimize(betti.size());
  }
}
BENCHMARK(BM_MinimalResolution);

static void BM_ArtinCount(benchmark::State& state) {
  auto K = polygon(5);
  MultiDegree I({2, 2, 2, 1, 1});
  for (auto _ : state) {
    benchmark::DoNotOptimize(artin_count_by_multidegree(K, I));
  }
}
BENCHMARK(BM_ArtinCount);

static void BM_LoopAssembly(benchmark::State& state) {
  auto K = polygon(4);
  std::vector<VertexAlgebra> in(4, poly_vertex_algebra(1, 6));
  for (auto _ : state) {
    auto dims = loop_homology_dims(K, in, 0, 6);
    benchmark::DoNotOptimize(dims.dims.back());
  }
}
BENCHMARK(BM_LoopAssembly);

BENCHMARK_MAIN();
