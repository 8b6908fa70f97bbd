#include <benchmark/benchmark.h>

#include <vector>

#include "relint/calculus.hpp"
#include "relint/duality.hpp"
#include "relint/generate.hpp"
#include "relint/interiors.hpp"
#include "relint/separation.hpp"

namespace {

using namespace relint;

std::vector<HPolyhedron> polyhedra(std::size_t dim, std::size_t count) {
  InstanceRng rng(42 + dim);
  std::vector<HPolyhedron> out;
  for (std::size_t i = 0; i < count; ++i) out.push_back(random_polyhedron(rng, dim, PolyhedronShape::Bounded, zeros(dim)));
  return out;
}

// Fresh copies so cached V-representations and implicit rows are rebuilt.
HPolyhedron fresh(const HPolyhedron& P) { return HPolyhedron(P.dim(), P.A(), P.b(), P.E(), P.d()); }

void BM_VertexEnumeration(benchmark::State& state) {
  const auto sets = polyhedra(static_cast<std::size_t>(state.range(0)), 16);
  std::size_t i = 0;
  for (auto _ : state) {
    const HPolyhedron P = fresh(sets[i++ % sets.size()]);
    benchmark::DoNotOptimize(P.vrep().points.size());
  }
}
BENCHMARK(BM_VertexEnumeration)->DenseRange(1, 4);

void BM_InteriorMembership(benchmark::State& state) {
  const auto kind = static_cast<InteriorKind>(state.range(1));
  const auto sets = polyhedra(static_cast<std::size_t>(state.range(0)), 16);
  std::size_t i = 0;
  for (auto _ : state) {
    const HPolyhedron P = fresh(sets[i++ % sets.size()]);
    benchmark::DoNotOptimize(interior_member(P, zeros(P.dim()), kind));
  }
}
BENCHMARK(BM_InteriorMembership)->ArgsProduct({{2, 4}, {0, 1, 2}});

void BM_SeparateSets(benchmark::State& state) {
  const std::size_t dim = static_cast<std::size_t>(state.range(0));
  const auto left = polyhedra(dim, 8);
  InstanceRng rng(7);
  std::vector<HPolyhedron> right;
  for (std::size_t i = 0; i < 8; ++i) right.push_back(random_polyhedron(rng, dim));
  std::size_t i = 0;
  for (auto _ : state) {
    const std::size_t k = i++ % left.size();
    benchmark::DoNotOptimize(properly_separate_sets(fresh(left[k]), fresh(right[k])).certificate.has_value());
  }
}
BENCHMARK(BM_SeparateSets)->DenseRange(1, 3);

void BM_FenchelRockafellar(benchmark::State& state) {
  InstanceRng rng(11);
  std::vector<PLPair> pairs;
  for (int i = 0; i < 8; ++i) pairs.push_back(random_pl_pair(rng, static_cast<std::size_t>(state.range(0)), OverlapMode::Qualified));
  std::size_t i = 0;
  for (auto _ : state) {
    const PLPair& p = pairs[i++ % pairs.size()];
    benchmark::DoNotOptimize(verify_fenchel_rockafellar(p.f, p.g).strong_duality);
  }
}
BENCHMARK(BM_FenchelRockafellar)->DenseRange(1, 3)->Unit(benchmark::kMillisecond);

void BM_ImageIri(benchmark::State& state) {
  InstanceRng rng(5);
  const auto sets = polyhedra(3, 8);
  std::vector<Matrix> maps;
  for (int i = 0; i < 8; ++i) maps.push_back({rng.int_vector(3, 2), rng.int_vector(3, 2)});
  std::size_t i = 0;
  for (auto _ : state) {
    const std::size_t k = i++ % sets.size();
    benchmark::DoNotOptimize(check_image_iri(maps[k], fresh(sets[k])).holds);
  }
}
BENCHMARK(BM_ImageIri)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
