#include <benchmark/benchmark.h>

#include <json.hpp>

#include "chain.hpp"
#include "hypermap/catalog.hpp"
#include "hypermap/dessin.hpp"
#include "hypermap/perm_group.hpp"
#include "hypermap/pipeline.hpp"

using namespace hypermap;

namespace {

std::vector<Perm> psl2_action(std::uint32_t q, std::uint32_t l, std::uint32_t m, std::uint32_t n) {
  auto gt = find_generating_triple(q, l, m, n);
  return {projective_perm(q, gt.x), projective_perm(q, gt.y)};
}

void BM_SchreierSimsPSL2(benchmark::State& st) {
  const auto q = static_cast<std::uint32_t>(st.range(0));
  const auto gens = psl2_action(q, 2, 3, 13);
  for (auto _ : st) {
    PermGroup g(q + 1, gens);
    benchmark::DoNotOptimize(group_order(g));
  }
}
BENCHMARK(BM_SchreierSimsPSL2)->Arg(311)->Arg(467)->Unit(benchmark::kMillisecond);

void BM_CoverCentralizer(benchmark::State& st) {
  RealizeOptions o;
  o.triple = Triple::make(2, 3, 13);
  const auto j = nlohmann::json::parse(realize(catalog_group("S3"), o).dessin);
  const Dessin d{Perm(j["sigma0"].get<std::vector<Point>>()), Perm(j["sigma1"].get<std::vector<Point>>())};
  for (auto _ : st) benchmark::DoNotOptimize(automorphism_group(d).elements.size());
}
BENCHMARK(BM_CoverCentralizer)->Unit(benchmark::kMillisecond);

void BM_TietzeSimplify(benchmark::State& st) {
  const auto q = static_cast<std::uint32_t>(st.range(0));
  const auto c = testchain::build(q, 2, 3, 13);
  for (auto _ : st) benchmark::DoNotOptimize(tietze_simplify(c.rs).presentation.relators.size());
}
BENCHMARK(BM_TietzeSimplify)->Arg(311)->Arg(467)->Unit(benchmark::kMillisecond);

void BM_Realize(benchmark::State& st, const char* group, Triple t) {
  const auto a = catalog_group(group);
  RealizeOptions o;
  o.triple = t;
  for (auto _ : st) benchmark::DoNotOptimize(realize(a, o).pass);
}
BENCHMARK_CAPTURE(BM_Realize, Q8_4_6_12, "Q8", Triple::make(4, 6, 12))->Unit(benchmark::kMillisecond);
BENCHMARK_CAPTURE(BM_Realize, S3_2_3_13, "S3", Triple::make(2, 3, 13))->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
