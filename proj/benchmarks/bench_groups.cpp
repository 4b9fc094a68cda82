#include <benchmark/benchmark.h>

#include "residua/constants.hpp"
#include "residua/oracle.hpp"
#include "residua/res_rad.hpp"

using namespace residua;

static void BM_SchreierSimsSymmetric(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  const Group s = Group::symmetric(n);
  for (auto _ : state) {
    Group g = Group::generate(s.generators(), n);
    benchmark::DoNotOptimize(g.order());
  }
}
BENCHMARK(BM_SchreierSimsSymmetric)->Arg(8)->Arg(16)->Arg(32);

static void BM_WreathProduct(benchmark::State& state) {
  const Group s5 = Group::symmetric(5);
  const Group c2 = Group::symmetric(2);
  for (auto _ : state) benchmark::DoNotOptimize(wreath_product(s5, c2).order());
}
BENCHMARK(BM_WreathProduct);

static void BM_SubgroupLattice(benchmark::State& state) {
  const Group g = Group::symmetric(static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) {
    Oracle o(g);
    benchmark::DoNotOptimize(o.all_subgroups().subgroups.size());
  }
}
BENCHMARK(BM_SubgroupLattice)->Arg(4)->Arg(5)->Unit(benchmark::kMillisecond);

static void BM_NormalSubgroups(benchmark::State& state) {
  const Group g = wreath_product(Group::symmetric(4), Group::symmetric(2));
  for (auto _ : state) {
    Oracle o(g);
    benchmark::DoNotOptimize(o.normal_subgroups().size());
  }
}
BENCHMARK(BM_NormalSubgroups)->Unit(benchmark::kMillisecond);

static void BM_PolyResidualWreath(benchmark::State& state) {
  const Group w = wreath_product(Group::symmetric(5), Group::symmetric(2));
  for (auto _ : state) benchmark::DoNotOptimize(poly_residual(w, GroupClass::nilpotent()).subgroup.order());
}
BENCHMARK(BM_PolyResidualWreath)->Unit(benchmark::kMillisecond);

static void BM_LambdaGamma(benchmark::State& state) {
  const SimpleTable& table = bundled_simple_table();
  const GroupClass y = GroupClass::parse("poly:nilpotent");
  for (auto _ : state) benchmark::DoNotOptimize(compute_lambda_gamma(y, RadicalValue{24, 3}, table).gamma);
}
BENCHMARK(BM_LambdaGamma)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
