#include <benchmark/benchmark.h>

#include <gitfan/chowring.hpp>
#include <gitfan/polycone.hpp>
#include <gitfan/stability.hpp>

#include <random>

using namespace gitfan;

namespace {

std::vector<LatVec> random_rays(std::size_t rank, std::size_t count, unsigned seed) {
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<long> entry(-5, 5);
  std::vector<LatVec> out(count);
  for (auto& v : out) {
    for (std::size_t i = 0; i < rank; ++i) v.push_back(Integer(entry(rng)));
  }
  return out;
}

std::pair<GroupData, WeightSystem> grassmannian(unsigned k, unsigned n) {
  Summand s;
  s.kind = SummandKind::std_rep;
  s.multiplicity = n;
  return build_group(GroupSpec{{k}, 0}, ModuleSpec{{s}});
}

void BM_DoubleDescription(benchmark::State& state) {
  const auto rank = static_cast<std::size_t>(state.range(0));
  const auto rays = random_rays(rank, 3 * rank, 7);
  for (auto _ : state) {
    benchmark::DoNotOptimize(RatCone::from_rays(rank, rays));
  }
}
BENCHMARK(BM_DoubleDescription)->Arg(2)->Arg(3)->Arg(4)->Arg(5);

void BM_TorusFan(benchmark::State& state) {
  const auto rank = static_cast<std::size_t>(state.range(0));
  auto [gd, ws] = torus_action(random_rays(rank, rank + 3, 11));
  for (auto _ : state) {
    benchmark::DoNotOptimize(git_fan(gd, ws));
  }
}
BENCHMARK(BM_TorusFan)->Arg(2)->Arg(3)->Unit(benchmark::kMillisecond);

void BM_Reynolds(benchmark::State& state) {
  auto [gd, ws] = grassmannian(static_cast<unsigned>(state.range(0)), 1);
  Poly f = Poly::variable(gd.rank(), 0).pow(6) + Poly::variable(gd.rank(), 1).pow(5);
  for (auto _ : state) {
    benchmark::DoNotOptimize(reynolds_divided(gd, f));
  }
}
BENCHMARK(BM_Reynolds)->Arg(2)->Arg(3)->Arg(4);

void BM_GrassmannianBetti(benchmark::State& state) {
  auto [gd, ws] = grassmannian(2, static_cast<unsigned>(state.range(0)));
  const GITFan fan = git_fan(gd, ws);
  const Chamber ch = chamber_of(gd, ws, fan, gd.character(make_vec({1})));
  for (auto _ : state) {
    benchmark::DoNotOptimize(betti_numbers(chow_presentation(gd, ws, ch)));
  }
}
BENCHMARK(BM_GrassmannianBetti)->Arg(4)->Arg(5)->Arg(6)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
