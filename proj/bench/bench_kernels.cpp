#include <benchmark/benchmark.h>

#include "permchar/catalog.hpp"
#include "permchar/kernels.hpp"
#include "permchar/subgroups.hpp"

using namespace permchar;

namespace
{

const char *const kSpecs[] = {"alt:5", "psl2:8", "psl2:13", "psl2:27"};

const GroupPtr &bench_group(std::size_t i)
{
  static std::vector<GroupPtr> groups(std::size(kSpecs));
  if (!groups[i])
    groups[i] = build_group(kSpecs[i]);
  return groups[i];
}

template <bool Parallel>
void structure_constants(benchmark::State &state)
{
  const auto &g = bench_group(state.range(0));
  kernels::set_threads(static_cast<int>(state.range(1)));
  for (auto _ : state) {
    auto a = Parallel ? kernels::structure_constants(*g) : kernels::structure_constants_serial(*g);
    benchmark::DoNotOptimize(a.data());
  }
  state.SetLabel(kSpecs[state.range(0)]);
}

template <bool Parallel>
void fixed_points(benchmark::State &state)
{
  const auto &g = bench_group(state.range(0));
  kernels::set_threads(static_cast<int>(state.range(1)));
  auto m = maximal_subgroups(g).front().representative;
  auto action = coset_action(m);
  std::vector<Elem> probes(g->order());
  for (Elem e = 0; e < g->order(); ++e)
    probes[e] = e;
  for (auto _ : state) {
    auto f = Parallel ? kernels::fixed_points(*g, action.coset_of, action.representatives, probes)
                      : kernels::fixed_points_serial(*g, action.coset_of, action.representatives, probes);
    benchmark::DoNotOptimize(f.data());
  }
  state.SetLabel(kSpecs[state.range(0)]);
}

template <bool Parallel>
void normalizer(benchmark::State &state)
{
  const auto &g = bench_group(state.range(0));
  kernels::set_threads(static_cast<int>(state.range(1)));
  const auto h = maximal_subgroups(g).back().representative;
  std::vector<bool> member(g->order(), false);
  for (auto e : h.elements())
    member[e] = true;
  for (auto _ : state) {
    auto n = Parallel ? kernels::normalizer(*g, h.generators(), member)
                      : kernels::normalizer_serial(*g, h.generators(), member);
    benchmark::DoNotOptimize(n.data());
  }
  state.SetLabel(kSpecs[state.range(0)]);
}

// Serial references ignore the thread count; run them once per group.
void serial_args(benchmark::internal::Benchmark *b)
{
  for (long g = 0; g < static_cast<long>(std::size(kSpecs)); ++g)
    b->Args({g, 1});
  b->Unit(benchmark::kMillisecond);
}

void parallel_args(benchmark::internal::Benchmark *b)
{
  for (long g = 0; g < static_cast<long>(std::size(kSpecs)); ++g)
    for (long t : {1, 2, 4})
      b->Args({g, t});
  b->Unit(benchmark::kMillisecond);
}

} // namespace

BENCHMARK(structure_constants<false>)->Apply(serial_args);
BENCHMARK(structure_constants<true>)->Apply(parallel_args);
BENCHMARK(fixed_points<false>)->Apply(serial_args);
BENCHMARK(fixed_points<true>)->Apply(parallel_args);
BENCHMARK(normalizer<false>)->Apply(serial_args);
BENCHMARK(normalizer<true>)->Apply(parallel_args);

BENCHMARK_MAIN();
