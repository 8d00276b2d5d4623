#include "permchar/kernels.hpp"

#include <atomic>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace permchar::kernels
{

namespace
{

std::atomic<int> g_threads{0};

int team_size()
{
#ifdef _OPENMP
  int n = g_threads.load();
  return n > 0 ? n : omp_get_max_threads();
#else
  return 1;
#endif
}

} // namespace

void set_threads(int n) { g_threads.store(n); }

int threads() { return team_size(); }

std::vector<std::uint64_t> structure_constants_serial(const Group &group)
{
  const std::size_t k = group.num_classes();
  const auto &table = group.elements();
  std::vector<std::uint64_t> a(k * k * k, 0);
  for (std::size_t l = 0; l < k; ++l) {
    Elem z = group.classes()[l].representative;
    for (Elem y = 0; y < table.size(); ++y) {
      std::size_t i = group.class_of(y);
      std::size_t j = group.class_of(table.mul(z, table.inverse(y)));
      ++a[(j * k + i) * k + l];
    }
  }
  return a;
}

std::vector<std::uint64_t> structure_constants(const Group &group)
{
  const std::size_t k = group.num_classes();
  const auto &table = group.elements();
  std::vector<std::uint64_t> a(k * k * k, 0);
  const auto n = static_cast<std::int64_t>(table.size());
  // Each l writes a disjoint stride of `a`.
#pragma omp parallel for schedule(dynamic) num_threads(team_size())
  for (std::int64_t l = 0; l < static_cast<std::int64_t>(k); ++l) {
    Elem z = group.classes()[static_cast<std::size_t>(l)].representative;
    for (std::int64_t y = 0; y < n; ++y) {
      auto ye = static_cast<Elem>(y);
      std::size_t i = group.class_of(ye);
      std::size_t j = group.class_of(table.mul(z, table.inverse(ye)));
      ++a[(j * k + i) * k + static_cast<std::size_t>(l)];
    }
  }
  return a;
}

std::vector<std::uint64_t> fixed_points_serial(const Group &group,
                                               std::span<const std::uint32_t> coset_of,
                                               std::span<const Elem> reps,
                                               std::span<const Elem> probes)
{
  const auto &table = group.elements();
  std::vector<std::uint64_t> out(probes.size(), 0);
  for (std::size_t p = 0; p < probes.size(); ++p) {
    for (std::size_t c = 0; c < reps.size(); ++c) {
      if (coset_of[table.mul(reps[c], probes[p])] == c)
        ++out[p];
    }
  }
  return out;
}

std::vector<std::uint64_t> fixed_points(const Group &group, std::span<const std::uint32_t> coset_of,
                                        std::span<const Elem> reps, std::span<const Elem> probes)
{
  const auto &table = group.elements();
  std::vector<std::uint64_t> out(probes.size(), 0);
  const auto np = static_cast<std::int64_t>(probes.size());
  const auto nc = static_cast<std::int64_t>(reps.size());
  for (std::int64_t p = 0; p < np; ++p) {
    std::uint64_t count = 0;
    Elem g = probes[static_cast<std::size_t>(p)];
#pragma omp parallel for reduction(+ : count) num_threads(team_size())
    for (std::int64_t c = 0; c < nc; ++c) {
      if (coset_of[table.mul(reps[static_cast<std::size_t>(c)], g)] == static_cast<std::uint32_t>(c))
        ++count;
    }
    out[static_cast<std::size_t>(p)] = count;
  }
  return out;
}

std::vector<Elem> normalizer_serial(const Group &group, std::span<const Elem> gens,
                                    const std::vector<bool> &member)
{
  const auto &table = group.elements();
  std::vector<Elem> out;
  for (Elem g = 0; g < table.size(); ++g) {
    bool ok = true;
    for (Elem h : gens) {
      if (!member[table.conj(h, g)]) {
        ok = false;
        break;
      }
    }
    if (ok)
      out.push_back(g);
  }
  return out;
}

std::vector<Elem> normalizer(const Group &group, std::span<const Elem> gens,
                             const std::vector<bool> &member)
{
  const auto &table = group.elements();
  const auto n = static_cast<std::int64_t>(table.size());
  std::vector<char> flag(table.size(), 0);
#pragma omp parallel for schedule(static) num_threads(team_size())
  for (std::int64_t gi = 0; gi < n; ++gi) {
    auto g = static_cast<Elem>(gi);
    bool ok = true;
    for (Elem h : gens) {
      if (!member[table.conj(h, g)]) {
        ok = false;
        break;
      }
    }
    flag[g] = ok ? 1 : 0;
  }
  std::vector<Elem> out;
  for (Elem g = 0; g < table.size(); ++g) {
    if (flag[g])
      out.push_back(g);
  }
  return out;
}

} // namespace permchar::kernels
