#include "permchar/group.hpp"

#include <algorithm>
#include <numeric>
#include <tuple>

#include "permchar/error.hpp"

namespace permchar
{

namespace
{

PermGroup checked(PermGroup perm, std::uint64_t bound)
{
  if (perm.order() > bound)
    throw BoundExceeded("group order " + std::to_string(perm.order()) +
                        " exceeds the configured bound " + std::to_string(bound));
  return perm;
}

} // namespace

GroupPtr Group::create(PermGroup perm, std::string name, SeedSet seeds, std::uint64_t order_bound)
{
  return GroupPtr(new Group(std::move(perm), std::move(name), std::move(seeds), order_bound));
}

Group::Group(PermGroup perm, std::string name, SeedSet seeds, std::uint64_t order_bound)
  : name_(std::move(name)),
    perm_(checked(std::move(perm), order_bound)),
    seeds_(std::move(seeds)),
    order_bound_(order_bound),
    elements_(perm_)
{
  for (const auto &g : perm_.generators())
    generator_elems_.push_back(elements_.index_of(g));

  const std::size_t n = elements_.size();
  constexpr std::size_t kUnset = static_cast<std::size_t>(-1);
  std::vector<std::size_t> orbit_id(n, kUnset);
  std::vector<std::vector<Elem>> orbits;

  for (Elem x = 0; x < n; ++x) {
    if (orbit_id[x] != kUnset)
      continue;
    std::vector<Elem> orbit{x};
    orbit_id[x] = orbits.size();
    for (std::size_t k = 0; k < orbit.size(); ++k) {
      for (Elem g : generator_elems_) {
        Elem y = elements_.conj(orbit[k], g);
        if (orbit_id[y] == kUnset) {
          orbit_id[y] = orbits.size();
          orbit.push_back(y);
        }
      }
    }
    std::sort(orbit.begin(), orbit.end());
    orbits.push_back(std::move(orbit));
  }

  std::vector<std::size_t> perm_idx(orbits.size());
  std::iota(perm_idx.begin(), perm_idx.end(), std::size_t{0});
  std::sort(perm_idx.begin(), perm_idx.end(), [&](std::size_t a, std::size_t b) {
    auto key = [&](std::size_t o) {
      return std::make_tuple(elements_.order(orbits[o].front()), orbits[o].size(),
                             orbits[o].front());
    };
    return key(a) < key(b);
  });

  class_of_.assign(n, 0);
  for (std::size_t c = 0; c < perm_idx.size(); ++c) {
    auto &orbit = orbits[perm_idx[c]];
    ConjClass cls;
    cls.representative = orbit.front();
    cls.size = orbit.size();
    cls.element_order = elements_.order(orbit.front());
    cls.index = c;
    cls.centralizer_order = n / orbit.size();
    for (Elem e : orbit)
      class_of_[e] = c;
    exponent_ = std::lcm(exponent_, std::uint64_t{cls.element_order});
    classes_.push_back(cls);
    members_.push_back(std::move(orbit));
  }
}

std::size_t Group::inverse_class(std::size_t c) const
{
  return class_of_[elements_.inverse(classes_[c].representative)];
}

std::size_t Group::power_class(std::size_t c, std::int64_t e) const
{
  return class_of_[elements_.pow(classes_[c].representative, e)];
}

} // namespace permchar
