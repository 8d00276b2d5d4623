#include "permchar/element_table.hpp"

#include <algorithm>
#include <stdexcept>

namespace permchar
{

ElementTable::ElementTable(const PermGroup &group) : base_(group.base())
{
  elements_ = group.enumerate();
  std::sort(elements_.begin(), elements_.end());

  std::uint64_t cap = 1;
  while (cap < 2 * elements_.size() + 2)
    cap <<= 1u;
  slots_.assign(cap, 0);
  mask_ = cap - 1;

  std::vector<Point> images(base_.size());
  for (std::size_t i = 0; i < elements_.size(); ++i) {
    for (std::size_t k = 0; k < base_.size(); ++k)
      images[k] = elements_[i][base_[k]];
    std::uint64_t h = hash_images(images.data()) & mask_;
    while (slots_[h])
      h = (h + 1) & mask_;
    slots_[h] = static_cast<std::uint32_t>(i + 1);
  }

  identity_ = index_of(Permutation(group.degree()));
  inverse_.resize(elements_.size());
  order_.resize(elements_.size());
  for (std::size_t i = 0; i < elements_.size(); ++i) {
    inverse_[i] = index_of(elements_[i].inverse());
    order_[i] = static_cast<std::uint32_t>(elements_[i].order());
  }
}

std::uint64_t ElementTable::hash_images(const Point *images) const
{
  std::uint64_t h = 0x9e3779b97f4a7c15ull;
  for (std::size_t k = 0; k < base_.size(); ++k) {
    h ^= images[k] + 0x9e3779b97f4a7c15ull + (h << 6) + (h >> 2);
    h *= 0xbf58476d1ce4e5b9ull;
  }
  return h ^ (h >> 31);
}

std::optional<Elem> ElementTable::lookup(const Point *images) const
{
  std::uint64_t h = hash_images(images) & mask_;
  while (slots_[h]) {
    Elem idx = slots_[h] - 1;
    const auto &e = elements_[idx];
    bool match = true;
    for (std::size_t k = 0; k < base_.size(); ++k) {
      if (e[base_[k]] != images[k]) {
        match = false;
        break;
      }
    }
    if (match)
      return idx;
    h = (h + 1) & mask_;
  }
  return std::nullopt;
}

std::optional<Elem> ElementTable::find(const Permutation &g) const
{
  if (elements_.empty() || g.degree() != elements_.front().degree())
    return std::nullopt;
  std::vector<Point> images(base_.size());
  for (std::size_t k = 0; k < base_.size(); ++k)
    images[k] = g[base_[k]];
  auto idx = lookup(images.data());
  // Base images identify an element of the group; confirm full equality
  // so non-members are rejected.
  if (idx && elements_[*idx] == g)
    return idx;
  return std::nullopt;
}

Elem ElementTable::index_of(const Permutation &g) const
{
  auto idx = find(g);
  if (!idx)
    throw std::invalid_argument("permutation " + g.to_cycles() + " is not a group element");
  return *idx;
}

Elem ElementTable::mul(Elem a, Elem b) const
{
  constexpr std::size_t kInline = 32;
  Point buf[kInline];
  std::vector<Point> heap;
  Point *images = buf;
  if (base_.size() > kInline) {
    heap.resize(base_.size());
    images = heap.data();
  }
  const auto &pa = elements_[a];
  const auto &pb = elements_[b];
  for (std::size_t k = 0; k < base_.size(); ++k)
    images[k] = pb[pa[base_[k]]];
  auto idx = lookup(images);
  return *idx;
}

Elem ElementTable::pow(Elem a, std::int64_t e) const
{
  std::int64_t ord = order_[a];
  e %= ord;
  if (e < 0)
    e += ord;
  Elem res = identity_;
  Elem base = a;
  auto n = static_cast<std::uint64_t>(e);
  while (n) {
    if (n & 1u)
      res = mul(res, base);
    base = mul(base, base);
    n >>= 1u;
  }
  return res;
}

} // namespace permchar
