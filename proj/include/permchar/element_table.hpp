#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "permchar/perm_group.hpp"

namespace permchar
{

using Elem = std::uint32_t;

// Explicit list of all group elements, sorted lexicographically by image
// sequence, indexed by their images of a base. Products only touch the base
// points, so mul() is O(base length) plus a hash probe.
class ElementTable
{
public:
  explicit ElementTable(const PermGroup &group);

  std::size_t size() const { return elements_.size(); }
  const Permutation &operator[](Elem i) const { return elements_[i]; }
  const std::vector<Permutation> &elements() const { return elements_; }

  Elem identity() const { return identity_; }
  std::optional<Elem> find(const Permutation &g) const;
  Elem index_of(const Permutation &g) const;

  // a then b (right action, matching Permutation::operator*).
  Elem mul(Elem a, Elem b) const;
  Elem inverse(Elem a) const { return inverse_[a]; }
  // b^-1 a b
  Elem conj(Elem a, Elem b) const { return mul(mul(inverse_[b], a), b); }
  Elem pow(Elem a, std::int64_t e) const;
  std::uint32_t order(Elem a) const { return order_[a]; }

private:
  std::uint64_t hash_images(const Point *images) const;
  std::optional<Elem> lookup(const Point *images) const;

  std::vector<Point> base_;
  std::vector<Permutation> elements_;
  std::vector<Elem> inverse_;
  std::vector<std::uint32_t> order_;
  std::vector<std::uint32_t> slots_; // open addressing, 0 = empty, else index+1
  std::uint64_t mask_ = 0;
  Elem identity_ = 0;
};

} // namespace permchar
