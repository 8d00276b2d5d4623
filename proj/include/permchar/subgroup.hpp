#pragma once

#include <cstdint>
#include <memory>
#include <span>
#include <vector>

#include "permchar/group.hpp"

namespace permchar
{

// A subgroup of an enumerated ambient group, stored as its sorted set of
// ambient element indices. Cheap to copy (shared immutable data).
class Subgroup
{
public:
  Subgroup() = default;

  // `elements` must be a sorted subgroup; generators are chosen greedily
  // when not supplied.
  static Subgroup from_elements(GroupPtr ambient, std::vector<Elem> elements,
                                std::vector<Elem> generators = {});
  static Subgroup generated(GroupPtr ambient, std::vector<Elem> generators);
  static Subgroup trivial(GroupPtr ambient);
  static Subgroup whole(GroupPtr ambient);

  bool valid() const { return d_ != nullptr; }
  GroupPtr ambient() const;
  // Copies that do not (unowned) or do (owned) keep the ambient group alive.
  // Subgroups cached inside their own ambient group are stored unowned, since
  // an owning pointer there would be a reference cycle.
  Subgroup unowned() const;
  Subgroup owned() const;
  const std::vector<Elem> &elements() const;
  const std::vector<Elem> &generators() const;
  std::vector<Permutation> generator_perms() const;

  std::uint64_t order() const { return elements().size(); }
  std::uint64_t index() const;
  bool contains(Elem e) const;
  bool contains(const Subgroup &other) const;
  bool is_trivial() const { return order() == 1; }
  bool is_whole() const { return index() == 1; }
  bool is_normal() const;

  // g^-1 H g
  Subgroup conjugate(Elem g) const;

  // The subgroup as a group in its own right. Its element table lists the
  // same permutations in the same (lexicographic) order, so local index i
  // corresponds to elements()[i].
  GroupPtr as_group() const;
  Elem to_ambient(Elem local) const { return elements()[local]; }
  Elem to_local(Elem ambient_elem) const;

  // Class of the ambient group containing each class of as_group().
  const std::vector<std::size_t> &fusion() const;

  friend bool operator==(const Subgroup &a, const Subgroup &b);

private:
  struct Data;
  std::shared_ptr<const Data> d_;
  GroupPtr owner_;
};

// Sorted elements of the subgroup generated by `gens`.
std::vector<Elem> closure(const Group &group, std::span<const Elem> gens);

// Closure of `gens` under conjugation by `conjugators`, as a sorted element set;
// `gens_out` receives a generating set of the result.
std::vector<Elem> normal_closure(const Group &group, std::span<const Elem> gens,
                                 std::span<const Elem> conjugators,
                                 std::vector<Elem> *gens_out = nullptr);

std::vector<Elem> greedy_generators(const Group &group, const std::vector<Elem> &sorted_set);

Subgroup intersection(const Subgroup &a, const Subgroup &b);
Subgroup join(const Subgroup &a, const Subgroup &b);

} // namespace permchar
