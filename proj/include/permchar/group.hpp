#pragma once

#include <cstdint>
#include <memory>
#include <string>
#include <vector>

#include "permchar/element_table.hpp"
#include "permchar/lazy.hpp"
#include "permchar/perm_group.hpp"

namespace permchar
{

class Group;
class Subgroup;
class CharacterTable;
class SubgroupLattice;

using GroupPtr = std::shared_ptr<const Group>;

struct ConjClass
{
  Elem representative = 0; // lexicographically smallest member
  std::uint64_t size = 1;
  std::uint32_t element_order = 1;
  std::size_t index = 0;
  std::uint64_t centralizer_order = 1;
};

// Generators of perfect subgroups handed to subgroup enumeration. When
// `complete` is set, the supplier vouches that every perfect subgroup of
// the group is conjugate to one of these (or trivial, or the whole group).
struct SeedSet
{
  std::vector<std::vector<Permutation>> subgroups;
  bool complete = false;
};

// A finite permutation group small enough to enumerate, with its elements
// and conjugacy classes. Immutable after construction except for derived
// data computed once on demand; safe to share across threads.
class Group : public std::enable_shared_from_this<Group>
{
public:
  static constexpr std::uint64_t kDefaultOrderBound = 10000;

  static GroupPtr create(PermGroup perm, std::string name = {}, SeedSet seeds = {},
                         std::uint64_t order_bound = kDefaultOrderBound);

  const std::string &name() const { return name_; }
  const PermGroup &perm() const { return perm_; }
  std::uint64_t order() const { return perm_.order(); }
  std::size_t degree() const { return perm_.degree(); }
  std::uint64_t order_bound() const { return order_bound_; }
  const SeedSet &seeds() const { return seeds_; }

  const ElementTable &elements() const { return elements_; }
  const Permutation &element(Elem e) const { return elements_[e]; }
  // Generators as element indices.
  const std::vector<Elem> &generator_elems() const { return generator_elems_; }

  const std::vector<ConjClass> &classes() const { return classes_; }
  std::size_t num_classes() const { return classes_.size(); }
  std::size_t class_of(Elem e) const { return class_of_[e]; }
  const std::vector<Elem> &class_members(std::size_t c) const { return members_[c]; }
  std::size_t inverse_class(std::size_t c) const;
  std::size_t power_class(std::size_t c, std::int64_t e) const;
  std::uint64_t exponent() const { return exponent_; }

  GroupPtr self() const { return shared_from_this(); }

  // Derived data, computed once. Defined in chartable.cpp, subgroups.cpp
  // and structure.cpp respectively.
  const CharacterTable &character_table() const;
  const SubgroupLattice &subgroup_lattice() const;
  const std::vector<Subgroup> &normal_subgroups() const;

private:
  Group(PermGroup perm, std::string name, SeedSet seeds, std::uint64_t order_bound);

  std::string name_;
  PermGroup perm_;
  SeedSet seeds_;
  std::uint64_t order_bound_;
  ElementTable elements_;
  std::vector<Elem> generator_elems_;
  std::vector<ConjClass> classes_;
  std::vector<std::size_t> class_of_;
  std::vector<std::vector<Elem>> members_;
  std::uint64_t exponent_ = 1;

  Lazy<std::shared_ptr<const CharacterTable>> table_;
  Lazy<std::shared_ptr<const SubgroupLattice>> lattice_;
  Lazy<std::shared_ptr<const std::vector<Subgroup>>> normals_;
};

} // namespace permchar
