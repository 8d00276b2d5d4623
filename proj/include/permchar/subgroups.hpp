#pragma once

#include <cstdint>
#include <string>
#include <unordered_map>
#include <vector>

#include "permchar/group.hpp"
#include "permchar/subgroup.hpp"

namespace permchar
{

// Action of the ambient group G on the right cosets Hx of H.
struct CosetAction
{
  PermGroup image;                    // on |G:H| points, images of G's generators
  std::vector<std::uint32_t> coset_of; // ambient element -> coset index
  std::vector<Elem> representatives;  // coset k = H * representatives[k]; coset 0 = H

  // The permutation of cosets induced by g.
  Permutation image_of(const Group &group, Elem g) const;
};

CosetAction coset_action(const Subgroup &h);

// Intersection of all conjugates of h: the kernel of the coset action.
Subgroup core(const Subgroup &h);

Subgroup normalizer(const Subgroup &h);

// G/N realized as the permutation group induced on the cosets of N.
GroupPtr quotient(const Subgroup &n);

struct SubgroupClass
{
  Subgroup representative; // lexicographically smallest conjugate
  std::uint64_t length = 1; // number of conjugates = |G : N_G(H)|
  bool is_maximal = false;
  std::uint64_t normalizer_order = 1;
  // conjugators t with representative.conjugate(t) running over the class
  std::vector<Elem> transversal;
};

struct VecHash
{
  std::size_t operator()(const std::vector<Elem> &v) const noexcept;
};

// All subgroups of G up to conjugacy, built by cyclic extension over the
// trivial group and the perfect-subgroup seeds.
class SubgroupLattice
{
public:
  explicit SubgroupLattice(const GroupPtr &g);

  const std::vector<SubgroupClass> &classes() const { return classes_; }
  std::vector<SubgroupClass> maximal() const;

  // Every conjugate of class c, as sorted element sets.
  const std::vector<std::vector<Elem>> &conjugates(std::size_t c) const { return conjugates_[c]; }

  // Class index of h, by exact lookup of its element set.
  std::size_t class_of(const Subgroup &h) const;

  // Is some conjugate of class `small` contained in class `big`'s representative?
  bool contained_up_to_conjugacy(std::size_t small, std::size_t big) const;

  // Consistency checks run after enumeration; empty when all pass.
  const std::vector<std::string> &self_check_failures() const { return failures_; }

private:
  void run_self_check();

  const Group *group_;
  std::vector<SubgroupClass> classes_;
  std::vector<std::vector<std::vector<Elem>>> conjugates_;
  std::unordered_map<std::vector<Elem>, std::size_t, VecHash> lookup_;
  std::vector<std::string> failures_;
};

// Throws EnumerationIncomplete when completeness cannot be certified.
const SubgroupLattice &all_subgroups(const GroupPtr &g);
std::vector<SubgroupClass> maximal_subgroups(const GroupPtr &g);

Subgroup frattini(const GroupPtr &g);

struct ComplementDecomposition
{
  Subgroup normal;     // minimal normal N
  Subgroup complement; // maximal H with NH = G and N meet H = 1
};
std::vector<ComplementDecomposition> complement_decompositions(const GroupPtr &g);

} // namespace permchar
