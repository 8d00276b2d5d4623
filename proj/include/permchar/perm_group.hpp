#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "permchar/permutation.hpp"

namespace permchar
{

// One level of a stabilizer chain: the orbit of base_point under the
// stabilizer of all earlier base points, with a transversal.
struct ChainLevel
{
  Point base_point = 0;
  std::vector<Permutation> strong_generators;
  std::vector<Point> orbit;
  std::vector<std::int32_t> orbit_position; // -1 when not in orbit
  std::vector<Permutation> transversal;     // base_point^transversal[k] == orbit[k]
  std::vector<Permutation> transversal_inv;
};

// Permutation group given by generators, with a deterministic
// Schreier-Sims stabilizer chain (base points are smallest moved points).
class PermGroup
{
public:
  PermGroup() : PermGroup(1, {}) {}
  PermGroup(std::size_t degree, std::vector<Permutation> generators);

  // Generators in cycle notation; an empty list gives the trivial group.
  static PermGroup from_cycle_words(std::size_t degree, const std::vector<std::string> &words);

  std::size_t degree() const { return degree_; }
  const std::vector<Permutation> &generators() const { return generators_; }
  std::uint64_t order() const { return order_; }
  const std::vector<ChainLevel> &chain() const { return levels_; }
  std::vector<Point> base() const;

  bool contains(const Permutation &g) const;

  // All elements, in chain order (not sorted).
  std::vector<Permutation> enumerate() const;

  // Sifts g through the chain starting at `from`; returns the residue and
  // the level where sifting stopped (chain().size() when it went through).
  std::pair<Permutation, std::size_t> sift(Permutation g, std::size_t from = 0) const;

private:
  void build();
  void rebuild_orbit(ChainLevel &level) const;

  std::size_t degree_;
  std::vector<Permutation> generators_;
  std::vector<ChainLevel> levels_;
  std::uint64_t order_ = 1;
};

} // namespace permchar
