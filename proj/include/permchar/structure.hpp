#pragma once

#include <vector>

#include "permchar/group.hpp"
#include "permchar/primes.hpp"
#include "permchar/subgroup.hpp"

// Characteristic series and pi-structure predicates.
namespace permchar
{

Subgroup derived_subgroup(const Subgroup &h);
std::vector<Subgroup> derived_series(const GroupPtr &g);
bool is_solvable(const GroupPtr &g);
bool is_solvable(const Subgroup &h);
// Last term of the derived series.
Subgroup solvable_residual(const Subgroup &h);

std::vector<Subgroup> lower_central_series(const GroupPtr &g);
bool is_nilpotent(const GroupPtr &g);
bool is_abelian(const GroupPtr &g);

// Every normal subgroup (including 1 and G), sorted by order and then by
// element set.
const std::vector<Subgroup> &normal_subgroups(const GroupPtr &g);
std::vector<Subgroup> minimal_normal_subgroups(const GroupPtr &g);

// O_{pi'}(G): the largest normal pi'-subgroup.
Subgroup o_pi_prime(const GroupPtr &g, const PrimeSet &pi);

struct NormalComplement
{
  bool exists = false;
  // Subgroup generated by the pi'-parts of all elements; normal. It is a
  // normal pi-complement exactly when exists is true.
  Subgroup witness;
};
NormalComplement normal_pi_complement(const GroupPtr &g, const PrimeSet &pi);
bool has_normal_pi_complement(const GroupPtr &g, const PrimeSet &pi);

// Every chief factor is a pi-group or a pi'-group.
bool is_pi_separable(const GroupPtr &g, const PrimeSet &pi);
// pi-separable with every pi-chief factor solvable (elementary abelian).
bool is_pi_solvable(const GroupPtr &g, const PrimeSet &pi);

} // namespace permchar
