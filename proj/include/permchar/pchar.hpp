#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <vector>

#include "permchar/chartable.hpp"
#include "permchar/primes.hpp"
#include "permchar/subgroups.hpp"

namespace permchar
{

struct Constituent
{
  std::size_t row = 0;
  std::uint64_t degree = 0;
  std::uint64_t multiplicity = 0;
};

struct PCharEntry
{
  std::size_t subgroup_class = 0; // index into the subgroup lattice
  Subgroup maximal;
  std::uint64_t index = 0;
  std::vector<std::uint64_t> index_primes;
  ClassFunction perm_char;
  std::vector<Constituent> constituents; // nonzero multiplicities, by row
};

struct MonomialWitness
{
  Subgroup subgroup;
  ClassFunction lambda; // linear character of subgroup.as_group()
};

struct PCharReport
{
  GroupPtr group;
  std::optional<PrimeSet> pi; // set for a P_pi report
  std::vector<PCharEntry> entries;
  std::vector<std::size_t> irr_p; // table rows, ascending
  std::vector<std::uint64_t> cd_p;
  // Present only when requested; nullopt value = nonmonomial.
  std::map<std::size_t, std::optional<MonomialWitness>> monomial;
};

// Fixed-point character of the action of G on the right cosets of m.
ClassFunction permutation_character(const Subgroup &m);

PCharReport p_characters(const GroupPtr &g, bool with_monomial = false);
// Restricted to maximal subgroups whose index is a pi-number.
PCharReport p_pi_characters(const GroupPtr &g, const PrimeSet &pi, bool with_monomial = false);

// A subgroup H of index chi(1) and a linear lambda of H with lambda^G = chi,
// searched one subgroup class at a time in canonical order.
std::optional<MonomialWitness> is_monomial(const GroupPtr &g, std::size_t row);

// Stabilizer of lambda (a class function of n.as_group()) under conjugation.
Subgroup inertia_group(const Subgroup &n, const ClassFunction &lambda);

} // namespace permchar
