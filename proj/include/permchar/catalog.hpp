#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "permchar/group.hpp"

// Built-in groups, addressed by spec strings:
//   sym:n  alt:n  cyc:n  dih:n (order n)  q8  sl23  psl2:q
//   prod:a,b[,c]  (direct product of up to three non-product specs)
//   file:path     (group file, see parse_group_text)
namespace permchar
{

// Throws std::invalid_argument for an unknown or unsupported spec,
// ParseError for a bad group file and BoundExceeded above `order_bound`.
GroupPtr build_group(const std::string &spec,
                     std::uint64_t order_bound = Group::kDefaultOrderBound);

// Just the permutation group, without seeds or element tables.
PermGroup build_perm_group(const std::string &spec);

// Group file: first line "degree <n>", then one generator per line in
// cycle notation. Blank lines are ignored.
PermGroup parse_group_text(std::string_view text);
PermGroup parse_group_file(const std::string &path);
std::string render_group_text(const PermGroup &g);

// Perfect subgroups found by a deterministic search for (2,3,5)-generated
// subgroups, plus the derived subgroup when it is perfect. `complete` is
// left false; the caller decides whether the list is exhaustive.
SeedSet search_perfect_seeds(const Group &g);

// Nonsolvable groups shipped with the catalog.
std::vector<std::string> shipped_nonsolvable();

// Every base spec and every product of two or three base specs of order at
// most max_order, in a fixed order, followed by shipped_nonsolvable().
std::vector<std::string> full_catalog(std::uint64_t max_order = 60);

} // namespace permchar
