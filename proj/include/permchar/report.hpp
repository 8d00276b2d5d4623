#pragma once

#include <json.hpp>

#include <string>
#include <vector>

#include "permchar/chartable.hpp"
#include "permchar/pchar.hpp"
#include "permchar/subgroups.hpp"

// Text and JSON renderings. Both carry the same data and are byte-stable.
namespace permchar::report
{

using nlohmann::json;

json subgroup_json(const Subgroup &h);
json values_json(const ClassFunction &f);
json classes_json(const Group &g);

json table_json(const CharacterTable &t);
std::string table_text(const CharacterTable &t);

json maximal_json(const GroupPtr &g, const std::vector<SubgroupClass> &maximal);
std::string maximal_text(const GroupPtr &g, const std::vector<SubgroupClass> &maximal);

json pchars_json(const PCharReport &r);
std::string pchars_text(const PCharReport &r);

json cdp_json(const PCharReport &r);
std::string cdp_text(const PCharReport &r);
std::string degree_set_text(const std::vector<std::uint64_t> &degrees);

json witness_json(const MonomialWitness &w);
// Requires r.monomial to be filled in.
json monomial_json(const PCharReport &r);
std::string monomial_text(const PCharReport &r);

} // namespace permchar::report
