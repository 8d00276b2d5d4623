#include "permchar/report.hpp"

#include <algorithm>
#include <sstream>

namespace permchar::report
{

json subgroup_json(const Subgroup &h)
{
  json gens = json::array();
  for (const auto &p : h.generator_perms())
    gens.push_back(p.to_cycles());
  return {{"order", h.order()}, {"index", h.index()}, {"generators", gens}};
}

json values_json(const ClassFunction &f)
{
  json v = json::array();
  for (const auto &x : f.values())
    v.push_back(x.to_string());
  return v;
}

json classes_json(const Group &g)
{
  json out = json::array();
  for (const auto &c : g.classes()) {
    out.push_back({{"size", c.size},
                   {"element_order", c.element_order},
                   {"representative", g.element(c.representative).to_cycles()}});
  }
  return out;
}

json table_json(const CharacterTable &t)
{
  const Group &g = *t.group();
  json rows = json::array();
  for (std::size_t r = 0; r < t.size(); ++r) {
    json vals = json::array();
    for (const auto &x : t.values(r))
      vals.push_back(x.to_string());
    rows.push_back({{"degree", t.degree(r)}, {"values", vals}});
  }
  return {{"group", g.name()},
          {"order", g.order()},
          {"degree", g.degree()},
          {"prime", t.prime()},
          {"classes", classes_json(g)},
          {"characters", rows}};
}

namespace
{

std::string join(const std::vector<std::string> &parts, const std::string &sep)
{
  std::string out;
  for (std::size_t i = 0; i < parts.size(); ++i) {
    if (i)
      out += sep;
    out += parts[i];
  }
  return out;
}

std::string generators_text(const Subgroup &h)
{
  std::vector<std::string> gens;
  for (const auto &p : h.generator_perms())
    gens.push_back(p.to_cycles());
  return gens.empty() ? "()" : join(gens, ", ");
}

std::string class_labels(const Group &g)
{
  std::vector<std::size_t> seen(g.exponent() + 1, 0);
  std::vector<std::string> labels;
  for (const auto &c : g.classes()) {
    std::string label = std::to_string(c.element_order);
    std::size_t k = seen[c.element_order]++;
    // 1a, 2a, 2b, ... in class order
    std::string suffix;
    do {
      suffix.insert(suffix.begin(), static_cast<char>('a' + k % 26));
      k /= 26;
    } while (k-- > 0);
    labels.push_back(label + suffix);
  }
  return join(labels, " ");
}

} // namespace

std::string table_text(const CharacterTable &t)
{
  const Group &g = *t.group();
  std::ostringstream os;
  os << "group " << g.name() << "\n";
  os << "order " << g.order() << "\n";
  os << "classes " << g.num_classes() << ": " << class_labels(g) << "\n";
  std::vector<std::string> sizes, orders;
  for (const auto &c : g.classes()) {
    sizes.push_back(std::to_string(c.size));
    orders.push_back(std::to_string(c.element_order));
  }
  os << "sizes " << join(sizes, " ") << "\n";
  os << "element orders " << join(orders, " ") << "\n";
  for (std::size_t r = 0; r < t.size(); ++r) {
    std::vector<std::string> vals;
    for (const auto &x : t.values(r))
      vals.push_back(x.to_string());
    os << "X." << r + 1 << ": " << join(vals, " | ") << "\n";
  }
  return os.str();
}

json maximal_json(const GroupPtr &g, const std::vector<SubgroupClass> &maximal)
{
  json list = json::array();
  for (const auto &m : maximal) {
    json entry = subgroup_json(m.representative);
    entry["class_length"] = m.length;
    list.push_back(entry);
  }
  return {{"group", g->name()}, {"order", g->order()}, {"maximal", list}};
}

std::string maximal_text(const GroupPtr &g, const std::vector<SubgroupClass> &maximal)
{
  std::ostringstream os;
  os << "group " << g->name() << " order " << g->order() << "\n";
  os << "maximal subgroup classes " << maximal.size() << "\n";
  for (const auto &m : maximal) {
    os << "index " << m.representative.index() << " order " << m.representative.order()
       << " conjugates " << m.length << " generators " << generators_text(m.representative)
       << "\n";
  }
  return os.str();
}

std::string degree_set_text(const std::vector<std::uint64_t> &degrees)
{
  std::vector<std::string> parts;
  for (auto d : degrees)
    parts.push_back(std::to_string(d));
  return "{" + join(parts, ",") + "}";
}

json witness_json(const MonomialWitness &w)
{
  return {{"subgroup", subgroup_json(w.subgroup)}, {"lambda", values_json(w.lambda)}};
}

json pchars_json(const PCharReport &r)
{
  const CharacterTable &t = character_table(r.group);
  json entries = json::array();
  for (const auto &e : r.entries) {
    json cons = json::array();
    for (const auto &c : e.constituents)
      cons.push_back({{"row", c.row}, {"degree", c.degree}, {"multiplicity", c.multiplicity}});
    json sub = subgroup_json(e.maximal);
    entries.push_back({{"maximal", sub},
                       {"index_primes", e.index_primes},
                       {"permutation_character", values_json(e.perm_char)},
                       {"constituents", cons}});
  }
  json degrees = json::array();
  for (auto row : r.irr_p)
    degrees.push_back(t.degree(row));
  json out = {{"group", r.group->name()},
              {"order", r.group->order()},
              {"entries", entries},
              {"irr_p", r.irr_p},
              {"irr_p_degrees", degrees},
              {"cd_p", r.cd_p},
              {"num_irreducibles", t.size()}};
  out["pi"] = r.pi ? json(r.pi->primes()) : json(nullptr);
  if (!r.monomial.empty())
    out["monomial"] = monomial_json(r)["verdicts"];
  return out;
}

std::string pchars_text(const PCharReport &r)
{
  const CharacterTable &t = character_table(r.group);
  std::ostringstream os;
  os << "group " << r.group->name() << " order " << r.group->order() << "\n";
  if (r.pi)
    os << "pi " << r.pi->to_string() << "\n";
  for (const auto &e : r.entries) {
    os << "maximal index " << e.index << " order " << e.maximal.order() << " generators "
       << generators_text(e.maximal) << "\n";
    std::vector<std::string> vals;
    for (const auto &x : e.perm_char.values())
      vals.push_back(x.to_string());
    os << "  permutation character " << join(vals, " | ") << "\n";
    std::vector<std::string> cons;
    for (const auto &c : e.constituents)
      cons.push_back("X." + std::to_string(c.row + 1) + "(deg " + std::to_string(c.degree) +
                     ") x" + std::to_string(c.multiplicity));
    os << "  constituents " << join(cons, " + ") << "\n";
  }
  std::vector<std::string> rows;
  for (auto row : r.irr_p)
    rows.push_back("X." + std::to_string(row + 1));
  os << "Irr_P " << join(rows, " ") << " (" << r.irr_p.size() << " of " << t.size() << ")\n";
  os << "cd_P " << degree_set_text(r.cd_p) << "\n";
  if (!r.monomial.empty())
    os << monomial_text(r);
  return os.str();
}

json cdp_json(const PCharReport &r)
{
  json out = {{"group", r.group->name()}, {"order", r.group->order()}, {"cd_p", r.cd_p}};
  out["pi"] = r.pi ? json(r.pi->primes()) : json(nullptr);
  return out;
}

std::string cdp_text(const PCharReport &r) { return degree_set_text(r.cd_p) + "\n"; }

json monomial_json(const PCharReport &r)
{
  const CharacterTable &t = character_table(r.group);
  json verdicts = json::array();
  for (const auto &[row, w] : r.monomial) {
    json v = {{"row", row}, {"degree", t.degree(row)}, {"monomial", w.has_value()}};
    v["witness"] = w ? witness_json(*w) : json(nullptr);
    verdicts.push_back(v);
  }
  return {{"group", r.group->name()}, {"order", r.group->order()}, {"verdicts", verdicts}};
}

std::string monomial_text(const PCharReport &r)
{
  const CharacterTable &t = character_table(r.group);
  std::ostringstream os;
  for (const auto &[row, w] : r.monomial) {
    os << "X." << row + 1 << " degree " << t.degree(row) << ": ";
    if (!w) {
      os << "nonmonomial\n";
      continue;
    }
    std::vector<std::string> vals;
    for (const auto &x : w->lambda.values())
      vals.push_back(x.to_string());
    os << "monomial, induced from order " << w->subgroup.order() << " subgroup "
       << generators_text(w->subgroup) << " with lambda " << join(vals, " | ") << "\n";
  }
  return os.str();
}

} // namespace permchar::report
