#include "permchar/pchar.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

#include "permchar/kernels.hpp"

namespace permchar
{

ClassFunction permutation_character(const Subgroup &m)
{
  const GroupPtr &g = m.ambient();
  const CosetAction action = coset_action(m);
  std::vector<Elem> probes;
  for (const auto &c : g->classes())
    probes.push_back(c.representative);
  const auto counts = kernels::fixed_points(*g, action.coset_of, action.representatives, probes);
  std::vector<Cyclo> values;
  for (auto c : counts)
    values.emplace_back(Rational(static_cast<unsigned long>(c)));
  return {g, std::move(values)};
}

namespace
{

PCharReport build_report(const GroupPtr &g, const std::optional<PrimeSet> &pi, bool with_monomial)
{
  const SubgroupLattice &lattice = all_subgroups(g);
  const CharacterTable &table = character_table(g);

  PCharReport report;
  report.group = g;
  report.pi = pi;
  std::set<std::size_t> rows;
  for (std::size_t c = 0; c < lattice.classes().size(); ++c) {
    const SubgroupClass &cls = lattice.classes()[c];
    if (!cls.is_maximal)
      continue;
    const std::uint64_t index = cls.representative.index();
    if (pi && !pi->is_pi_number(index))
      continue;
    PCharEntry entry;
    entry.subgroup_class = c;
    entry.maximal = cls.representative;
    entry.index = index;
    entry.index_primes = prime_divisors(index);
    entry.perm_char = permutation_character(cls.representative);
    const auto products = table.decompose(entry.perm_char);
    for (std::size_t r = 0; r < products.size(); ++r) {
      if (!products[r].is_nonneg_integer())
        throw std::logic_error("permutation character has a non-integral multiplicity");
      auto m = products[r].as_rational()->get_num().get_ui();
      if (m == 0)
        continue;
      entry.constituents.push_back({r, table.degree(r), m});
      rows.insert(r);
    }
    report.entries.push_back(std::move(entry));
  }
  // The trivial group has no maximal subgroup; its principal character is
  // counted as a P-character so that cd_P(1) = {1}.
  if (g->order() == 1)
    rows.insert(0);
  report.irr_p.assign(rows.begin(), rows.end());
  std::set<std::uint64_t> degrees;
  for (auto r : report.irr_p)
    degrees.insert(table.degree(r));
  report.cd_p.assign(degrees.begin(), degrees.end());
  if (with_monomial) {
    for (auto r : report.irr_p)
      report.monomial.emplace(r, is_monomial(g, r));
  }
  return report;
}

} // namespace

PCharReport p_characters(const GroupPtr &g, bool with_monomial)
{
  return build_report(g, std::nullopt, with_monomial);
}

PCharReport p_pi_characters(const GroupPtr &g, const PrimeSet &pi, bool with_monomial)
{
  if (pi.empty())
    throw std::invalid_argument("empty prime set");
  return build_report(g, pi, with_monomial);
}

std::optional<MonomialWitness> is_monomial(const GroupPtr &g, std::size_t row)
{
  const CharacterTable &table = character_table(g);
  const ClassFunction chi = table.row(row);
  const std::uint64_t degree = table.degree(row);
  if (degree == 1) {
    Subgroup whole = Subgroup::whole(g);
    return MonomialWitness{whole, restrict_to(chi, whole)};
  }
  if (g->order() % degree != 0)
    return std::nullopt;
  const SubgroupLattice &lattice = all_subgroups(g);
  for (const auto &cls : lattice.classes()) {
    const Subgroup &h = cls.representative;
    if (h.index() != degree)
      continue;
    for (auto &lambda : linear_characters(h)) {
      if (induce(lambda, h) == chi)
        return MonomialWitness{h, std::move(lambda)};
    }
  }
  return std::nullopt;
}

Subgroup inertia_group(const Subgroup &n, const ClassFunction &lambda)
{
  if (!n.is_normal())
    throw std::invalid_argument("inertia group of a subgroup that is not normal");
  const GroupPtr local = n.as_group();
  if (lambda.group() != local)
    throw std::invalid_argument("character does not belong to the normal subgroup");
  const Group &g = *n.ambient();
  const auto &elems = n.elements();
  std::vector<Elem> stabilizer;
  for (Elem x = 0; x < g.order(); ++x) {
    bool fixed = true;
    for (Elem e : elems) {
      const Elem moved = g.elements().conj(e, x);
      if (!(lambda.at(n.to_local(moved)) == lambda.at(n.to_local(e)))) {
        fixed = false;
        break;
      }
    }
    if (fixed)
      stabilizer.push_back(x);
  }
  return Subgroup::from_elements(n.ambient(), std::move(stabilizer));
}

} // namespace permchar
