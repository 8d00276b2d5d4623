#include "permchar/structure.hpp"

#include <algorithm>
#include <map>

#include "permchar/subgroups.hpp"

namespace permchar
{

Subgroup derived_subgroup(const Subgroup &h)
{
  const auto &group = *h.ambient();
  const auto &table = group.elements();
  std::vector<Elem> comms;
  const auto &gens = h.generators();
  for (std::size_t a = 0; a < gens.size(); ++a) {
    for (std::size_t b = a + 1; b < gens.size(); ++b) {
      Elem ga = gens[a], gb = gens[b];
      Elem c = table.mul(table.mul(table.inverse(ga), table.inverse(gb)), table.mul(ga, gb));
      if (c != table.identity())
        comms.push_back(c);
    }
  }
  std::vector<Elem> out_gens;
  auto elems = normal_closure(group, comms, gens, &out_gens);
  return Subgroup::from_elements(h.ambient(), std::move(elems), std::move(out_gens));
}

std::vector<Subgroup> derived_series(const GroupPtr &g)
{
  std::vector<Subgroup> series{Subgroup::whole(g)};
  for (;;) {
    Subgroup next = derived_subgroup(series.back());
    if (next.order() == series.back().order())
      break;
    series.push_back(std::move(next));
  }
  return series;
}

Subgroup solvable_residual(const Subgroup &h)
{
  Subgroup cur = h;
  for (;;) {
    Subgroup next = derived_subgroup(cur);
    if (next.order() == cur.order())
      return cur;
    cur = std::move(next);
  }
}

bool is_solvable(const Subgroup &h) { return solvable_residual(h).is_trivial(); }

bool is_solvable(const GroupPtr &g) { return is_solvable(Subgroup::whole(g)); }

std::vector<Subgroup> lower_central_series(const GroupPtr &g)
{
  const auto &table = g->elements();
  std::vector<Subgroup> series{Subgroup::whole(g)};
  for (;;) {
    const auto &cur = series.back();
    std::vector<Elem> comms;
    for (Elem x : cur.generators()) {
      for (Elem y : g->generator_elems()) {
        Elem c = table.mul(table.mul(table.inverse(x), table.inverse(y)), table.mul(x, y));
        if (c != table.identity())
          comms.push_back(c);
      }
    }
    std::vector<Elem> gens;
    auto elems = normal_closure(*g, comms, g->generator_elems(), &gens);
    if (elems.size() == cur.order())
      break;
    series.push_back(Subgroup::from_elements(g, std::move(elems), std::move(gens)));
  }
  return series;
}

bool is_nilpotent(const GroupPtr &g) { return lower_central_series(g).back().is_trivial(); }

bool is_abelian(const GroupPtr &g)
{
  return g->num_classes() == g->order();
}

const std::vector<Subgroup> &Group::normal_subgroups() const
{
  return *normals_.get([&] {
    GroupPtr g = self();
    const auto &gens = generator_elems();

    // Normal closure of each class, then close under joins.
    std::vector<Subgroup> class_closures;
    for (std::size_t c = 1; c < num_classes(); ++c) {
      std::vector<Elem> seed{classes()[c].representative};
      std::vector<Elem> cgens;
      auto elems = normal_closure(*this, seed, gens, &cgens);
      class_closures.push_back(Subgroup::from_elements(g, std::move(elems), std::move(cgens)));
    }

    std::map<std::vector<Elem>, Subgroup> found;
    std::vector<Subgroup> work{Subgroup::trivial(g)};
    found.emplace(work.front().elements(), work.front());
    for (std::size_t k = 0; k < work.size(); ++k) {
      for (const auto &cc : class_closures) {
        if (work[k].contains(cc))
          continue;
        Subgroup j = join(work[k], cc);
        if (found.emplace(j.elements(), j).second)
          work.push_back(j);
      }
    }

    auto out = std::make_shared<std::vector<Subgroup>>();
    for (auto &[elems, s] : found)
      out->push_back(s.unowned());
    std::stable_sort(out->begin(), out->end(),
                     [](const Subgroup &a, const Subgroup &b) { return a.order() < b.order(); });
    return std::shared_ptr<const std::vector<Subgroup>>(std::move(out));
  });
}

const std::vector<Subgroup> &normal_subgroups(const GroupPtr &g) { return g->normal_subgroups(); }

std::vector<Subgroup> minimal_normal_subgroups(const GroupPtr &g)
{
  const auto &all = g->normal_subgroups();
  std::vector<Subgroup> out;
  for (const auto &n : all) {
    if (n.is_trivial())
      continue;
    bool minimal = true;
    for (const auto &m : out) {
      if (n.contains(m)) {
        minimal = false;
        break;
      }
    }
    if (minimal)
      out.push_back(n.owned());
  }
  return out;
}

Subgroup o_pi_prime(const GroupPtr &g, const PrimeSet &pi)
{
  Subgroup result = Subgroup::trivial(g);
  for (const auto &n : g->normal_subgroups()) {
    if (pi.is_pi_prime_number(n.order()) && !result.contains(n))
      result = join(result, n);
  }
  return result;
}

NormalComplement normal_pi_complement(const GroupPtr &g, const PrimeSet &pi)
{
  const auto &table = g->elements();
  std::vector<Elem> gens;
  std::vector<Elem> elems{table.identity()};
  std::vector<bool> member(table.size(), false);
  member[table.identity()] = true;

  for (Elem x = 0; x < table.size(); ++x) {
    std::uint64_t pi_part = pi.part_of(table.order(x));
    Elem y = table.pow(x, static_cast<std::int64_t>(pi_part));
    if (member[y])
      continue;
    gens.push_back(y);
    elems = closure(*g, gens);
    std::fill(member.begin(), member.end(), false);
    for (Elem e : elems)
      member[e] = true;
  }

  NormalComplement res;
  res.witness = Subgroup::from_elements(g, std::move(elems), std::move(gens));
  res.exists = res.witness.order() == pi.complement_part_of(g->order());
  return res;
}

bool has_normal_pi_complement(const GroupPtr &g, const PrimeSet &pi)
{
  return normal_pi_complement(g, pi).exists;
}

namespace
{

bool chief_factors_ok(const GroupPtr &g, const PrimeSet &pi, bool solvable_pi_factors)
{
  if (g->order() == 1)
    return true;
  Subgroup n = minimal_normal_subgroups(g).front();
  if (pi.is_pi_prime_number(n.order())) {
    // pi'-factor, always fine
  } else if (pi.is_pi_number(n.order())) {
    if (solvable_pi_factors && !is_solvable(n))
      return false;
  } else {
    return false;
  }
  return chief_factors_ok(quotient(n), pi, solvable_pi_factors);
}

} // namespace

bool is_pi_separable(const GroupPtr &g, const PrimeSet &pi) { return chief_factors_ok(g, pi, false); }

bool is_pi_solvable(const GroupPtr &g, const PrimeSet &pi) { return chief_factors_ok(g, pi, true); }

} // namespace permchar
