#include "permchar/subgroups.hpp"

#include <algorithm>
#include <numeric>
#include <tuple>

#include "permchar/error.hpp"
#include "permchar/kernels.hpp"
#include "permchar/primes.hpp"
#include "permchar/structure.hpp"

namespace permchar
{

namespace
{

std::vector<bool> membership(const Group &group, const std::vector<Elem> &elems)
{
  std::vector<bool> member(group.elements().size(), false);
  for (Elem e : elems)
    member[e] = true;
  return member;
}

std::vector<Elem> conjugate_set(const ElementTable &table, const std::vector<Elem> &set, Elem g)
{
  std::vector<Elem> out;
  out.reserve(set.size());
  for (Elem x : set)
    out.push_back(table.conj(x, g));
  std::sort(out.begin(), out.end());
  return out;
}

} // namespace

std::size_t VecHash::operator()(const std::vector<Elem> &v) const noexcept
{
  std::uint64_t h = 0xcbf29ce484222325ull ^ v.size();
  for (Elem e : v) {
    h ^= e;
    h *= 0x100000001b3ull;
  }
  return static_cast<std::size_t>(h ^ (h >> 29));
}

Permutation CosetAction::image_of(const Group &group, Elem g) const
{
  std::vector<Point> images(representatives.size());
  for (std::size_t k = 0; k < representatives.size(); ++k)
    images[k] = coset_of[group.elements().mul(representatives[k], g)];
  return Permutation(std::move(images));
}

CosetAction coset_action(const Subgroup &h)
{
  const Group &group = *h.ambient();
  const auto &table = group.elements();
  constexpr std::uint32_t kUnset = UINT32_MAX;

  CosetAction act;
  act.coset_of.assign(table.size(), kUnset);
  for (Elem x = 0; x < table.size(); ++x) {
    if (act.coset_of[x] != kUnset)
      continue;
    auto id = static_cast<std::uint32_t>(act.representatives.size());
    act.representatives.push_back(x);
    for (Elem y : h.elements())
      act.coset_of[table.mul(y, x)] = id;
  }

  std::vector<Permutation> gens;
  for (Elem g : group.generator_elems())
    gens.push_back(act.image_of(group, g));
  act.image = PermGroup(act.representatives.size(), std::move(gens));
  return act;
}

Subgroup core(const Subgroup &h)
{
  const Group &group = *h.ambient();
  auto act = coset_action(h);
  auto counts = kernels::fixed_points(group, act.coset_of, act.representatives, h.elements());
  std::vector<Elem> elems;
  for (std::size_t i = 0; i < counts.size(); ++i) {
    if (counts[i] == act.representatives.size())
      elems.push_back(h.elements()[i]);
  }
  return Subgroup::from_elements(h.ambient(), std::move(elems));
}

Subgroup normalizer(const Subgroup &h)
{
  const Group &group = *h.ambient();
  auto member = membership(group, h.elements());
  auto elems = kernels::normalizer(group, h.generators(), member);
  return Subgroup::from_elements(h.ambient(), std::move(elems));
}

GroupPtr quotient(const Subgroup &n)
{
  auto act = coset_action(n);
  std::string name = n.ambient()->name().empty()
                       ? std::string{}
                       : n.ambient()->name() + "/N" + std::to_string(n.order());
  return Group::create(std::move(act.image), std::move(name), {}, n.ambient()->order_bound());
}

SubgroupLattice::SubgroupLattice(const GroupPtr &g) : group_(g.get())
{
  const Group &group = *g;
  const auto &table = group.elements();

  if (!group.seeds().complete && !is_solvable(g))
    throw EnumerationIncomplete("group " + group.name() +
                                " is not solvable and has no complete perfect-subgroup seeds");

  std::vector<std::size_t> seed_ids;

  // Discovered classes in discovery order; canonicalized and sorted at the end.
  auto add_class = [&](std::vector<Elem> elems, std::vector<Elem> gens) -> std::size_t {
    if (auto it = lookup_.find(elems); it != lookup_.end())
      return it->second;

    std::vector<std::vector<Elem>> orbit{elems};
    std::vector<Elem> conj{table.identity()};
    std::unordered_map<std::vector<Elem>, std::size_t, VecHash> pos;
    pos.emplace(elems, 0);
    for (std::size_t k = 0; k < orbit.size(); ++k) {
      for (Elem x : group.generator_elems()) {
        auto s = conjugate_set(table, orbit[k], x);
        if (pos.emplace(s, orbit.size()).second) {
          orbit.push_back(std::move(s));
          conj.push_back(table.mul(conj[k], x));
        }
      }
    }

    std::size_t k0 = static_cast<std::size_t>(
      std::min_element(orbit.begin(), orbit.end()) - orbit.begin());
    Elem c0_inv = table.inverse(conj[k0]);

    SubgroupClass cls;
    std::vector<Elem> rep_gens;
    for (Elem x : gens)
      rep_gens.push_back(table.conj(x, conj[k0]));
    cls.representative = Subgroup::from_elements(g, orbit[k0], std::move(rep_gens));
    cls.length = orbit.size();
    cls.normalizer_order = group.order() / orbit.size();
    cls.transversal.reserve(orbit.size());
    for (std::size_t k = 0; k < orbit.size(); ++k)
      cls.transversal.push_back(table.mul(c0_inv, conj[k]));

    std::size_t id = classes_.size();
    for (const auto &s : orbit)
      lookup_.emplace(s, id);
    classes_.push_back(std::move(cls));
    conjugates_.push_back(std::move(orbit));
    return id;
  };

  add_class({table.identity()}, {});
  for (const auto &seed : group.seeds().subgroups) {
    std::vector<Elem> gens;
    for (const auto &p : seed)
      gens.push_back(table.index_of(p));
    auto elems = closure(group, gens);
    seed_ids.push_back(add_class(std::move(elems), std::move(gens)));
  }
  {
    auto whole = Subgroup::whole(g);
    seed_ids.push_back(add_class(whole.elements(), whole.generators()));
  }

  // Cyclic extension: every subgroup K with solvable K / K^(inf) arises as
  // <H, g> with H normal of prime index in K.
  for (std::size_t idx = 0; idx < classes_.size(); ++idx) {
    Subgroup h = classes_[idx].representative;
    if (h.order() == group.order())
      continue;
    std::vector<Elem> h_elems = h.elements();
    std::vector<Elem> h_gens = h.generators();
    auto member = membership(group, h_elems);
    auto norm = kernels::normalizer(group, h_gens, member);

    std::vector<bool> seen(table.size(), false);
    for (Elem x : norm) {
      if (seen[x])
        continue;
      for (Elem y : h_elems)
        seen[table.mul(x, y)] = true;
      if (member[x])
        continue;

      std::uint64_t m = 1;
      for (Elem p = x; !member[p]; p = table.mul(p, x))
        ++m;
      if (!is_prime(m))
        continue;

      std::vector<Elem> k_elems;
      k_elems.reserve(m * h_elems.size());
      Elem power = table.identity();
      for (std::uint64_t i = 0; i < m; ++i) {
        for (Elem y : h_elems)
          k_elems.push_back(table.mul(power, y));
        power = table.mul(power, x);
      }
      std::sort(k_elems.begin(), k_elems.end());
      if (lookup_.count(k_elems))
        continue;
      std::vector<Elem> k_gens = h_gens;
      k_gens.push_back(x);
      add_class(std::move(k_elems), std::move(k_gens));
    }
  }

  // Canonical order: subgroup order, class length, representative element set.
  std::vector<std::size_t> order(classes_.size());
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    const auto &ca = classes_[a];
    const auto &cb = classes_[b];
    return std::forward_as_tuple(ca.representative.order(), ca.length, ca.representative.elements()) <
           std::forward_as_tuple(cb.representative.order(), cb.length, cb.representative.elements());
  });
  std::vector<std::size_t> new_id(classes_.size());
  std::vector<SubgroupClass> sorted;
  std::vector<std::vector<std::vector<Elem>>> sorted_conj;
  for (std::size_t i = 0; i < order.size(); ++i) {
    new_id[order[i]] = i;
    sorted.push_back(std::move(classes_[order[i]]));
    sorted_conj.push_back(std::move(conjugates_[order[i]]));
  }
  classes_ = std::move(sorted);
  conjugates_ = std::move(sorted_conj);
  for (auto &[key, id] : lookup_)
    id = new_id[id];
  for (auto &id : seed_ids)
    id = new_id[id];

  for (std::size_t i = 0; i < classes_.size(); ++i) {
    const auto oi = classes_[i].representative.order();
    if (oi == group.order())
      continue;
    bool maximal = true;
    for (std::size_t j = i + 1; j < classes_.size() && maximal; ++j) {
      const auto oj = classes_[j].representative.order();
      if (oj == group.order() || oj == oi || oj % oi != 0)
        continue;
      if (contained_up_to_conjugacy(i, j))
        maximal = false;
    }
    classes_[i].is_maximal = maximal;
  }

  run_self_check();
  for (auto &c : classes_)
    c.representative = c.representative.unowned();
  // Perfect residuals must come from seeds (or be trivial).
  for (std::size_t i = 0; i < classes_.size(); ++i) {
    Subgroup res = solvable_residual(classes_[i].representative);
    if (res.is_trivial())
      continue;
    std::size_t rc = class_of(res);
    if (std::find(seed_ids.begin(), seed_ids.end(), rc) == seed_ids.end())
      failures_.push_back("class " + std::to_string(i) + " has an unseeded perfect residual of order " +
                          std::to_string(res.order()));
  }
}

void SubgroupLattice::run_self_check()
{
  const Group &group = *group_;
  const auto &table = group.elements();

  auto has_order = [&](std::uint64_t n) {
    return std::any_of(classes_.begin(), classes_.end(),
                       [&](const SubgroupClass &c) { return c.representative.order() == n; });
  };
  if (!has_order(1) || !has_order(group.order()))
    failures_.push_back("trivial subgroup or whole group missing");

  for (auto p : prime_divisors(group.order())) {
    std::uint64_t part = PrimeSet{p}.part_of(group.order());
    if (!has_order(part))
      failures_.push_back("no Sylow " + std::to_string(p) + "-subgroup of order " +
                          std::to_string(part));
  }

  for (const auto &cls : group.classes()) {
    std::vector<Elem> gen{cls.representative};
    if (!lookup_.count(closure(group, gen)))
      failures_.push_back("cyclic subgroup generated by class rep " +
                          table[cls.representative].to_cycles() + " missing");
  }

  for (std::size_t i = 0; i < classes_.size(); ++i) {
    Subgroup n = normalizer(classes_[i].representative);
    if (n.order() != classes_[i].normalizer_order)
      failures_.push_back("class " + std::to_string(i) + " normalizer order mismatch");
    if (!lookup_.count(n.elements()))
      failures_.push_back("normalizer of class " + std::to_string(i) + " missing");
  }
}

std::vector<SubgroupClass> SubgroupLattice::maximal() const
{
  std::vector<SubgroupClass> out;
  for (const auto &c : classes_) {
    if (c.is_maximal) {
      out.push_back(c);
      out.back().representative = c.representative.owned();
    }
  }
  return out;
}

std::size_t SubgroupLattice::class_of(const Subgroup &h) const
{
  auto it = lookup_.find(h.elements());
  if (it == lookup_.end())
    throw EnumerationIncomplete("subgroup of order " + std::to_string(h.order()) +
                                " not found in the enumerated lattice");
  return it->second;
}

bool SubgroupLattice::contained_up_to_conjugacy(std::size_t small, std::size_t big) const
{
  const auto &target = classes_[big].representative.elements();
  for (const auto &c : conjugates_[small]) {
    if (std::includes(target.begin(), target.end(), c.begin(), c.end()))
      return true;
  }
  return false;
}

const SubgroupLattice &Group::subgroup_lattice() const
{
  return *lattice_.get([&] {
    auto lat = std::make_shared<SubgroupLattice>(self());
    if (!lat->self_check_failures().empty())
      throw EnumerationIncomplete("subgroup enumeration self-check failed for " + name() + ": " +
                                  lat->self_check_failures().front());
    return std::shared_ptr<const SubgroupLattice>(std::move(lat));
  });
}

const SubgroupLattice &all_subgroups(const GroupPtr &g) { return g->subgroup_lattice(); }

std::vector<SubgroupClass> maximal_subgroups(const GroupPtr &g) { return all_subgroups(g).maximal(); }

Subgroup frattini(const GroupPtr &g)
{
  const auto &lat = all_subgroups(g);
  std::vector<Elem> current = Subgroup::whole(g).elements();
  for (std::size_t c = 0; c < lat.classes().size(); ++c) {
    if (!lat.classes()[c].is_maximal)
      continue;
    for (const auto &conj : lat.conjugates(c)) {
      std::vector<Elem> next;
      std::set_intersection(current.begin(), current.end(), conj.begin(), conj.end(),
                            std::back_inserter(next));
      current = std::move(next);
    }
  }
  return Subgroup::from_elements(g, std::move(current));
}

std::vector<ComplementDecomposition> complement_decompositions(const GroupPtr &g)
{
  std::vector<ComplementDecomposition> out;
  auto maximals = maximal_subgroups(g);
  for (const auto &n : minimal_normal_subgroups(g)) {
    for (const auto &m : maximals) {
      const auto &h = m.representative;
      if (n.order() * h.order() != g->order())
        continue;
      if (intersection(n, h).is_trivial())
        out.push_back({n, h});
    }
  }
  return out;
}

} // namespace permchar
