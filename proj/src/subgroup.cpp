#include "permchar/subgroup.hpp"

#include <algorithm>
#include <stdexcept>

namespace permchar
{

struct Subgroup::Data
{
  const Group *ambient = nullptr;
  std::vector<Elem> elements;
  std::vector<Elem> generators;
  std::vector<bool> member;
  Lazy<GroupPtr> group;
  Lazy<std::vector<std::size_t>> fusion;
};

std::vector<Elem> closure(const Group &group, std::span<const Elem> gens)
{
  const auto &table = group.elements();
  std::vector<bool> seen(table.size(), false);
  std::vector<Elem> out{table.identity()};
  seen[table.identity()] = true;
  for (std::size_t k = 0; k < out.size(); ++k) {
    for (Elem g : gens) {
      Elem y = table.mul(out[k], g);
      if (!seen[y]) {
        seen[y] = true;
        out.push_back(y);
      }
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<Elem> normal_closure(const Group &group, std::span<const Elem> gens,
                                 std::span<const Elem> conjugators, std::vector<Elem> *gens_out)
{
  const auto &table = group.elements();
  std::vector<Elem> current;
  for (Elem g : gens) {
    if (g != table.identity())
      current.push_back(g);
  }
  std::vector<Elem> set = closure(group, current);
  for (;;) {
    std::vector<bool> member(table.size(), false);
    for (Elem e : set)
      member[e] = true;
    bool grew = false;
    for (std::size_t i = 0; i < current.size() && !grew; ++i) {
      for (Elem c : conjugators) {
        Elem x = table.conj(current[i], c);
        if (!member[x]) {
          current.push_back(x);
          grew = true;
          break;
        }
      }
    }
    if (!grew)
      break;
    set = closure(group, current);
  }
  if (gens_out)
    *gens_out = std::move(current);
  return set;
}

std::vector<Elem> greedy_generators(const Group &group, const std::vector<Elem> &sorted_set)
{
  std::vector<Elem> gens;
  std::vector<bool> member(group.elements().size(), false);
  member[group.elements().identity()] = true;
  std::size_t covered = 1;
  for (Elem e : sorted_set) {
    if (covered == sorted_set.size())
      break;
    if (member[e])
      continue;
    gens.push_back(e);
    auto cl = closure(group, gens);
    for (Elem x : cl)
      member[x] = true;
    covered = cl.size();
  }
  return gens;
}

Subgroup Subgroup::from_elements(GroupPtr ambient, std::vector<Elem> elements,
                                 std::vector<Elem> generators)
{
  auto d = std::make_shared<Data>();
  if (generators.empty() && elements.size() > 1)
    generators = greedy_generators(*ambient, elements);
  d->member.assign(ambient->elements().size(), false);
  for (Elem e : elements)
    d->member[e] = true;
  std::erase(generators, ambient->elements().identity());
  d->ambient = ambient.get();
  d->elements = std::move(elements);
  d->generators = std::move(generators);
  Subgroup s;
  s.d_ = std::move(d);
  s.owner_ = std::move(ambient);
  return s;
}

Subgroup Subgroup::generated(GroupPtr ambient, std::vector<Elem> generators)
{
  auto elems = closure(*ambient, generators);
  return from_elements(std::move(ambient), std::move(elems), std::move(generators));
}

Subgroup Subgroup::trivial(GroupPtr ambient)
{
  Elem id = ambient->elements().identity();
  return from_elements(std::move(ambient), {id}, {});
}

Subgroup Subgroup::whole(GroupPtr ambient)
{
  std::vector<Elem> all(ambient->elements().size());
  for (Elem e = 0; e < all.size(); ++e)
    all[e] = e;
  auto gens = ambient->generator_elems();
  return from_elements(std::move(ambient), std::move(all), std::move(gens));
}

GroupPtr Subgroup::ambient() const { return owner_ ? owner_ : d_->ambient->self(); }

Subgroup Subgroup::unowned() const
{
  Subgroup s = *this;
  s.owner_.reset();
  return s;
}

Subgroup Subgroup::owned() const
{
  Subgroup s = *this;
  s.owner_ = ambient();
  return s;
}
const std::vector<Elem> &Subgroup::elements() const { return d_->elements; }
const std::vector<Elem> &Subgroup::generators() const { return d_->generators; }

std::vector<Permutation> Subgroup::generator_perms() const
{
  std::vector<Permutation> out;
  for (Elem g : d_->generators)
    out.push_back(d_->ambient->element(g));
  return out;
}

std::uint64_t Subgroup::index() const { return d_->ambient->order() / order(); }

bool Subgroup::contains(Elem e) const { return d_->member[e]; }

bool Subgroup::contains(const Subgroup &other) const
{
  for (Elem g : other.generators()) {
    if (!contains(g))
      return false;
  }
  return true;
}

bool Subgroup::is_normal() const
{
  const auto &table = d_->ambient->elements();
  for (Elem h : d_->generators) {
    for (Elem g : d_->ambient->generator_elems()) {
      if (!contains(table.conj(h, g)))
        return false;
    }
  }
  return true;
}

Subgroup Subgroup::conjugate(Elem g) const
{
  const auto &table = d_->ambient->elements();
  std::vector<Elem> elems;
  elems.reserve(d_->elements.size());
  for (Elem h : d_->elements)
    elems.push_back(table.conj(h, g));
  std::sort(elems.begin(), elems.end());
  std::vector<Elem> gens;
  for (Elem h : d_->generators)
    gens.push_back(table.conj(h, g));
  return from_elements(ambient(), std::move(elems), std::move(gens));
}

GroupPtr Subgroup::as_group() const
{
  if (is_whole())
    return ambient();
  return d_->group.get([&] {
    auto perm = PermGroup(d_->ambient->degree(), generator_perms());
    return Group::create(std::move(perm), {}, {}, d_->ambient->order_bound());
  });
}

Elem Subgroup::to_local(Elem ambient_elem) const
{
  auto it = std::lower_bound(d_->elements.begin(), d_->elements.end(), ambient_elem);
  if (it == d_->elements.end() || *it != ambient_elem)
    throw std::invalid_argument("element is not in the subgroup");
  return static_cast<Elem>(it - d_->elements.begin());
}

const std::vector<std::size_t> &Subgroup::fusion() const
{
  return d_->fusion.get([&] {
    auto local = as_group();
    std::vector<std::size_t> map;
    for (const auto &cls : local->classes())
      map.push_back(d_->ambient->class_of(to_ambient(cls.representative)));
    return map;
  });
}

bool operator==(const Subgroup &a, const Subgroup &b)
{
  if (a.d_ == b.d_)
    return true;
  if (!a.d_ || !b.d_)
    return false;
  return a.d_->ambient == b.d_->ambient && a.d_->elements == b.d_->elements;
}

Subgroup intersection(const Subgroup &a, const Subgroup &b)
{
  std::vector<Elem> elems;
  std::set_intersection(a.elements().begin(), a.elements().end(), b.elements().begin(),
                        b.elements().end(), std::back_inserter(elems));
  return Subgroup::from_elements(a.ambient(), std::move(elems));
}

Subgroup join(const Subgroup &a, const Subgroup &b)
{
  std::vector<Elem> gens = a.generators();
  gens.insert(gens.end(), b.generators().begin(), b.generators().end());
  return Subgroup::generated(a.ambient(), std::move(gens));
}

} // namespace permchar
