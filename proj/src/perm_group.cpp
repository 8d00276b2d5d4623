#include "permchar/perm_group.hpp"

#include <stdexcept>

#include "permchar/error.hpp"

namespace permchar
{

PermGroup::PermGroup(std::size_t degree, std::vector<Permutation> generators)
  : degree_(degree)
{
  if (degree == 0)
    throw std::invalid_argument("permutation group degree must be positive");
  for (auto &g : generators) {
    if (g.degree() != degree)
      throw std::invalid_argument("generator degree " + std::to_string(g.degree()) +
                                  " does not match group degree " + std::to_string(degree));
    if (!g.is_identity())
      generators_.push_back(std::move(g));
  }
  build();
}

PermGroup PermGroup::from_cycle_words(std::size_t degree, const std::vector<std::string> &words)
{
  std::vector<Permutation> gens;
  gens.reserve(words.size());
  for (const auto &w : words)
    gens.push_back(Permutation::from_cycles(degree, w));
  return PermGroup(degree, std::move(gens));
}

std::vector<Point> PermGroup::base() const
{
  std::vector<Point> b;
  for (const auto &level : levels_)
    b.push_back(level.base_point);
  return b;
}

void PermGroup::rebuild_orbit(ChainLevel &level) const
{
  level.orbit.assign(1, level.base_point);
  level.orbit_position.assign(degree_, -1);
  level.orbit_position[level.base_point] = 0;
  level.transversal.assign(1, Permutation(degree_));
  level.transversal_inv.assign(1, Permutation(degree_));

  for (std::size_t k = 0; k < level.orbit.size(); ++k) {
    for (const auto &s : level.strong_generators) {
      Point y = s[level.orbit[k]];
      if (level.orbit_position[y] >= 0)
        continue;
      level.orbit_position[y] = static_cast<std::int32_t>(level.orbit.size());
      level.orbit.push_back(y);
      Permutation t = level.transversal[k] * s;
      level.transversal_inv.push_back(t.inverse());
      level.transversal.push_back(std::move(t));
    }
  }
}

std::pair<Permutation, std::size_t> PermGroup::sift(Permutation g, std::size_t from) const
{
  for (std::size_t i = from; i < levels_.size(); ++i) {
    const auto &level = levels_[i];
    std::int32_t pos = level.orbit_position[g[level.base_point]];
    if (pos < 0)
      return {std::move(g), i};
    g = g * level.transversal_inv[static_cast<std::size_t>(pos)];
  }
  return {std::move(g), levels_.size()};
}

void PermGroup::build()
{
  levels_.clear();
  if (generators_.empty()) {
    order_ = 1;
    return;
  }

  ChainLevel first;
  first.base_point = generators_.front().first_moved();
  for (const auto &g : generators_) {
    if (g.first_moved() < first.base_point)
      first.base_point = g.first_moved();
  }
  first.strong_generators = generators_;
  levels_.push_back(std::move(first));

  // Strong generators of level i generate the stabilizer of base points
  // 0..i-1; a residue dropping out at level j is appended to levels i+1..j.
  std::size_t i = 0;
  for (;;) {
    rebuild_orbit(levels_[i]);
    bool added = false;
    const auto &level = levels_[i];
    for (std::size_t k = 0; !added && k < level.orbit.size(); ++k) {
      for (const auto &s : level.strong_generators) {
        Point y = s[level.orbit[k]];
        auto pos = static_cast<std::size_t>(level.orbit_position[y]);
        Permutation schreier = level.transversal[k] * s * level.transversal_inv[pos];
        if (schreier.is_identity())
          continue;
        auto [residue, drop] = sift(std::move(schreier), i + 1);
        if (residue.is_identity())
          continue;
        if (drop == levels_.size()) {
          ChainLevel next;
          next.base_point = residue.first_moved();
          levels_.push_back(std::move(next));
        }
        for (std::size_t l = i + 1; l <= drop; ++l)
          levels_[l].strong_generators.push_back(residue);
        for (std::size_t l = i + 1; l < drop; ++l)
          rebuild_orbit(levels_[l]);
        i = drop;
        added = true;
        break;
      }
    }
    if (added)
      continue;
    if (i == 0)
      break;
    --i;
  }

  order_ = 1;
  for (const auto &level : levels_) {
    std::uint64_t len = level.orbit.size();
    if (order_ > UINT64_MAX / len)
      throw BoundExceeded("group order exceeds 64-bit range");
    order_ *= len;
  }
}

bool PermGroup::contains(const Permutation &g) const
{
  if (g.degree() != degree_)
    return false;
  return sift(g).first.is_identity();
}

std::vector<Permutation> PermGroup::enumerate() const
{
  std::vector<Permutation> out{Permutation(degree_)};
  // g = u_k * ... * u_1 with u_i from the level-i transversal.
  for (std::size_t i = levels_.size(); i-- > 0;) {
    std::vector<Permutation> next;
    next.reserve(out.size() * levels_[i].transversal.size());
    for (const auto &h : out) {
      for (const auto &t : levels_[i].transversal)
        next.push_back(h * t);
    }
    out = std::move(next);
  }
  return out;
}

} // namespace permchar
