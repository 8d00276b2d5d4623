#include "oracles.hpp"

#include <Eigen/Dense>

#include <algorithm>
#include <cmath>
#include <deque>
#include <numbers>
#include <random>
#include <set>
#include <stdexcept>

#include "permchar/chartable.hpp"

namespace oracle
{

Perm compose(const Perm &a, const Perm &b)
{
  Perm c(a.size());
  for (std::size_t x = 0; x < a.size(); ++x)
    c[x] = b[a[x]];
  return c;
}

Perm invert(const Perm &a)
{
  Perm c(a.size());
  for (std::size_t x = 0; x < a.size(); ++x)
    c[a[x]] = static_cast<std::uint32_t>(x);
  return c;
}

std::vector<Perm> closure(std::size_t degree, const std::vector<Perm> &gens)
{
  Perm id(degree);
  for (std::size_t x = 0; x < degree; ++x)
    id[x] = static_cast<std::uint32_t>(x);
  std::set<Perm> seen{id};
  std::deque<Perm> queue{id};
  while (!queue.empty()) {
    Perm p = queue.front();
    queue.pop_front();
    for (const auto &g : gens) {
      Perm q = compose(p, g);
      if (seen.insert(q).second)
        queue.push_back(q);
    }
  }
  return {seen.begin(), seen.end()};
}

std::uint32_t Table::index(const Perm &p) const
{
  auto it = std::lower_bound(elems.begin(), elems.end(), p);
  if (it == elems.end() || *it != p)
    throw std::out_of_range("not an element");
  return static_cast<std::uint32_t>(it - elems.begin());
}

Table make_table(const permchar::PermGroup &g)
{
  std::vector<Perm> gens;
  for (const auto &p : g.generators())
    gens.emplace_back(p.images().begin(), p.images().end());
  Table t;
  t.elems = closure(g.degree(), gens);
  const std::size_t n = t.elems.size();
  t.mul.assign(n, std::vector<std::uint32_t>(n));
  t.inv.resize(n);
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = 0; b < n; ++b)
      t.mul[a][b] = t.index(compose(t.elems[a], t.elems[b]));
    t.inv[a] = t.index(invert(t.elems[a]));
  }
  Perm id(g.degree());
  for (std::size_t x = 0; x < id.size(); ++x)
    id[x] = static_cast<std::uint32_t>(x);
  t.identity = t.index(id);
  return t;
}

std::vector<std::vector<std::uint32_t>> classes(const Table &t)
{
  const std::size_t n = t.size();
  std::vector<bool> done(n, false);
  std::vector<std::vector<std::uint32_t>> out;
  for (std::uint32_t a = 0; a < n; ++a) {
    if (done[a])
      continue;
    std::set<std::uint32_t> cls;
    for (std::uint32_t x = 0; x < n; ++x)
      cls.insert(t.mul[t.mul[t.inv[x]][a]][x]);
    for (auto c : cls)
      done[c] = true;
    out.emplace_back(cls.begin(), cls.end());
  }
  return out;
}

namespace
{

std::uint64_t close_mask(const Table &t, std::vector<std::uint32_t> gens)
{
  std::uint64_t mask = std::uint64_t{1} << t.identity;
  std::vector<std::uint32_t> frontier{t.identity};
  while (!frontier.empty()) {
    std::vector<std::uint32_t> next;
    for (auto x : frontier) {
      for (auto g : gens) {
        auto y = t.mul[x][g];
        if (!(mask >> y & 1)) {
          mask |= std::uint64_t{1} << y;
          next.push_back(y);
        }
      }
    }
    frontier = std::move(next);
  }
  return mask;
}

std::vector<std::uint32_t> members(std::uint64_t mask)
{
  std::vector<std::uint32_t> out;
  for (std::uint32_t i = 0; i < 64; ++i)
    if (mask >> i & 1)
      out.push_back(i);
  return out;
}

std::uint64_t conjugate_mask(const Table &t, std::uint64_t mask, std::uint32_t x)
{
  std::uint64_t out = 0;
  for (auto h : members(mask))
    out |= std::uint64_t{1} << t.mul[t.mul[t.inv[x]][h]][x];
  return out;
}

} // namespace

std::vector<std::uint64_t> subgroups(const Table &t)
{
  if (t.size() > 64)
    throw std::invalid_argument("subgroup oracle needs |G| <= 64");
  std::map<std::uint64_t, std::vector<std::uint32_t>> found; // mask -> generators
  const std::uint64_t trivial = std::uint64_t{1} << t.identity;
  found[trivial] = {};
  std::vector<std::uint64_t> frontier{trivial};
  while (!frontier.empty()) {
    std::vector<std::uint64_t> next;
    for (auto h : frontier) {
      const auto gens = found[h];
      for (std::uint32_t g = 0; g < t.size(); ++g) {
        if (h >> g & 1)
          continue;
        auto extended = gens;
        extended.push_back(g);
        const std::uint64_t k = close_mask(t, extended);
        if (found.emplace(k, extended).second)
          next.push_back(k);
      }
    }
    frontier = std::move(next);
  }
  std::vector<std::uint64_t> out;
  for (const auto &[mask, gens] : found)
    out.push_back(mask);
  return out;
}

std::vector<std::vector<std::uint64_t>> subgroup_classes(const Table &t)
{
  std::vector<std::vector<std::uint64_t>> out;
  std::set<std::uint64_t> done;
  for (auto h : subgroups(t)) {
    if (done.count(h))
      continue;
    std::set<std::uint64_t> cls;
    for (std::uint32_t x = 0; x < t.size(); ++x)
      cls.insert(conjugate_mask(t, h, x));
    done.insert(cls.begin(), cls.end());
    out.emplace_back(cls.begin(), cls.end());
  }
  return out;
}

std::vector<std::vector<std::complex<double>>>
numeric_table(const Table &t, const std::vector<std::vector<std::uint32_t>> &cls)
{
  const std::size_t k = cls.size();
  const auto n = static_cast<double>(t.size());
  std::vector<std::size_t> class_of(t.size());
  for (std::size_t i = 0; i < k; ++i)
    for (auto x : cls[i])
      class_of[x] = i;

  std::mt19937 rng(7);
  std::uniform_real_distribution<double> coeff(-1.0, 1.0);
  Eigen::MatrixXd a = Eigen::MatrixXd::Zero(static_cast<Eigen::Index>(k), static_cast<Eigen::Index>(k));
  for (std::size_t j = 0; j < k; ++j) {
    const double c = coeff(rng);
    for (std::size_t l = 0; l < k; ++l) {
      const std::uint32_t z = cls[l].front();
      // pairs x in C_j, y with x y = z
      for (auto x : cls[j]) {
        const std::uint32_t y = t.mul[t.inv[x]][z];
        a(static_cast<Eigen::Index>(class_of[y]), static_cast<Eigen::Index>(l)) += c;
      }
    }
  }
  Eigen::ComplexEigenSolver<Eigen::MatrixXcd> solver(a.cast<std::complex<double>>());
  const auto &vecs = solver.eigenvectors();
  std::vector<std::vector<std::complex<double>>> rows;
  for (Eigen::Index r = 0; r < vecs.cols(); ++r) {
    std::vector<std::complex<double>> w(k);
    for (std::size_t i = 0; i < k; ++i)
      w[i] = vecs(static_cast<Eigen::Index>(i), r) / vecs(0, r);
    double norm = 0;
    for (std::size_t i = 0; i < k; ++i)
      norm += std::norm(w[i]) / static_cast<double>(cls[i].size());
    const double degree = std::sqrt(n / norm);
    for (std::size_t i = 0; i < k; ++i)
      w[i] *= degree / static_cast<double>(cls[i].size());
    rows.push_back(std::move(w));
  }
  return rows;
}

std::vector<std::map<std::uint32_t, std::uint32_t>> linear_characters(const Table &t,
                                                                      std::uint64_t mask)
{
  const auto elems = members(mask);
  const auto order = static_cast<std::uint32_t>(elems.size());
  std::vector<std::uint32_t> gens;
  std::uint64_t span = std::uint64_t{1} << t.identity;
  for (auto x : elems) {
    if (span >> x & 1)
      continue;
    gens.push_back(x);
    span = close_mask(t, gens);
  }
  auto element_order = [&](std::uint32_t x) {
    std::uint32_t o = 1;
    for (auto y = x; y != t.identity; y = t.mul[y][x])
      ++o;
    return o;
  };
  std::vector<std::uint32_t> steps; // e(g) ranges over multiples of order / o(g)
  for (auto g : gens)
    steps.push_back(order / element_order(g));

  std::vector<std::map<std::uint32_t, std::uint32_t>> out;
  std::vector<std::uint32_t> choice(gens.size(), 0);
  while (true) {
    std::map<std::uint32_t, std::uint32_t> e{{t.identity, 0}};
    std::vector<std::uint32_t> frontier{t.identity};
    bool consistent = true;
    while (!frontier.empty() && consistent) {
      std::vector<std::uint32_t> next;
      for (auto x : frontier) {
        for (std::size_t i = 0; i < gens.size(); ++i) {
          const std::uint32_t y = t.mul[x][gens[i]];
          const std::uint32_t v = (e[x] + choice[i] * steps[i]) % order;
          auto [it, fresh] = e.emplace(y, v);
          if (fresh)
            next.push_back(y);
          else if (it->second != v)
            consistent = false;
        }
      }
      frontier = std::move(next);
    }
    if (consistent)
      out.push_back(std::move(e));
    std::size_t i = 0;
    for (; i < gens.size(); ++i) {
      if (++choice[i] * steps[i] < order)
        break;
      choice[i] = 0;
    }
    if (i == gens.size())
      break;
  }
  return out;
}

std::vector<bool> monomial_rows(const permchar::GroupPtr &g)
{
  using permchar::Cyclo;
  using permchar::Rational;
  const Table t = make_table(g->perm());
  const auto &table = permchar::character_table(g);
  const std::size_t k = g->num_classes();
  const std::size_t n = t.size();

  std::vector<std::uint32_t> reps(k);
  for (std::size_t c = 0; c < k; ++c) {
    const auto &p = g->element(g->classes()[c].representative);
    reps[c] = t.index(Perm(p.images().begin(), p.images().end()));
  }
  // conj[c][x] = x^-1 rep_c x
  std::vector<std::vector<std::uint32_t>> conj(k, std::vector<std::uint32_t>(n));
  for (std::size_t c = 0; c < k; ++c)
    for (std::uint32_t x = 0; x < n; ++x)
      conj[c][x] = t.mul[t.mul[t.inv[x]][reps[c]]][x];

  std::vector<std::vector<std::complex<double>>> numeric(table.size());
  for (std::size_t r = 0; r < table.size(); ++r)
    for (const auto &v : table.values(r))
      numeric[r].push_back(v.to_complex());

  std::vector<bool> monomial(table.size(), false);
  for (auto h : subgroups(t)) {
    const auto order = static_cast<std::uint32_t>(std::popcount(h));
    for (const auto &lambda : linear_characters(t, h)) {
      std::vector<std::vector<std::uint64_t>> counts(k, std::vector<std::uint64_t>(order, 0));
      std::vector<std::complex<double>> induced(k);
      for (std::size_t c = 0; c < k; ++c) {
        for (std::uint32_t x = 0; x < n; ++x) {
          auto it = lambda.find(conj[c][x]);
          if (it != lambda.end())
            ++counts[c][it->second];
        }
        for (std::uint32_t e = 0; e < order; ++e) {
          if (counts[c][e])
            induced[c] += static_cast<double>(counts[c][e]) *
                          std::polar(1.0, 2 * std::numbers::pi * e / order);
        }
        induced[c] /= order;
      }
      for (std::size_t r = 0; r < table.size(); ++r) {
        if (monomial[r])
          continue;
        bool close = true;
        for (std::size_t c = 0; c < k && close; ++c)
          close = std::abs(induced[c] - numeric[r][c]) < 1e-7;
        if (!close)
          continue;
        bool exact = true;
        for (std::size_t c = 0; c < k && exact; ++c) {
          std::map<std::uint32_t, Rational> coeffs;
          for (std::uint32_t e = 0; e < order; ++e)
            if (counts[c][e])
              coeffs[e] = Rational(static_cast<unsigned long>(counts[c][e]), order);
          for (auto &[e, q] : coeffs)
            q.canonicalize();
          exact = Cyclo::from_powers(order, coeffs) == table.values(r)[c];
        }
        if (exact)
          monomial[r] = true;
      }
    }
  }
  return monomial;
}

} // namespace oracle
