#include "permchar/catalog.hpp"

#include <algorithm>
#include <fstream>
#include <numeric>
#include <set>
#include <sstream>
#include <stdexcept>

#include "permchar/error.hpp"
#include "permchar/finite_field.hpp"
#include "permchar/primes.hpp"
#include "permchar/structure.hpp"
#include "permchar/subgroup.hpp"

namespace permchar
{

namespace
{

Permutation cycle(std::size_t degree, std::vector<Point> points)
{
  std::vector<Point> images(degree);
  std::iota(images.begin(), images.end(), 0);
  for (std::size_t i = 0; i < points.size(); ++i)
    images[points[i]] = points[(i + 1) % points.size()];
  return Permutation(std::move(images));
}

Permutation full_cycle(std::size_t degree, Point from = 0)
{
  std::vector<Point> pts;
  for (Point x = from; x < degree; ++x)
    pts.push_back(x);
  return cycle(degree, pts);
}

unsigned parse_count(const std::string &text, const std::string &spec)
{
  if (text.empty() || !std::all_of(text.begin(), text.end(), ::isdigit) || text.size() > 6)
    throw std::invalid_argument("bad parameter in group spec \"" + spec + "\"");
  return static_cast<unsigned>(std::stoul(text));
}

PermGroup symmetric(unsigned n)
{
  if (n < 2)
    return PermGroup(std::max(n, 1u), {});
  if (n == 2)
    return PermGroup(2, {cycle(2, {0, 1})});
  return PermGroup(n, {cycle(n, {0, 1}), full_cycle(n)});
}

PermGroup alternating(unsigned n)
{
  if (n < 3)
    return PermGroup(std::max(n, 1u), {});
  if (n == 3)
    return PermGroup(3, {cycle(3, {0, 1, 2})});
  Permutation long_cycle = n % 2 ? full_cycle(n) : full_cycle(n, 1);
  return PermGroup(n, {cycle(n, {0, 1, 2}), long_cycle});
}

PermGroup cyclic(unsigned n)
{
  if (n < 1)
    throw std::invalid_argument("cyclic group of order 0");
  if (n == 1)
    return PermGroup(1, {});
  return PermGroup(n, {full_cycle(n)});
}

PermGroup dihedral(unsigned order)
{
  if (order < 4 || order % 2)
    throw std::invalid_argument("dihedral order must be even and at least 4");
  if (order == 4)
    return PermGroup(4, {Permutation::from_cycles(4, "(0 1)(2 3)"), Permutation::from_cycles(4, "(0 2)(1 3)")});
  const unsigned m = order / 2;
  std::vector<Point> reflection(m);
  for (Point x = 0; x < m; ++x)
    reflection[x] = (m - x) % m;
  return PermGroup(m, {full_cycle(m), Permutation(reflection)});
}

// Regular representation of the quaternion group on {+-1, +-i, +-j, +-k}.
PermGroup quaternion()
{
  // unit index u in {1,i,j,k} = {0,1,2,3}; point = 4*sign + u
  static constexpr int kTable[4][4][2] = {
    // {sign, unit} of u*v
    {{0, 0}, {0, 1}, {0, 2}, {0, 3}},
    {{0, 1}, {1, 0}, {0, 3}, {1, 2}},
    {{0, 2}, {1, 3}, {1, 0}, {0, 1}},
    {{0, 3}, {0, 2}, {1, 1}, {1, 0}},
  };
  auto right_mul = [](int v) {
    std::vector<Point> images(8);
    for (int s = 0; s < 2; ++s) {
      for (int u = 0; u < 4; ++u) {
        int sign = (s + kTable[u][v][0]) % 2;
        images[4 * s + u] = static_cast<Point>(4 * sign + kTable[u][v][1]);
      }
    }
    return Permutation(images);
  };
  return PermGroup(8, {right_mul(1), right_mul(2)});
}

// SL(2,3) on the eight nonzero row vectors of F_3^2, v -> v M.
PermGroup sl23()
{
  auto index = [](int a, int b) { return static_cast<Point>(a * 3 + b - 1); };
  auto action = [&](int m00, int m01, int m10, int m11) {
    std::vector<Point> images(8);
    for (int a = 0; a < 3; ++a) {
      for (int b = 0; b < 3; ++b) {
        if (a == 0 && b == 0)
          continue;
        int x = (a * m00 + b * m10) % 3;
        int y = (a * m01 + b * m11) % 3;
        images[index(a, b)] = index(x, y);
      }
    }
    return Permutation(images);
  };
  return PermGroup(8, {action(1, 1, 0, 1), action(1, 0, 1, 1)});
}

// PSL(2,q) on the q+1 points of the projective line; point q is infinity.
PermGroup psl2(unsigned q)
{
  if (q < 2 || q > 27)
    throw std::invalid_argument("psl2:q needs a prime power q with 2 <= q <= 27");
  std::uint32_t p = 0;
  for (std::uint32_t d = 2; d <= q; ++d) {
    if (q % d == 0) {
      p = d;
      break;
    }
  }
  std::uint32_t qq = q;
  while (qq % p == 0)
    qq /= p;
  if (qq != 1)
    throw std::invalid_argument("psl2:q needs a prime power q, got " + std::to_string(q));
  const FiniteField f = FiniteField::of_order(q);
  if (!f.is_field())
    throw std::logic_error("defining polynomial of GF(" + std::to_string(q) + ") is reducible");

  const Point infinity = q;
  std::vector<Permutation> gens;
  for (std::uint32_t i = 0; i < f.degree(); ++i) {
    const std::uint32_t c = f.basis(i);
    std::vector<Point> images(q + 1);
    for (Point z = 0; z < q; ++z)
      images[z] = f.add(z, c);
    images[infinity] = infinity;
    gens.emplace_back(images);
  }
  std::vector<Point> w(q + 1);
  w[0] = infinity;
  w[infinity] = 0;
  for (Point z = 1; z < q; ++z)
    w[z] = f.neg(f.inv(z));
  gens.emplace_back(w);
  return PermGroup(q + 1, gens);
}

PermGroup direct_product(const std::vector<PermGroup> &factors)
{
  std::size_t degree = 0;
  for (const auto &f : factors)
    degree += f.degree();
  std::vector<Permutation> gens;
  std::size_t offset = 0;
  for (const auto &f : factors) {
    for (const auto &g : f.generators()) {
      std::vector<Point> images(degree);
      std::iota(images.begin(), images.end(), 0);
      for (Point x = 0; x < f.degree(); ++x)
        images[offset + x] = static_cast<Point>(offset + g[x]);
      gens.emplace_back(images);
    }
    offset += f.degree();
  }
  return PermGroup(degree, gens);
}

std::vector<std::string> split_factors(const std::string &spec)
{
  std::vector<std::string> parts;
  std::stringstream ss(spec.substr(5));
  std::string part;
  while (std::getline(ss, part, ','))
    parts.push_back(part);
  if (parts.size() < 2 || parts.size() > 3)
    throw std::invalid_argument("prod needs two or three factors: \"" + spec + "\"");
  return parts;
}

std::pair<std::string, std::string> split_head(const std::string &spec)
{
  auto colon = spec.find(':');
  if (colon == std::string::npos)
    return {spec, ""};
  return {spec.substr(0, colon), spec.substr(colon + 1)};
}

// Whether the seed search provably finds every perfect subgroup.
bool seeds_complete(const std::string &spec)
{
  auto [head, arg] = split_head(spec);
  if (head == "sym" || head == "alt")
    return parse_count(arg, spec) <= 6;
  if (head == "psl2" || head == "cyc" || head == "dih" || head == "q8" || head == "sl23")
    return true;
  if (head == "prod") {
    std::size_t nonsolvable = 0;
    for (const auto &f : split_factors(spec)) {
      auto pg = build_perm_group(f);
      auto g = Group::create(pg, f);
      if (!is_solvable(g)) {
        ++nonsolvable;
        if (!seeds_complete(f))
          return false;
      }
    }
    return nonsolvable <= 1;
  }
  return false;
}

} // namespace

PermGroup build_perm_group(const std::string &spec)
{
  auto [head, arg] = split_head(spec);
  if (head == "sym")
    return symmetric(parse_count(arg, spec));
  if (head == "alt")
    return alternating(parse_count(arg, spec));
  if (head == "cyc")
    return cyclic(parse_count(arg, spec));
  if (head == "dih")
    return dihedral(parse_count(arg, spec));
  if (head == "q8" && arg.empty())
    return quaternion();
  if (head == "sl23" && arg.empty())
    return sl23();
  if (head == "psl2")
    return psl2(parse_count(arg, spec));
  if (head == "file")
    return parse_group_file(arg);
  if (head == "prod") {
    std::vector<PermGroup> factors;
    for (const auto &f : split_factors(spec)) {
      if (f.rfind("prod:", 0) == 0 || f.rfind("file:", 0) == 0)
        throw std::invalid_argument("prod factors must be built-in specs: \"" + spec + "\"");
      factors.push_back(build_perm_group(f));
    }
    return direct_product(factors);
  }
  throw std::invalid_argument("unknown group spec \"" + spec + "\"");
}

GroupPtr build_group(const std::string &spec, std::uint64_t order_bound)
{
  PermGroup perm = build_perm_group(spec);
  GroupPtr plain = Group::create(perm, spec, {}, order_bound);
  if (is_solvable(plain))
    return Group::create(std::move(perm), spec, SeedSet{{}, true}, order_bound);
  SeedSet seeds = search_perfect_seeds(*plain);
  seeds.complete = seeds_complete(spec);
  return Group::create(std::move(perm), spec, std::move(seeds), order_bound);
}

PermGroup parse_group_text(std::string_view text)
{
  std::size_t degree = 0;
  bool have_degree = false;
  std::vector<Permutation> gens;
  std::size_t line_no = 0;
  std::size_t start = 0;
  while (start <= text.size()) {
    std::size_t end = text.find('\n', start);
    if (end == std::string_view::npos)
      end = text.size();
    std::string line(text.substr(start, end - start));
    start = end + 1;
    ++line_no;
    auto first = line.find_first_not_of(" \t\r");
    if (first == std::string::npos)
      continue;
    line = line.substr(first);
    line.erase(line.find_last_not_of(" \t\r") + 1);
    if (!have_degree) {
      std::istringstream in(line);
      std::string word;
      long long n = -1;
      std::string rest;
      if (!(in >> word >> n) || word != "degree" || (in >> rest) || n < 1)
        throw ParseError("expected \"degree <n>\" with n >= 1", line_no);
      degree = static_cast<std::size_t>(n);
      have_degree = true;
      continue;
    }
    try {
      gens.push_back(Permutation::from_cycles(degree, line));
    } catch (const ParseError &e) {
      throw ParseError(e.what(), line_no);
    }
  }
  if (!have_degree)
    throw ParseError("missing \"degree <n>\" line", line_no);
  return PermGroup(degree, std::move(gens));
}

PermGroup parse_group_file(const std::string &path)
{
  std::ifstream in(path);
  if (!in)
    throw std::invalid_argument("cannot open group file \"" + path + "\"");
  std::stringstream buffer;
  buffer << in.rdbuf();
  return parse_group_text(buffer.str());
}

std::string render_group_text(const PermGroup &g)
{
  std::string out = "degree " + std::to_string(g.degree()) + "\n";
  for (const auto &gen : g.generators())
    out += gen.to_cycles() + "\n";
  return out;
}

SeedSet search_perfect_seeds(const Group &g)
{
  SeedSet seeds;
  std::set<std::vector<Elem>> found;
  const auto &table = g.elements();

  if (g.order() % 60 == 0) {
    std::vector<Elem> order_three;
    for (std::size_t c = 0; c < g.num_classes(); ++c) {
      if (g.classes()[c].element_order == 3) {
        const auto &m = g.class_members(c);
        order_three.insert(order_three.end(), m.begin(), m.end());
      }
    }
    std::sort(order_three.begin(), order_three.end());
    for (const auto &cls : g.classes()) {
      if (cls.element_order != 2)
        continue;
      const Elem a = cls.representative;
      std::vector<std::vector<Elem>> with_a;
      for (Elem b : order_three) {
        if (table.order(table.mul(a, b)) != 5)
          continue;
        bool known = false;
        for (const auto &s : with_a) {
          if (std::binary_search(s.begin(), s.end(), b)) {
            known = true;
            break;
          }
        }
        if (known)
          continue;
        const Elem pair[] = {a, b};
        auto elems = closure(g, pair);
        with_a.push_back(elems);
        if (found.insert(elems).second)
          seeds.subgroups.push_back({table[a], table[b]});
      }
    }
  }

  const GroupPtr self = g.self();
  const Subgroup derived = derived_subgroup(Subgroup::whole(self));
  if (!derived.is_trivial() && derived_subgroup(derived) == derived &&
      found.insert(derived.elements()).second)
    seeds.subgroups.push_back(derived.generator_perms());
  return seeds;
}

std::vector<std::string> shipped_nonsolvable()
{
  return {"alt:5",    "sym:5",    "alt:6",    "psl2:4",  "psl2:5",
          "psl2:7",   "psl2:8",   "psl2:9",   "psl2:11", "psl2:13",
          "psl2:27"};
}

std::vector<std::string> full_catalog(std::uint64_t max_order)
{
  struct Base
  {
    std::string spec;
    std::uint64_t order;
  };
  std::vector<Base> bases;
  auto add = [&](std::string spec, std::uint64_t order) {
    if (order <= max_order)
      bases.push_back({std::move(spec), order});
  };
  add("sym:3", 6);
  add("sym:4", 24);
  add("alt:4", 12);
  add("alt:5", 60);
  for (std::uint64_t n = 1; n <= max_order; ++n)
    add("cyc:" + std::to_string(n), n);
  for (std::uint64_t n = 4; n <= max_order; n += 2)
    add("dih:" + std::to_string(n), n);
  add("q8", 8);
  add("sl23", 24);
  add("psl2:2", 6);
  add("psl2:3", 12);
  add("psl2:4", 60);
  add("psl2:5", 60);

  std::vector<std::string> out;
  for (const auto &b : bases)
    out.push_back(b.spec);

  // Products use nontrivial factors other than the psl2 duplicates.
  std::vector<Base> factors;
  for (const auto &b : bases) {
    if (b.order >= 2 && b.spec.rfind("psl2:", 0) != 0)
      factors.push_back(b);
  }
  const std::size_t n = factors.size();
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i; j < n; ++j) {
      const std::uint64_t ij = factors[i].order * factors[j].order;
      if (ij > max_order)
        continue;
      out.push_back("prod:" + factors[i].spec + "," + factors[j].spec);
    }
  }
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i; j < n; ++j) {
      for (std::size_t k = j; k < n; ++k) {
        const std::uint64_t ijk = factors[i].order * factors[j].order * factors[k].order;
        if (ijk > max_order)
          continue;
        out.push_back("prod:" + factors[i].spec + "," + factors[j].spec + "," + factors[k].spec);
      }
    }
  }

  std::set<std::string> seen(out.begin(), out.end());
  for (const auto &s : shipped_nonsolvable()) {
    if (seen.insert(s).second)
      out.push_back(s);
  }
  return out;
}

} // namespace permchar
