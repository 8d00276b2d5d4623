#include <gtest/gtest.h>

#include <algorithm>
#include <map>
#include <set>

#include "oracles.hpp"
#include "permchar/catalog.hpp"
#include "permchar/chartable.hpp"
#include "permchar/error.hpp"
#include "permchar/structure.hpp"
#include "permchar/subgroups.hpp"
#include "test_groups.hpp"

using namespace permchar;

namespace
{

std::multiset<std::uint64_t> maximal_indices(const GroupPtr &g)
{
  std::multiset<std::uint64_t> out;
  for (const auto &m : maximal_subgroups(g))
    out.insert(m.representative.index());
  return out;
}

std::uint64_t mask_of(const oracle::Table &t, const GroupPtr &g, const std::vector<Elem> &elems)
{
  std::uint64_t mask = 0;
  for (auto e : elems) {
    const auto &p = g->element(e);
    mask |= std::uint64_t{1} << t.index(oracle::Perm(p.images().begin(), p.images().end()));
  }
  return mask;
}

} // namespace

TEST(Lattice, ClassCounts)
{
  EXPECT_EQ(all_subgroups(group("sym:4")).classes().size(), 11u);
  EXPECT_EQ(all_subgroups(group("cyc:6")).classes().size(), 4u);
  EXPECT_EQ(all_subgroups(group("alt:5")).classes().size(), 9u);
  EXPECT_EQ(all_subgroups(group("q8")).classes().size(), 6u);
  EXPECT_EQ(all_subgroups(group("cyc:1")).classes().size(), 1u);
  EXPECT_EQ(all_subgroups(group("sym:5")).classes().size(), 19u);
  EXPECT_EQ(all_subgroups(group("psl2:7")).classes().size(), 15u);
}

TEST(Lattice, SelfCheckPasses)
{
  for (const auto &spec : sample_groups())
    EXPECT_TRUE(all_subgroups(group(spec)).self_check_failures().empty()) << spec;
  for (const auto &spec : shipped_nonsolvable())
    EXPECT_TRUE(all_subgroups(group(spec)).self_check_failures().empty()) << spec;
}

TEST(Lattice, ClassLengthsSumToSubgroupCount)
{
  std::uint64_t total = 0;
  for (const auto &c : all_subgroups(group("sym:4")).classes())
    total += c.length;
  EXPECT_EQ(total, 30u);
  total = 0;
  for (const auto &c : all_subgroups(group("alt:5")).classes())
    total += c.length;
  EXPECT_EQ(total, 59u);
}

TEST(Lattice, MatchesBruteForce)
{
  for (const auto &spec : catalog_up_to(60)) {
    const auto &g = group(spec);
    const auto t = oracle::make_table(g->perm());
    std::set<std::set<std::uint64_t>> expected;
    for (const auto &cls : oracle::subgroup_classes(t))
      expected.insert(std::set<std::uint64_t>(cls.begin(), cls.end()));
    std::set<std::set<std::uint64_t>> got;
    const auto &lat = all_subgroups(g);
    for (std::size_t c = 0; c < lat.classes().size(); ++c) {
      std::set<std::uint64_t> cls;
      for (const auto &conj : lat.conjugates(c))
        cls.insert(mask_of(t, g, conj));
      EXPECT_EQ(cls.size(), lat.classes()[c].length) << spec;
      got.insert(cls);
    }
    EXPECT_EQ(got, expected) << spec;
  }
}

TEST(Lattice, ClassOfFindsConjugates)
{
  const auto &g = group("sym:4");
  const auto &lat = all_subgroups(g);
  for (std::size_t c = 0; c < lat.classes().size(); ++c) {
    const auto &cls = lat.classes()[c];
    for (auto t : cls.transversal)
      EXPECT_EQ(lat.class_of(cls.representative.conjugate(t)), c);
  }
}

TEST(Lattice, RefusesUncertifiedEnumeration)
{
  EXPECT_THROW(all_subgroups(build_group("sym:7")), EnumerationIncomplete);
  auto a5 = build_group(std::string("file:") + PERMCHAR_TEST_DATA + "/a5.txt");
  EXPECT_THROW(all_subgroups(a5), EnumerationIncomplete);
  // solvable groups loaded from files are fine
  auto s4 = build_group(std::string("file:") + PERMCHAR_TEST_DATA + "/s4.txt");
  EXPECT_EQ(all_subgroups(s4).classes().size(), 11u);
}

TEST(Maximal, Indices)
{
  EXPECT_EQ(maximal_indices(group("sym:4")), (std::multiset<std::uint64_t>{2, 3, 4}));
  EXPECT_EQ(maximal_indices(group("alt:5")), (std::multiset<std::uint64_t>{5, 6, 10}));
  EXPECT_EQ(maximal_indices(group("cyc:12")), (std::multiset<std::uint64_t>{2, 3}));
  EXPECT_EQ(maximal_indices(group("q8")), (std::multiset<std::uint64_t>{2, 2, 2}));
  EXPECT_EQ(maximal_indices(group("psl2:7")), (std::multiset<std::uint64_t>{7, 7, 8}));
  EXPECT_EQ(maximal_indices(group("alt:6")), (std::multiset<std::uint64_t>{6, 6, 10, 15, 15}));
  EXPECT_TRUE(maximal_subgroups(group("cyc:1")).empty());
}

TEST(Maximal, NoIntermediateSubgroup)
{
  for (const auto &spec : sample_groups()) {
    const auto &g = group(spec);
    const auto &lat = all_subgroups(g);
    for (std::size_t c = 0; c < lat.classes().size(); ++c) {
      if (!lat.classes()[c].is_maximal)
        continue;
      for (std::size_t d = 0; d < lat.classes().size(); ++d) {
        auto order = lat.classes()[d].representative.order();
        if (order > lat.classes()[c].representative.order() && order < g->order())
          EXPECT_FALSE(lat.contained_up_to_conjugacy(c, d)) << spec;
      }
    }
  }
}

// The action on the cosets of a maximal subgroup is primitive: the point
// stabilizer is the maximal subgroup itself and no block system exists.
TEST(Maximal, CosetActionIsPrimitive)
{
  for (const auto &spec : {"sym:4", "alt:5", "psl2:7", "dih:10"}) {
    const auto &g = group(spec);
    for (const auto &m : maximal_subgroups(g)) {
      auto action = coset_action(m.representative);
      const auto &img = action.image;
      const auto n = img.degree();
      // blocks containing 0 and k are the orbits of the closure of (0,k)
      for (std::uint32_t k = 1; k < n; ++k) {
        std::vector<std::uint32_t> parent(n);
        for (std::uint32_t i = 0; i < n; ++i)
          parent[i] = i;
        auto find = [&](std::uint32_t x) {
          while (parent[x] != x)
            x = parent[x] = parent[parent[x]];
          return x;
        };
        std::vector<std::pair<std::uint32_t, std::uint32_t>> queue{{0, k}};
        while (!queue.empty()) {
          auto [a, b] = queue.back();
          queue.pop_back();
          a = find(a);
          b = find(b);
          if (a == b)
            continue;
          parent[a] = b;
          for (const auto &gen : img.generators())
            queue.emplace_back(gen[a], gen[b]);
        }
        std::set<std::uint32_t> roots;
        for (std::uint32_t i = 0; i < n; ++i)
          roots.insert(find(i));
        EXPECT_EQ(roots.size(), 1u) << spec << " block through 0 and " << k;
      }
    }
  }
}

TEST(CosetAction, Basics)
{
  const auto &g = group("sym:4");
  const auto &lat = all_subgroups(g);
  for (const auto &cls : lat.classes()) {
    auto action = coset_action(cls.representative);
    EXPECT_EQ(action.image.degree(), cls.representative.index());
    EXPECT_EQ(action.representatives.size(), cls.representative.index());
    for (auto h : cls.representative.elements())
      EXPECT_EQ(action.coset_of[h], 0u);
    EXPECT_EQ(g->order() / action.image.order(), core(cls.representative).order());
  }
}

TEST(CosetAction, CoreAndNormalizer)
{
  const auto &g = group("sym:4");
  for (const auto &cls : all_subgroups(g).classes()) {
    const auto &h = cls.representative;
    auto c = core(h);
    EXPECT_TRUE(c.is_normal());
    EXPECT_TRUE(h.contains(c));
    auto n = normalizer(h);
    EXPECT_TRUE(n.contains(h));
    EXPECT_EQ(n.order(), cls.normalizer_order);
    EXPECT_EQ(g->order() / n.order(), cls.length);
  }
}

TEST(Quotient, Orders)
{
  const auto &g = group("sym:4");
  for (const auto &n : normal_subgroups(g)) {
    auto q = quotient(n);
    EXPECT_EQ(q->order(), n.index());
  }
  auto q = quotient(normal_subgroups(g)[1]);
  EXPECT_FALSE(is_abelian(q)); // S4 / V4 = S3
}

TEST(Frattini, Examples)
{
  EXPECT_EQ(frattini(group("sym:4")).order(), 1u);
  EXPECT_EQ(frattini(group("q8")).order(), 2u);
  EXPECT_EQ(frattini(group("cyc:8")).order(), 4u);
  EXPECT_EQ(frattini(group("cyc:6")).order(), 1u);
  EXPECT_EQ(frattini(group("dih:16")).order(), 4u);
  EXPECT_EQ(frattini(group("alt:5")).order(), 1u);
  EXPECT_EQ(frattini(group("sl23")).order(), 2u);
}

TEST(Complements, Decompositions)
{
  for (const auto &spec : sample_groups()) {
    const auto &g = group(spec);
    for (const auto &d : complement_decompositions(g)) {
      EXPECT_EQ(intersection(d.normal, d.complement).order(), 1u) << spec;
      EXPECT_EQ(join(d.normal, d.complement).order(), g->order()) << spec;
      EXPECT_EQ(d.normal.order() * d.complement.order(), g->order()) << spec;
    }
  }
  EXPECT_FALSE(complement_decompositions(group("sym:4")).empty());
  EXPECT_TRUE(complement_decompositions(group("q8")).empty());
  EXPECT_TRUE(complement_decompositions(group("cyc:4")).empty());
}

TEST(Lifetime, CachedDataDoesNotKeepGroupAlive)
{
  std::weak_ptr<const Group> watch;
  std::vector<SubgroupClass> kept;
  {
    auto g = build_group("sym:4");
    watch = g;
    all_subgroups(g);
    normal_subgroups(g);
    character_table(g);
    kept = maximal_subgroups(g);
  }
  // copies handed out by value own the group
  ASSERT_FALSE(watch.expired());
  EXPECT_EQ(kept.front().representative.ambient()->order(), 24u);
  kept.clear();
  EXPECT_TRUE(watch.expired());
}
