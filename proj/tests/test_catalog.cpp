#include <gtest/gtest.h>

#include <set>

#include "permchar/catalog.hpp"
#include "permchar/error.hpp"
#include "permchar/structure.hpp"
#include "test_groups.hpp"

using namespace permchar;

namespace
{

std::string data(const std::string &name)
{
  return std::string(PERMCHAR_TEST_DATA) + "/" + name;
}

std::uint64_t psl2_order(std::uint64_t q)
{
  const std::uint64_t d = q % 2 ? 2 : 1;
  return q * (q * q - 1) / d;
}

} // namespace

TEST(Catalog, ClosedFormOrders)
{
  std::uint64_t f = 1;
  for (std::uint64_t n = 1; n <= 7; ++n) {
    f *= n;
    EXPECT_EQ(build_perm_group("sym:" + std::to_string(n)).order(), f);
    EXPECT_EQ(build_perm_group("alt:" + std::to_string(n)).order(), n >= 2 ? f / 2 : 1);
  }
  for (std::uint64_t n : {1u, 2u, 7u, 30u, 60u})
    EXPECT_EQ(build_perm_group("cyc:" + std::to_string(n)).order(), n);
  for (std::uint64_t n : {4u, 6u, 8u, 10u, 24u, 60u})
    EXPECT_EQ(build_perm_group("dih:" + std::to_string(n)).order(), n);
  EXPECT_EQ(build_perm_group("q8").order(), 8u);
  EXPECT_EQ(build_perm_group("sl23").order(), 24u);
  for (std::uint64_t q : {2u, 3u, 4u, 5u, 7u, 8u, 9u, 11u, 13u, 16u, 17u, 19u, 23u, 25u, 27u})
    EXPECT_EQ(build_perm_group("psl2:" + std::to_string(q)).order(), psl2_order(q)) << q;
  EXPECT_EQ(build_perm_group("prod:sym:3,cyc:2").order(), 12u);
  EXPECT_EQ(build_perm_group("prod:q8,cyc:3,cyc:2").order(), 48u);
}

TEST(Catalog, IsomorphismInvariants)
{
  EXPECT_FALSE(is_abelian(group("q8")));
  EXPECT_TRUE(is_nilpotent(group("q8")));
  EXPECT_EQ(group("q8")->num_classes(), 5u);
  EXPECT_EQ(group("sl23")->num_classes(), 7u);
  EXPECT_TRUE(is_abelian(group("dih:4")));
  EXPECT_EQ(group("dih:10")->num_classes(), 4u);
  // PSL(2,4) = PSL(2,5) = A5 and PSL(2,9) = A6 by class sizes
  for (const auto &[a, b] : std::vector<std::pair<std::string, std::string>>{
         {"psl2:4", "alt:5"}, {"psl2:5", "alt:5"}, {"psl2:9", "alt:6"}, {"psl2:3", "alt:4"}}) {
    std::multiset<std::pair<std::uint64_t, std::uint32_t>> x, y;
    for (const auto &c : group(a)->classes())
      x.insert({c.size, c.element_order});
    for (const auto &c : group(b)->classes())
      y.insert({c.size, c.element_order});
    EXPECT_EQ(x, y) << a;
  }
}

// PSL(2,q) acts 2-transitively on the q + 1 points of the projective line.
TEST(Catalog, PSL2IsTwoTransitive)
{
  for (std::uint32_t q : {4u, 5u, 7u, 8u, 9u, 11u, 13u, 27u}) {
    auto g = build_perm_group("psl2:" + std::to_string(q));
    ASSERT_EQ(g.degree(), q + 1);
    EXPECT_EQ(g.chain()[0].orbit.size(), q + 1) << q;
    EXPECT_EQ(g.chain()[1].orbit.size(), q) << q;
  }
}

TEST(Catalog, RejectsBadSpecs)
{
  for (const auto &spec : {"", "sym", "sym:x", "cyc:0", "dih:5", "dih:2", "psl2:6", "psl2:29", "prod:sym:3",
                           "prod:cyc:2,cyc:2,cyc:2,cyc:2", "foo:3", "prod:cyc:2,prod:cyc:2,cyc:2"})
    EXPECT_THROW(build_perm_group(spec), std::invalid_argument) << spec;
  EXPECT_THROW(build_group("sym:8"), BoundExceeded);
  EXPECT_THROW(build_group("sym:5", 100), BoundExceeded);
  EXPECT_NO_THROW(build_group("sym:5", 120));
}

TEST(Catalog, FullCatalog)
{
  auto specs = full_catalog();
  std::set<std::string> unique(specs.begin(), specs.end());
  EXPECT_EQ(unique.size(), specs.size());
  EXPECT_GE(specs.size(), 300u);
  for (const auto &s : shipped_nonsolvable())
    EXPECT_TRUE(unique.count(s)) << s;
  for (const auto &s : specs) {
    auto g = build_perm_group(s);
    if (s.rfind("psl2:", 0) != 0 && s != "sym:5" && s != "alt:6")
      EXPECT_LE(g.order(), 60u) << s;
  }
}

TEST(Catalog, ShippedGroupsAreNonsolvableWithCompleteSeeds)
{
  for (const auto &s : shipped_nonsolvable()) {
    const auto &g = group(s);
    EXPECT_FALSE(is_solvable(g)) << s;
    EXPECT_TRUE(g->seeds().complete) << s;
  }
}

TEST(Catalog, PerfectSeedSearch)
{
  auto g = group("alt:6");
  auto seeds = search_perfect_seeds(*g);
  std::set<std::uint64_t> orders;
  for (const auto &gens : seeds.subgroups)
    orders.insert(PermGroup(g->degree(), gens).order());
  EXPECT_TRUE(orders.count(60));
  EXPECT_TRUE(orders.count(360));
  // PSL(2,11) contains A5
  auto h = group("psl2:11");
  std::set<std::uint64_t> h_orders;
  for (const auto &gens : search_perfect_seeds(*h).subgroups)
    h_orders.insert(PermGroup(h->degree(), gens).order());
  EXPECT_TRUE(h_orders.count(60));
}

TEST(GroupFile, Parses)
{
  auto s4 = parse_group_file(data("s4.txt"));
  EXPECT_EQ(s4.degree(), 4u);
  EXPECT_EQ(s4.order(), 24u);
  auto triv = parse_group_file(data("trivial5.txt"));
  EXPECT_EQ(triv.order(), 1u);
  EXPECT_EQ(triv.degree(), 5u);
  EXPECT_EQ(build_group("file:" + data("a5.txt"))->order(), 60u);
}

TEST(GroupFile, ReportsLineNumbers)
{
  try {
    parse_group_file(data("malformed.txt"));
    FAIL() << "expected ParseError";
  } catch (const ParseError &e) {
    EXPECT_EQ(e.line(), 3u);
  }
  try {
    parse_group_file(data("nodegree.txt"));
    FAIL() << "expected ParseError";
  } catch (const ParseError &e) {
    EXPECT_EQ(e.line(), 1u);
  }
  EXPECT_THROW(parse_group_text(""), ParseError);
  EXPECT_THROW(parse_group_text("degree 0\n"), ParseError);
  EXPECT_THROW(parse_group_file(data("missing.txt")), std::invalid_argument);
}

TEST(GroupFile, RoundTrip)
{
  for (const auto &spec : {"sym:4", "psl2:7", "prod:q8,cyc:3", "cyc:1"}) {
    auto g = build_perm_group(spec);
    auto back = parse_group_text(render_group_text(g));
    EXPECT_EQ(back.degree(), g.degree());
    EXPECT_EQ(back.order(), g.order());
    ASSERT_EQ(back.generators().size(), g.generators().size());
    for (std::size_t i = 0; i < g.generators().size(); ++i)
      EXPECT_EQ(back.generators()[i], g.generators()[i]);
  }
}
