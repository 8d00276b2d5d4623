#include <gtest/gtest.h>

#include <algorithm>

#include "oracles.hpp"
#include "permchar/chartable.hpp"
#include "permchar/structure.hpp"
#include "permchar/subgroups.hpp"
#include "test_groups.hpp"

using namespace permchar;

namespace
{

std::vector<std::vector<std::uint32_t>> library_classes(const GroupPtr &g, const oracle::Table &t)
{
  std::vector<std::vector<std::uint32_t>> out;
  for (std::size_t c = 0; c < g->num_classes(); ++c) {
    std::vector<std::uint32_t> members;
    for (auto e : g->class_members(c)) {
      const auto &p = g->element(e);
      members.push_back(t.index(oracle::Perm(p.images().begin(), p.images().end())));
    }
    out.push_back(members);
  }
  return out;
}

bool rows_close(const std::vector<Cyclo> &exact, const std::vector<std::complex<double>> &approx)
{
  for (std::size_t i = 0; i < exact.size(); ++i)
    if (std::abs(exact[i].to_complex() - approx[i]) > 1e-6)
      return false;
  return true;
}

std::vector<std::string> row_strings(const CharacterTable &t, std::size_t r)
{
  std::vector<std::string> out;
  for (const auto &v : t.values(r))
    out.push_back(v.to_string());
  return out;
}

} // namespace

TEST(CharacterTable, S3)
{
  const auto &t = character_table(group("sym:3"));
  ASSERT_EQ(t.size(), 3u);
  EXPECT_EQ(t.degrees(), (std::vector<std::uint64_t>{1, 1, 2}));
  EXPECT_EQ(row_strings(t, 0), (std::vector<std::string>{"1", "1", "1"}));
  EXPECT_EQ(row_strings(t, 1), (std::vector<std::string>{"1", "-1", "1"}));
  EXPECT_EQ(row_strings(t, 2), (std::vector<std::string>{"2", "0", "-1"}));
}

TEST(CharacterTable, A5)
{
  const auto &g = group("alt:5");
  const auto &t = character_table(g);
  EXPECT_EQ(t.degrees(), (std::vector<std::uint64_t>{1, 3, 3, 4, 5}));
  EXPECT_EQ(t.prime(), 31u);
  // the two degree-3 rows take the golden-ratio values on 5-elements
  auto phi = Cyclo(1) + Cyclo::root_of_unity(5, 1) + Cyclo::root_of_unity(5, 4);
  auto psi = Cyclo(1) + Cyclo::root_of_unity(5, 2) + Cyclo::root_of_unity(5, 3);
  std::vector<Cyclo> fives{t.values(1)[3], t.values(1)[4]};
  EXPECT_TRUE((fives == std::vector<Cyclo>{phi, psi}) || (fives == std::vector<Cyclo>{psi, phi}));
}

TEST(CharacterTable, CyclicAndQuaternion)
{
  const auto &c5 = character_table(group("cyc:5"));
  EXPECT_EQ(c5.degrees(), std::vector<std::uint64_t>(5, 1));
  const auto &q8 = character_table(group("q8"));
  EXPECT_EQ(q8.degrees(), (std::vector<std::uint64_t>{1, 1, 1, 1, 2}));
  const auto &sl = character_table(group("sl23"));
  EXPECT_EQ(sl.degrees(), (std::vector<std::uint64_t>{1, 1, 1, 2, 2, 2, 3}));
}

TEST(CharacterTable, OrthogonalityOnSamples)
{
  for (const auto &spec : sample_groups()) {
    const auto &g = group(spec);
    const auto &t = character_table(g);
    ASSERT_EQ(t.size(), g->num_classes()) << spec;
    EXPECT_EQ(t.row(0), ClassFunction::trivial(g));
    std::uint64_t sum_sq = 0;
    for (std::size_t r = 0; r < t.size(); ++r) {
      sum_sq += t.degree(r) * t.degree(r);
      for (std::size_t s = 0; s < t.size(); ++s)
        EXPECT_EQ(inner_product(t.row(r), t.row(s)), Cyclo(r == s ? 1 : 0)) << spec;
    }
    EXPECT_EQ(sum_sq, g->order()) << spec;
    // column orthogonality
    for (std::size_t a = 0; a < t.size(); ++a) {
      for (std::size_t b = 0; b < t.size(); ++b) {
        Cyclo s;
        for (std::size_t r = 0; r < t.size(); ++r)
          s += t.values(r)[a] * t.values(r)[b].conj();
        EXPECT_EQ(s, a == b ? Cyclo(static_cast<long>(g->classes()[a].centralizer_order)) : Cyclo(0))
          << spec;
      }
    }
  }
}

TEST(CharacterTable, MatchesNumericOracle)
{
  for (const auto &spec : catalog_up_to(24)) {
    const auto &g = group(spec);
    const auto tab = oracle::make_table(g->perm());
    const auto numeric = oracle::numeric_table(tab, library_classes(g, tab));
    const auto &t = character_table(g);
    ASSERT_EQ(numeric.size(), t.size()) << spec;
    std::vector<bool> used(numeric.size(), false);
    for (std::size_t r = 0; r < t.size(); ++r) {
      bool found = false;
      for (std::size_t s = 0; s < numeric.size() && !found; ++s) {
        if (!used[s] && rows_close(t.values(r), numeric[s]))
          used[s] = found = true;
      }
      EXPECT_TRUE(found) << spec << " row " << r;
    }
  }
}

TEST(CharacterTable, RowsAreSortedAndDeterministic)
{
  for (const auto &spec : {"sym:4", "alt:5", "psl2:7", "prod:q8,cyc:3"}) {
    const auto &g = group(spec);
    const auto &t = character_table(g);
    for (std::size_t r = 2; r < t.size(); ++r)
      EXPECT_LE(t.degree(r - 1), t.degree(r)) << spec;
    auto again = compute_character_table(g);
    for (std::size_t r = 0; r < t.size(); ++r)
      EXPECT_EQ(again.values(r), t.values(r)) << spec;
  }
}

TEST(CharacterTable, FindAndDecompose)
{
  const auto &g = group("sym:4");
  const auto &t = character_table(g);
  for (std::size_t r = 0; r < t.size(); ++r)
    EXPECT_EQ(t.find(t.row(r)), r);
  auto sum = t.row(1) + t.row(3) + t.row(3);
  EXPECT_FALSE(t.find(sum).has_value());
  auto coeffs = t.decompose(sum);
  EXPECT_EQ(coeffs[1], Cyclo(1));
  EXPECT_EQ(coeffs[3], Cyclo(2));
  EXPECT_EQ(coeffs[0], Cyclo(0));
  EXPECT_TRUE(is_character(sum));
  EXPECT_FALSE(is_character(t.row(1) - t.row(0)));
  EXPECT_FALSE(is_character(Rational(1, 2) * t.row(0)));
}

TEST(Induction, RegularCharacter)
{
  for (const auto &spec : {"sym:4", "alt:5", "q8"}) {
    const auto &g = group(spec);
    auto one = Subgroup::trivial(g);
    auto reg = induce(ClassFunction::trivial(one.as_group()), one);
    EXPECT_EQ(reg[0], Cyclo(static_cast<long>(g->order())));
    for (std::size_t c = 1; c < reg.size(); ++c)
      EXPECT_TRUE(reg[c].is_zero());
  }
}

TEST(Induction, FusionAndRestriction)
{
  const auto &g = group("sym:4");
  const auto &t = character_table(g);
  for (const auto &cls : all_subgroups(g).classes()) {
    const auto &h = cls.representative;
    const auto hg = h.as_group();
    const auto &fusion = h.fusion();
    ASSERT_EQ(fusion.size(), hg->num_classes());
    for (std::size_t c = 0; c < hg->num_classes(); ++c) {
      auto e = h.to_ambient(hg->classes()[c].representative);
      EXPECT_EQ(fusion[c], g->class_of(e));
    }
    // Frobenius reciprocity
    for (const auto &psi : character_table(hg).rows()) {
      auto up = induce(psi, h);
      for (std::size_t r = 0; r < t.size(); ++r)
        EXPECT_EQ(inner_product(up, t.row(r)), inner_product(psi, restrict_to(t.row(r), h)));
    }
  }
}

TEST(LinearCharacters, CountEqualsAbelianization)
{
  for (const auto &spec : sample_groups()) {
    const auto &g = group(spec);
    auto whole = Subgroup::whole(g);
    auto lin = linear_characters(whole);
    EXPECT_EQ(lin.size(), derived_subgroup(whole).index()) << spec;
    EXPECT_EQ(lin.front(), ClassFunction::trivial(g));
    const auto &t = character_table(g);
    std::size_t degree_one = 0;
    for (std::size_t r = 0; r < t.size(); ++r)
      degree_one += t.degree(r) == 1;
    EXPECT_EQ(lin.size(), degree_one) << spec;
    for (const auto &l : lin)
      EXPECT_TRUE(t.find(l).has_value()) << spec;
  }
}

TEST(LinearCharacters, MatchOracleOnSubgroups)
{
  for (const auto &spec : {"sym:4", "dih:12", "q8", "prod:cyc:2,cyc:4"}) {
    const auto &g = group(spec);
    const auto tab = oracle::make_table(g->perm());
    for (const auto &cls : all_subgroups(g).classes()) {
      const auto &h = cls.representative;
      std::uint64_t mask = 0;
      for (auto e : h.elements()) {
        const auto &p = g->element(e);
        mask |= std::uint64_t{1} << tab.index(oracle::Perm(p.images().begin(), p.images().end()));
      }
      EXPECT_EQ(linear_characters(h).size(), oracle::linear_characters(tab, mask).size()) << spec;
    }
  }
}

TEST(Kernels, Examples)
{
  const auto &g = group("sym:4");
  const auto &t = character_table(g);
  std::multiset<std::uint64_t> kernel_orders;
  for (const auto &chi : t.rows())
    kernel_orders.insert(kernel(chi).order());
  // trivial, sign, the 2-dim through S3, and two faithful rows
  EXPECT_EQ(kernel_orders, (std::multiset<std::uint64_t>{24, 12, 4, 1, 1}));
  EXPECT_THROW(kernel(t.row(1) - t.row(0)), std::invalid_argument);
}

TEST(Kernels, KernelIsNormalAndIntersectionOfRows)
{
  for (const auto &spec : sample_groups()) {
    const auto &g = group(spec);
    const auto &t = character_table(g);
    auto all = Subgroup::whole(g);
    for (const auto &chi : t.rows()) {
      auto k = kernel(chi);
      EXPECT_TRUE(k.is_normal());
      all = intersection(all, k);
    }
    EXPECT_EQ(all.order(), 1u) << spec;
  }
}

TEST(Monolithic, Examples)
{
  const auto &s4 = character_table(group("sym:4"));
  for (const auto &chi : s4.rows())
    EXPECT_TRUE(is_monolithic(chi));
  // C2 x C2 has no faithful irreducible, but every irreducible has a cyclic
  // quotient of prime order
  for (const auto &chi : character_table(group("prod:cyc:2,cyc:2")).rows())
    EXPECT_TRUE(is_monolithic(chi));
  // the regular character of C2 x C2 has trivial kernel and the quotient has
  // three minimal normal subgroups
  auto g = group("prod:cyc:2,cyc:2");
  auto one = Subgroup::trivial(g);
  EXPECT_FALSE(is_monolithic(induce(ClassFunction::trivial(one.as_group()), one)));
  // C6 faithful linear character: C6 has two minimal normal subgroups
  const auto &c6 = character_table(group("cyc:6"));
  std::size_t faithful_monolithic = 0;
  for (const auto &chi : c6.rows())
    if (kernel(chi).order() == 1 && is_monolithic(chi))
      ++faithful_monolithic;
  EXPECT_EQ(faithful_monolithic, 0u);
}
