#include <gtest/gtest.h>

#include <algorithm>
#include <random>
#include <vector>

#include "classquare/builtins.hpp"
#include "classquare/error.hpp"
#include "classquare/structure.hpp"

#include "oracle.hpp"
#include "support.hpp"

using namespace classquare;

namespace
{

Perm P(const char *text, std::size_t degree) { return parse_cycles(text, degree); }

} // namespace

TEST(ClassTableTest, PartitionMatchesOracle)
{
  for (auto const &name : support::corpus_up_to(2000)) {
    Group g = builtin(name);
    ConjClassTable t(g);
    auto og = support::oracle_group(g);
    auto want = oracle::classes(og);

    std::vector<oracle::Set> got;
    for (std::size_t i = 0; i < t.size(); ++i)
      got.push_back(support::as_set(t.class_elements(i)));
    std::sort(got.begin(), got.end());
    std::sort(want.begin(), want.end());
    EXPECT_EQ(got, want) << name;
  }
}

TEST(ClassTableTest, ClassEquationAndCentralizerIndex)
{
  for (auto const &name : default_corpus()) {
    Group g = builtin(name);
    ConjClassTable t(g);
    std::uint64_t total = 0;
    for (std::size_t i = 0; i < t.size(); ++i) {
      total += t[i].size();
      if (g.order() <= 2000) {
        EXPECT_EQ(t[i].size() * centralizer(g, t[i].representative).order(), g.order()) << name;
      }
    }
    EXPECT_EQ(total, g.order()) << name;
  }
}

TEST(ClassTableTest, ConventionsAndLookup)
{
  ConjClassTable t(alternating_group(4));
  ASSERT_EQ(t.size(), 4u);
  EXPECT_TRUE(t[0].representative.is_identity());
  for (std::size_t i = 0; i < t.size(); ++i) {
    EXPECT_EQ(t[i].representative, t.class_elements(i).front());
    EXPECT_EQ(t.class_of(t[i].representative), i);
  }
  EXPECT_EQ(t.class_of(P("(1,2,3)", 4)), t.class_of(P("(1,3,4)", 4)));
  EXPECT_NE(t.class_of(P("(1,2,3)", 4)), t.class_of(P("(1,3,2)", 4)));
  EXPECT_THROW(t.class_of(P("(1,2)", 4)), PreconditionError);
  EXPECT_EQ(t.sizes(), (std::vector<std::size_t>{1, 4, 4, 3}));
}

TEST(SeriesTest, SolubilityMatchesOracle)
{
  for (auto const &name : support::corpus_up_to(700)) {
    Group g = builtin(name);
    EXPECT_EQ(is_soluble(g), oracle::is_soluble(support::oracle_group(g))) << name;
  }
  EXPECT_FALSE(is_soluble(builtin("psl2:13")));
  EXPECT_FALSE(is_soluble(builtin("sym:5")));
  EXPECT_TRUE(is_soluble(builtin("wr:sym:3:5")));
}

TEST(SeriesTest, DerivedSeriesOrders)
{
  auto orders = [](const Group &g) {
    std::vector<std::uint64_t> res;
    for (auto const &h : derived_series(g))
      res.push_back(h.order());
    return res;
  };
  EXPECT_EQ(orders(symmetric_group(4)), (std::vector<std::uint64_t>{24, 12, 4, 1}));
  EXPECT_EQ(orders(alternating_group(5)), (std::vector<std::uint64_t>{60}));
  EXPECT_EQ(orders(builtin("frobenius:21")), (std::vector<std::uint64_t>{21, 7, 1}));
}

TEST(SylowTest, OrdersAndPGroups)
{
  for (auto const &name : support::corpus_up_to(40000)) {
    Group g = builtin(name);
    for (auto p : prime_divisors(g.order())) {
      Subgroup s = sylow_subgroup(g, p);
      EXPECT_EQ(s.order(), p_part(g.order(), p)) << name << " p=" << p;
    }
    EXPECT_EQ(sylow_subgroup(g, 29).order(), 1u);
  }
}

TEST(PCoreTest, MatchesOracle)
{
  for (auto const &name : support::corpus_up_to(700)) {
    Group g = builtin(name);
    auto og = support::oracle_group(g);
    for (auto p : prime_divisors(g.order())) {
      EXPECT_EQ(support::as_set(p_core(g, p).group()), oracle::p_core(og, p))
        << name << " p=" << p;
    }
  }
}

TEST(FittingTest, MatchesOracle)
{
  for (auto const &name : support::corpus_up_to(700)) {
    Group g = builtin(name);
    auto og = support::oracle_group(g);
    EXPECT_EQ(support::as_set(fitting_subgroup(g).group()), oracle::fitting(og)) << name;
    EXPECT_EQ(is_nilpotent(g), oracle::is_nilpotent(og)) << name;
  }
}

TEST(FittingTest, Examples)
{
  EXPECT_EQ(fitting_subgroup(alternating_group(4)).order(), 4u);
  EXPECT_EQ(fitting_subgroup(symmetric_group(4)).order(), 4u);
  EXPECT_EQ(fitting_subgroup(builtin("frobenius:21")).order(), 7u);
  EXPECT_EQ(fitting_subgroup(builtin("diag-alt4cubed")).order(), 64u);
  EXPECT_EQ(fitting_subgroup(alternating_group(5)).order(), 1u);

  auto rep = series_report(symmetric_group(4));
  EXPECT_TRUE(rep.soluble);
  EXPECT_EQ(rep.fitting_order, 4u);
  EXPECT_EQ(rep.p_core_orders.at(2), 4u);
  EXPECT_EQ(rep.p_core_orders.at(3), 1u);
}

TEST(ElementaryAbelianTest, Examples)
{
  Group s4 = symmetric_group(4);
  Subgroup v4 = p_core(s4, 2);
  EXPECT_TRUE(is_elementary_abelian(v4, 2));
  EXPECT_FALSE(is_elementary_abelian(v4, 3));
  EXPECT_TRUE(is_elementary_abelian(Group::trivial(3), 5));
  EXPECT_FALSE(is_elementary_abelian(cyclic_group(4), 2));
  EXPECT_FALSE(is_elementary_abelian(symmetric_group(3), 2));
  EXPECT_TRUE(is_elementary_abelian(builtin("prod:cyclic:3:2"), 3));
}

TEST(FrobeniusTest, MatchesOracle)
{
  std::mt19937_64 rng(3);
  for (auto const &name : support::corpus_up_to(200)) {
    Group g = builtin(name);
    auto og = support::oracle_group(g);
    for (int i = 0; i < 4; ++i) {
      Perm x = g.random_element(rng);
      Group h(g.degree(), {x});
      auto oh = support::as_set(h);
      auto res = is_frobenius_with_complement(g, h);
      EXPECT_EQ(res.is_frobenius, oracle::is_frobenius(og, oh)) << name << " " << format_cycles(x);
      if (res.is_frobenius) {
        EXPECT_EQ(support::as_set(res.kernel_elements), oracle::frobenius_kernel(og, oh)) << name;
      }
    }
  }
}

TEST(FrobeniusTest, Examples)
{
  Group f21 = builtin("frobenius:21");
  auto res = is_frobenius_with_complement(f21, Group(7, {P("(2,3,5)(4,7,6)", 7)}));
  ASSERT_TRUE(res.is_frobenius);
  EXPECT_EQ(res.kernel->order(), 7u);

  Group s3 = symmetric_group(3);
  auto s3res = is_frobenius_with_complement(s3, Group(3, {P("(1,2)", 3)}));
  ASSERT_TRUE(s3res.is_frobenius);
  EXPECT_EQ(s3res.kernel->order(), 3u);

  EXPECT_FALSE(is_frobenius_with_complement(symmetric_group(4), Group(4, {P("(1,2)", 4)})).is_frobenius);
  EXPECT_FALSE(is_frobenius_with_complement(s3, s3).is_frobenius);
  EXPECT_THROW(is_frobenius_with_complement(alternating_group(4), Group(4, {P("(1,2)", 4)})),
               PreconditionError);
}

TEST(NormalSubsetTest, Construction)
{
  ConjClassTable t(alternating_group(4));
  NormalSubset a(t, {2, 1, 2});
  EXPECT_EQ(a.class_ids(), (std::vector<std::size_t>{1, 2}));
  EXPECT_EQ(a.prime(), 3u);
  EXPECT_EQ(a.size(), 8u);
  EXPECT_TRUE(std::is_sorted(a.elements().begin(), a.elements().end()));
  EXPECT_EQ(a.representatives().size(), 2u);

  EXPECT_THROW(NormalSubset(t, {}), PreconditionError);
  EXPECT_THROW(NormalSubset(t, {0}), PreconditionError);
  EXPECT_THROW(NormalSubset(t, {9}), PreconditionError);
  EXPECT_THROW(NormalSubset(t, {1, 3}), PreconditionError);

  ConjClassTable c6(cyclic_group(6));
  std::size_t order6 = 0;
  for (std::size_t i = 0; i < c6.size(); ++i)
    order6 = c6[i].element_order == 6 ? i : order6;
  EXPECT_THROW(NormalSubset(c6, {order6}), PreconditionError);
}

TEST(NormalSubsetTest, EnumerationAndCap)
{
  ConjClassTable t(alternating_group(4));
  EXPECT_EQ(normal_subsets_of_order_p(t, 3).size(), 3u);
  EXPECT_EQ(normal_subsets_of_order_p(t, 2).size(), 1u);
  EXPECT_TRUE(normal_subsets_of_order_p(t, 5).empty());
  EXPECT_THROW(normal_subsets_of_order_p(t, 4), PreconditionError);

  ConjClassTable cube(builtin("prod:alt:4:3"));
  EXPECT_EQ(classes_of_order(cube, 3).size(), 26u);
  try {
    normal_subsets_of_order_p(cube, 3);
    FAIL() << "expected the class cap to be enforced";
  } catch (const PreconditionError &e) {
    EXPECT_NE(std::string(e.what()).find("26"), std::string::npos);
  }
}
