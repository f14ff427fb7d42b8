#include <gtest/gtest.h>

#include <set>
#include <vector>

#include "classquare/builtins.hpp"
#include "classquare/error.hpp"
#include "classquare/theorems.hpp"

#include "oracle.hpp"
#include "support.hpp"

using namespace classquare;

namespace
{

Perm P(const char *text, std::size_t degree) { return parse_cycles(text, degree); }

NormalSubset class_of(const ConjClassTable &t, const Perm &x) { return NormalSubset(t, {t.class_of(x)}); }

std::vector<std::size_t> order_p_classes(const ConjClassTable &t, std::uint64_t p)
{
  return classes_of_order(t, p);
}

} // namespace

TEST(HypothesisTest, MatchesOracleOnEverySubset)
{
  for (auto const &name : support::corpus_up_to(700)) {
    Group g = builtin(name);
    ConjClassTable t(g);
    for (auto p : prime_divisors(g.order())) {
      if (order_p_classes(t, p).size() > 6)
        continue;
      for (auto const &a : normal_subsets_of_order_p(t, p)) {
        auto got = check_hypothesis(a);
        auto want = oracle::products(support::as_set(a.elements()), p);
        EXPECT_EQ(got.holds, want.all_p_elements) << name << " p=" << p;
        EXPECT_EQ(got.product_orders, want.orders) << name << " p=" << p;
        EXPECT_EQ(got.products_scanned, a.size() * a.size());
        if (!got.holds) {
          ASSERT_TRUE(got.counterexample.has_value());
          auto [x, y] = *got.counterexample;
          EXPECT_FALSE(is_p_element(x * y, p));
        }
      }
    }
  }
}

TEST(HypothesisTest, Alt4OrderThreeClass)
{
  ConjClassTable t(alternating_group(4));
  for (auto id : order_p_classes(t, 3)) {
    NormalSubset a(t, {id});
    auto h = check_hypothesis(a);
    EXPECT_TRUE(h.holds);
    EXPECT_EQ(h.product_orders, (std::set<std::uint64_t>{3}));
  }
  auto both = check_hypothesis(NormalSubset(t, order_p_classes(t, 3)));
  EXPECT_FALSE(both.holds);
}

TEST(HypothesisTest, Alt4SweepHasTwoHoldingSubsets)
{
  ConjClassTable t(alternating_group(4));
  auto subsets = normal_subsets_of_order_p(t, 3);
  ASSERT_EQ(subsets.size(), 3u);
  std::size_t holding = 0;
  for (auto const &a : subsets)
    holding += check_hypothesis(a).holds;
  EXPECT_EQ(holding, 2u);
}

TEST(HypothesisTest, TranspositionsGiveOrdersTwoAndThree)
{
  for (std::size_t n : {4, 5}) {
    ConjClassTable t(symmetric_group(n));
    auto h = check_hypothesis(class_of(t, P("(1,2)", n)));
    EXPECT_FALSE(h.holds);
    EXPECT_TRUE(h.product_orders.count(2));
    EXPECT_TRUE(h.product_orders.count(3));
  }
}

TEST(HypothesisTest, Alt5FiveCyclesFail)
{
  ConjClassTable t(alternating_group(5));
  EXPECT_FALSE(check_hypothesis(class_of(t, P("(1,2,3,4,5)", 5))).holds);
  EXPECT_FALSE(check_hypothesis(class_of(t, P("(1,2,3,5,4)", 5))).holds);
}

TEST(TheoremATest, Alt4)
{
  Group g = alternating_group(4);
  ConjClassTable t(g);
  auto rep = verify_theorem_A(class_of(t, P("(2,3,4)", 4)));
  EXPECT_EQ(rep.verdict, Verdict::consistent);
  EXPECT_EQ(rep.q_order, 12u);
  EXPECT_TRUE(rep.q_soluble);
  EXPECT_EQ(rep.op_order, 1u);
  ASSERT_TRUE(rep.branch.has_value());
  EXPECT_EQ(rep.branch->fitting_order, 4u);
  EXPECT_TRUE(rep.branch->fitting_p_prime);
  EXPECT_EQ(rep.branch->quotient_order, 3u);
  EXPECT_TRUE(rep.branch->quotient_elementary_abelian);
  EXPECT_EQ(rep.all_products_order_p, Status::holds);
  EXPECT_EQ(rep.frobenius.status, Status::holds);
  EXPECT_EQ(rep.frobenius.kernel_order, 4u);
}

TEST(TheoremATest, Frobenius21)
{
  Group g = builtin("frobenius:21");
  ConjClassTable t(g);
  auto ids = order_p_classes(t, 3);
  ASSERT_EQ(ids.size(), 2u);
  for (auto id : ids) {
    auto rep = verify_theorem_A(NormalSubset(t, {id}));
    EXPECT_EQ(rep.verdict, Verdict::consistent);
    ASSERT_TRUE(rep.branch.has_value());
    EXPECT_EQ(rep.branch->fitting_order, 7u);
    EXPECT_EQ(rep.branch->quotient_order, 3u);
    EXPECT_EQ(rep.hypothesis.product_orders, (std::set<std::uint64_t>{3}));
    EXPECT_EQ(rep.frobenius.status, Status::holds);
    EXPECT_EQ(rep.frobenius.kernel_order, 7u);
  }
}

TEST(TheoremATest, DiagonalUnionOfTwoClasses)
{
  Group g = builtin("diag-alt4cubed");
  ConjClassTable t(g);
  auto ids = order_p_classes(t, 3);
  bool found = false;
  for (std::size_t i = 0; i < ids.size() && !found; ++i) {
    for (std::size_t j = i + 1; j < ids.size() && !found; ++j) {
      NormalSubset a(t, {ids[i], ids[j]});
      if (closure(g, a.elements()).order() != g.order())
        continue;
      auto rep = verify_theorem_A(a);
      if (!rep.hypothesis.holds)
        continue;
      found = true;
      EXPECT_EQ(rep.verdict, Verdict::consistent);
      EXPECT_EQ(rep.hypothesis.product_orders, (std::set<std::uint64_t>{3}));
      ASSERT_TRUE(rep.branch.has_value());
      EXPECT_EQ(rep.branch->fitting_order, 64u);
      EXPECT_EQ(rep.branch->quotient_order, 9u);
      EXPECT_TRUE(rep.branch->quotient_elementary_abelian);
    }
  }
  EXPECT_TRUE(found);
}

TEST(TheoremATest, DiagonalSingleClass)
{
  Group g = builtin("diag-alt4cubed");
  ConjClassTable t(g);
  auto rep = verify_theorem_A(class_of(t, P("(2,3,4)(6,7,8)(10,11,12)", 12)));
  EXPECT_EQ(rep.verdict, Verdict::consistent);
  EXPECT_EQ(rep.q_order, 192u);
  ASSERT_TRUE(rep.branch.has_value());
  EXPECT_EQ(rep.branch->fitting_order, 64u);
  EXPECT_EQ(rep.branch->quotient_order, 3u);
}

TEST(TheoremATest, NontrivialPCoreHasNoBranch)
{
  ConjClassTable t(builtin("prod:cyclic:3:2"));
  auto rep = verify_theorem_A(NormalSubset(t, {order_p_classes(t, 3).front()}));
  EXPECT_EQ(rep.verdict, Verdict::consistent);
  EXPECT_EQ(rep.op_order, 9u);
  EXPECT_FALSE(rep.branch.has_value());
  EXPECT_EQ(rep.all_products_order_p, Status::not_applicable);
  EXPECT_EQ(rep.frobenius.status, Status::not_applicable);
}

TEST(TheoremATest, HypothesisFailureStopsEarly)
{
  ConjClassTable t(symmetric_group(4));
  auto rep = verify_theorem_A(class_of(t, P("(1,2)", 4)));
  EXPECT_EQ(rep.verdict, Verdict::hypothesis_failed);
  EXPECT_EQ(rep.q_order, 0u);
  EXPECT_TRUE(rep.violations.empty());
}

TEST(TheoremATest, SoundOnEverySweptSubset)
{
  for (auto const &name : support::corpus_up_to(2000)) {
    Group g = builtin(name);
    ConjClassTable t(g);
    for (auto p : prime_divisors(g.order())) {
      if (order_p_classes(t, p).size() > 8)
        continue;
      for (auto const &a : normal_subsets_of_order_p(t, p)) {
        auto rep = verify_theorem_A(a);
        EXPECT_NE(rep.verdict, Verdict::theorem_violation) << name << " p=" << p;
        for (auto [sub, parent] : rep.subgroup_orders)
          EXPECT_EQ(parent % sub, 0u) << name;
        if (rep.verdict == Verdict::consistent && rep.op_order == 1) {
          EXPECT_EQ(rep.hypothesis.product_orders, (std::set<std::uint64_t>{p})) << name;
        }
      }
    }
  }
}

TEST(TheoremATest, SimpleGroupsHaveNoHoldingSubset)
{
  for (auto name : {"alt:5", "alt:6", "psl2:7", "psl2:11", "psl2:13"}) {
    Group g = builtin(name);
    ConjClassTable t(g);
    for (auto p : prime_divisors(g.order())) {
      for (auto const &a : normal_subsets_of_order_p(t, p))
        EXPECT_FALSE(check_hypothesis(a).holds) << name << " p=" << p;
    }
  }
}

TEST(CorollaryTest, FrobeniusNotApplicable)
{
  Group c3 = cyclic_group(3);
  ConjClassTable t(c3);
  auto res = verify_corollary_frobenius(c3, NormalSubset(t, {1}));
  EXPECT_EQ(res.status, Status::not_applicable);

  ConjClassTable a4(alternating_group(4));
  auto two = verify_corollary_frobenius(a4.group(), NormalSubset(a4, order_p_classes(a4, 3)));
  EXPECT_EQ(two.status, Status::not_applicable);
}

TEST(CorollaryTest, OrdersStatus)
{
  HypothesisCheck h;
  h.p = 3;
  h.product_orders = {1, 3};
  EXPECT_EQ(verify_corollary_orders(h, true), Status::fails);
  EXPECT_EQ(verify_corollary_orders(h, false), Status::not_applicable);
  h.product_orders = {3};
  EXPECT_EQ(verify_corollary_orders(h, true), Status::holds);
  h.holds = false;
  EXPECT_EQ(verify_corollary_orders(h, true), Status::not_applicable);
}

TEST(IndexPFrobeniusTest, Examples)
{
  auto f21 = verify_theorem_GN(ConjClassTable(builtin("frobenius:21")), 3);
  EXPECT_EQ(f21.status, Status::holds);
  EXPECT_EQ(f21.normal_subgroup_order, 7u);
  EXPECT_EQ(f21.kernel_orders, (std::vector<std::uint64_t>{7, 7}));

  auto s3 = verify_theorem_GN(ConjClassTable(symmetric_group(3)), 2);
  EXPECT_EQ(s3.status, Status::not_applicable);

  auto c33 = verify_theorem_GN(ConjClassTable(builtin("prod:cyclic:3:2")), 3);
  EXPECT_EQ(c33.status, Status::not_applicable);

  EXPECT_THROW(verify_theorem_GN(ConjClassTable(symmetric_group(3)), 6), PreconditionError);
}

TEST(IndexPFrobeniusTest, NeverFailsOnCorpus)
{
  for (auto const &name : support::corpus_up_to(2000)) {
    ConjClassTable t(builtin(name));
    for (auto p : prime_divisors(t.group().order()))
      EXPECT_NE(verify_theorem_GN(t, p).status, Status::fails) << name << " p=" << p;
  }
}
