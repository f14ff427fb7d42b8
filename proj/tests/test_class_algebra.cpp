#include <gtest/gtest.h>

#include <random>
#include <vector>

#include "classquare/builtins.hpp"
#include "classquare/class_algebra.hpp"
#include "classquare/error.hpp"
#include "classquare/theorems.hpp"

#include "oracle.hpp"
#include "support.hpp"

using namespace classquare;

namespace
{

Perm P(const char *text, std::size_t degree) { return parse_cycles(text, degree); }

} // namespace

TEST(ClassAlgebraTest, CoefficientsMatchOracle)
{
  for (auto const &name : support::corpus_up_to(200)) {
    ConjClassTable t(builtin(name));
    std::vector<oracle::Set> cls;
    for (std::size_t i = 0; i < t.size(); ++i)
      cls.push_back(support::as_set(t.class_elements(i)));
    for (std::size_t i = 0; i < t.size(); ++i) {
      for (std::size_t j = 0; j < t.size(); ++j) {
        for (std::size_t k = 0; k < t.size(); ++k) {
          auto want = oracle::class_mult(cls[i], cls[j], oracle::raw(t[k].representative));
          EXPECT_EQ(class_mult_coefficient(t, i, j, k).count, want) << name;
        }
      }
    }
  }
}

TEST(ClassAlgebraTest, MassIdentity)
{
  for (auto const &name : support::corpus_up_to(2000)) {
    ConjClassTable t(builtin(name));
    if (t.size() > 20)
      continue;
    for (std::size_t i = 0; i < t.size(); ++i) {
      for (std::size_t j = 0; j < t.size(); ++j) {
        std::uint64_t total = 0;
        for (std::size_t k = 0; k < t.size(); ++k)
          total += class_mult_coefficient(t, i, j, k).count * t[k].size();
        EXPECT_EQ(total, t[i].size() * t[j].size()) << name;
      }
    }
  }
}

TEST(ClassAlgebraTest, IndependentOfRepresentative)
{
  std::mt19937_64 rng(11);
  for (auto name : {"sym:4", "alt:5", "frobenius:21", "diag-alt4cubed"}) {
    ConjClassTable t(builtin(name));
    std::uniform_int_distribution<std::size_t> pick(0, t.size() - 1);
    for (int trial = 0; trial < 20; ++trial) {
      std::size_t i = pick(rng), j = pick(rng), k = pick(rng);
      auto members = t.class_elements(k);
      auto want = class_mult_coefficient(t, i, j, k).count;
      for (int r = 0; r < 3; ++r) {
        std::uniform_int_distribution<std::size_t> m(0, members.size() - 1);
        EXPECT_EQ(class_mult_count(t, i, j, members[m(rng)]), want) << name;
      }
    }
  }
}

TEST(ClassAlgebraTest, Sym3Examples)
{
  ConjClassTable t(symmetric_group(3));
  auto tr = t.class_of(P("(1,2)", 3));
  auto cyc = t.class_of(P("(1,2,3)", 3));
  EXPECT_EQ(class_mult_coefficient(t, tr, tr, cyc).count, 3u);
  EXPECT_EQ(class_mult_coefficient(t, tr, tr, 0).count, 3u);
  EXPECT_EQ(class_mult_coefficient(t, 0, tr, tr).count, 1u);
  EXPECT_EQ(class_mult_coefficient(t, cyc, cyc, cyc).count, 1u);
  EXPECT_THROW(class_mult_coefficient(t, 0, 0, 7), PreconditionError);
}

TEST(AppendixTest, Examples)
{
  ConjClassTable a4(alternating_group(4));
  auto r4 = appendix_class_square_test(a4);
  EXPECT_FALSE(r4.passed);
  EXPECT_EQ(r4.offending, classes_of_order(a4, 3));

  ConjClassTable s3(symmetric_group(3));
  auto r3 = appendix_class_square_test(s3);
  EXPECT_FALSE(r3.passed);
  EXPECT_EQ(r3.offending, (std::vector<std::size_t>{s3.class_of(P("(1,2,3)", 3))}));

  auto r5 = appendix_class_square_test(ConjClassTable(alternating_group(5)));
  EXPECT_TRUE(r5.passed);
  EXPECT_EQ(r5.tested.size(), 3u);

  for (auto name : {"alt:6", "psl2:7", "psl2:11", "psl2:13"})
    EXPECT_TRUE(appendix_class_square_test(ConjClassTable(builtin(name))).passed) << name;
}

TEST(AppendixTest, AgreesWithSingleClassScan)
{
  for (auto const &name : support::corpus_up_to(2000)) {
    ConjClassTable t(builtin(name));
    auto res = appendix_class_square_test(t);
    std::vector<std::size_t> offending;
    for (auto id : res.tested) {
      if (check_hypothesis(NormalSubset(t, {id})).holds)
        offending.push_back(id);
    }
    EXPECT_EQ(res.offending, offending) << name;
    EXPECT_EQ(res.passed, offending.empty()) << name;
  }
}
