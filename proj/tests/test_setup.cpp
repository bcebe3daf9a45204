#include "tquot/error.hpp"
#include "tquot/setup.hpp"

#include <gtest/gtest.h>

#include <numeric>

using namespace tquot;

namespace {

// Smallest a with r*a >= n*i, by counting up.
int naive_a(int r, int n, int i) {
  int a = 0;
  while (r * a < n * i) ++a;
  return a;
}

}  // namespace

TEST(Setup, ThreeSevenData) {
  const auto s = compute_setup(3, 7, {2, 5});
  EXPECT_EQ(s.a(0), 0);
  EXPECT_EQ(s.a(1), 3);
  EXPECT_EQ(s.a(2), 5);
  EXPECT_EQ(s.a(3), 7);
  EXPECT_EQ(s.c(1), 2);
  EXPECT_EQ(s.c(2), 1);
  EXPECT_EQ(s.l(0), 1);
  EXPECT_EQ(s.l(3), 8);
  EXPECT_EQ(s.block1(1), (Interval{1, 1}));
  EXPECT_EQ(s.block2(1), (Interval{2, 3}));
  EXPECT_EQ(s.block1(2), (Interval{4, 4}));
  EXPECT_EQ(s.block2(2), (Interval{5, 5}));
  EXPECT_TRUE(s.block2(3).empty());
  EXPECT_EQ(s.w(), IndexTuple({3, 5, 7}, 7));
  EXPECT_EQ(s.v(), IndexTuple({1, 3, 5}, 7));
  EXPECT_EQ(s.vl(), IndexTuple({1, 2, 5}, 7));
  EXPECT_EQ(s.coord_count(), 3);
  EXPECT_EQ(s.coord_label(2).block, 2);
  EXPECT_EQ(s.coord_label(2).value, 5);
  EXPECT_EQ(s.factor_dim(1), 1);
  EXPECT_EQ(s.factor_dim(2), 0);
}

TEST(Setup, AgreesWithNaiveCeiling) {
  for (int n = 2; n <= 12; ++n)
    for (int r = 1; r < n; ++r) {
      if (std::gcd(r, n) != 1) continue;
      for (const auto& l : admissible_l_choices(r, n)) {
        const auto s = compute_setup(r, n, l);
        for (int i = 0; i <= r; ++i) {
          EXPECT_EQ(s.a(i), naive_a(r, n, i));
          EXPECT_EQ(s.c(i), r * naive_a(r, n, i) - n * i);
        }
      }
    }
}

TEST(Setup, AdmissibleChoices) {
  EXPECT_EQ(admissible_l_choices(2, 7), (std::vector<std::vector<int>>{{2}, {3}, {4}}));
  EXPECT_EQ(admissible_l_choices(3, 5), (std::vector<std::vector<int>>{{2, 4}}));
  EXPECT_EQ(admissible_l_choices(3, 7).size(), 2u);
}

TEST(Setup, RejectsBadInput) {
  EXPECT_THROW(compute_setup(2, 4, {2}), InputError);
  EXPECT_THROW(compute_setup(3, 5, {3}), InputError);
  EXPECT_THROW(compute_setup(2, 5, {1}), InputError);
  EXPECT_THROW(compute_setup(2, 5, {4}), InputError);
  EXPECT_THROW(compute_setup(3, 7, {2}), InputError);
  EXPECT_THROW(IndexTuple({2, 2}, 5), InputError);
  EXPECT_THROW(IndexTuple({1, 6}, 5), InputError);
}

TEST(Setup, Vanishing) {
  const auto s = compute_setup(3, 7, {2, 5});
  EXPECT_FALSE(vanishes_on_richardson(IndexTuple({1, 2, 5}, 7), s));
  EXPECT_FALSE(vanishes_on_richardson(IndexTuple({3, 5, 7}, 7), s));
  EXPECT_TRUE(vanishes_on_richardson(IndexTuple({1, 2, 4}, 7), s));
  EXPECT_TRUE(vanishes_on_richardson(IndexTuple({4, 5, 6}, 7), s));
}

TEST(Setup, TupleOrder) {
  EXPECT_TRUE(tuple_leq(IndexTuple({1, 3}, 5), IndexTuple({2, 3}, 5)));
  EXPECT_FALSE(tuple_leq(IndexTuple({1, 4}, 5), IndexTuple({2, 3}, 5)));
  EXPECT_EQ(all_index_tuples(3, 6).size(), 20u);
}

TEST(Setup, Sweep) {
  const Report rep = verify_setup_sweep(12);
  EXPECT_TRUE(rep.passed()) << rep.counterexamples.front().dump();
  EXPECT_GT(rep.cases, 100u);
}
