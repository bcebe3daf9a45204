#include "tquot/error.hpp"
#include "tquot/lattice.hpp"
#include "tquot/straighten.hpp"

#include <gtest/gtest.h>

using namespace tquot;

TEST(Straighten, FrozenProduct) {
  const auto s = compute_setup(2, 5, {2});
  const auto a = Tableau::from_rows({{1, 1, 2, 2, 3}, {3, 4, 4, 5, 5}});
  const auto b = Tableau::from_rows({{1, 1, 2, 3, 3}, {2, 4, 4, 5, 5}});
  const auto expected = Tableau::from_rows({{1, 1, 1, 1, 2, 2, 2, 3, 3, 3}, {2, 3, 4, 4, 4, 4, 5, 5, 5, 5}});
  EXPECT_EQ(straighten_invariant_product(a, b, s, 1, 1), expected);
  EXPECT_EQ(straighten_invariant_product(b, a, s, 1, 1), expected);
  EXPECT_EQ(straighten_invariant_product(a, b, s, 1, 1, SwapPolicy::RightmostFirst), expected);
}

TEST(Straighten, SwapStepOnTwoColumns) {
  const auto s = compute_setup(3, 7, {2, 5});
  // P1 halves: columns (1,3,5) and (1,2,6) violate in row 2.
  const auto t = Tableau::from_columns(3, {{1, 3, 5}, {1, 2, 6}});
  const auto u = swap_step(t, 2, 1, Regime::P1, s);
  EXPECT_EQ(u, Tableau::from_columns(3, {{1, 2, 5}, {1, 3, 6}}));
  EXPECT_THROW(swap_step(t, 3, 1, Regime::P1, s), InputError);
  EXPECT_THROW(swap_step(t, 1, 1, Regime::P1, s), InputError);
}

TEST(Straighten, RejectsNonMembers) {
  const auto s = compute_setup(2, 5, {2});
  const auto a = Tableau::from_rows({{1, 1, 2, 2, 3}, {3, 4, 4, 5, 5}});
  const auto junk = Tableau::from_rows({{1, 1, 2, 2, 3}, {3, 3, 4, 5, 5}});
  EXPECT_THROW(straighten_invariant_product(a, junk, s, 1, 1), InputError);
}

TEST(Straighten, RegimesSortTheirAnchorRow) {
  const auto s = compute_setup(3, 7, {2, 5});
  const auto t = Tableau::from_columns(3, {{2, 4, 6}, {1, 3, 5}, {1, 2, 5}});
  const auto p2 = straighten_p2(Tableau::from_columns(3, {{3, 5, 7}, {2, 4, 6}}), s);
  EXPECT_TRUE(is_semistandard(p2));
  const auto p1 = straighten_p1(Tableau::from_columns(3, {{1, 3, 6}, {1, 2, 5}}), s);
  EXPECT_TRUE(is_semistandard(p1));
  EXPECT_TRUE(satisfies_p1(p1, s));
  EXPECT_THROW(straighten_p1(t, s), InputError);
}

TEST(Straighten, Sweep) {
  for (const auto& [r, n, l] : std::vector<std::tuple<int, int, std::vector<int>>>{
           {2, 5, {2}}, {3, 7, {2, 5}}, {2, 7, {2}}, {3, 5, {2, 4}}}) {
    const auto s = compute_setup(r, n, l);
    const Report rep = verify_straightening(s, 5, 9);
    EXPECT_TRUE(rep.passed()) << s.describe();
    EXPECT_GT(rep.cases, 0u);
  }
}
