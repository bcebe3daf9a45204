#include "tquot/error.hpp"
#include "tquot/tableau.hpp"

#include <gtest/gtest.h>

#include <algorithm>
#include <functional>

using namespace tquot;

namespace {

// Every filling of a 2 x 5 grid with row i in its row range, filtered by the
// definition directly.
std::vector<Tableau> fillings_2x5(const QuotientSetup& s) {
  std::vector<Tableau> out;
  const Interval r1 = s.row_range(1), r2 = s.row_range(2);
  std::vector<int> cell(10);
  std::function<void(int)> rec = [&](int k) {
    if (k == 10) {
      std::vector<std::vector<int>> rows{{cell.begin(), cell.begin() + 5}, {cell.begin() + 5, cell.end()}};
      for (const auto& row : rows)
        if (!std::is_sorted(row.begin(), row.end())) return;
      for (int j = 0; j < 5; ++j)
        if (rows[0][j] >= rows[1][j]) return;
      for (int v = 1; v <= 5; ++v)
        if (std::count(cell.begin(), cell.end(), v) != 2) return;
      out.push_back(Tableau::from_rows(rows));
      return;
    }
    const Interval iv = k < 5 ? r1 : r2;
    for (int v = iv.lo; v <= iv.hi; ++v) {
      cell[k] = v;
      rec(k + 1);
    }
  };
  rec(0);
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace

TEST(Tableau, FrozenTwoFive) {
  const auto s = compute_setup(2, 5, {2});
  const auto st = enumerate_st_bruteforce(s, 1);
  const std::vector<Tableau> expected{Tableau::from_rows({{1, 1, 2, 2, 3}, {3, 4, 4, 5, 5}}),
                                      Tableau::from_rows({{1, 1, 2, 3, 3}, {2, 4, 4, 5, 5}})};
  EXPECT_EQ(st.size(), 2u);
  for (const auto& t : expected) EXPECT_NE(std::find(st.begin(), st.end(), t), st.end()) << t.str();
}

TEST(Tableau, FrozenThreeSeven) {
  const auto s = compute_setup(3, 7, {2, 5});
  auto st = enumerate_st_bruteforce(s, 1);
  std::vector<Tableau> expected{
      Tableau::from_rows({{1, 1, 1, 2, 2, 2, 3}, {3, 3, 4, 4, 4, 5, 5}, {5, 6, 6, 6, 7, 7, 7}}),
      Tableau::from_rows({{1, 1, 1, 2, 2, 3, 3}, {2, 3, 4, 4, 4, 5, 5}, {5, 6, 6, 6, 7, 7, 7}}),
      Tableau::from_rows({{1, 1, 1, 2, 3, 3, 3}, {2, 2, 4, 4, 4, 5, 5}, {5, 6, 6, 6, 7, 7, 7}})};
  std::sort(expected.begin(), expected.end());
  EXPECT_EQ(st, expected);
}

TEST(Tableau, SearchMatchesExhaustiveFillings) {
  for (int l : {2, 3}) {
    const auto s = compute_setup(2, 5, {l});
    EXPECT_EQ(enumerate_st_bruteforce(s, 1), fillings_2x5(s));
  }
}

TEST(Tableau, FrozenCounts) {
  struct Case {
    int r, n;
    std::vector<int> l;
    std::vector<std::size_t> dims;
  };
  const std::vector<Case> cases{{2, 5, {2}, {2, 3, 4}}, {2, 5, {3}, {1, 1, 1}}, {3, 5, {2, 4}, {1, 1}},
                                {3, 7, {2, 5}, {3, 5}},  {3, 7, {3, 5}, {1, 1}}, {2, 7, {2}, {3, 6, 10}},
                                {2, 7, {3}, {2, 3, 4}},  {2, 7, {4}, {1, 1, 1}}};
  for (const auto& c : cases) {
    const auto s = compute_setup(c.r, c.n, c.l);
    for (std::size_t d = 1; d <= c.dims.size(); ++d)
      EXPECT_EQ(enumerate_st_bruteforce(s, static_cast<int>(d)).size(), c.dims[d - 1]) << s.describe() << " d=" << d;
  }
}

TEST(Tableau, Predicates) {
  const auto t = Tableau::from_rows({{1, 1, 2, 3, 3}, {2, 4, 4, 5, 5}});
  EXPECT_TRUE(is_semistandard(t));
  EXPECT_FALSE(is_semistandard(Tableau::from_rows({{1, 2}, {1, 3}})));
  EXPECT_FALSE(is_row_semistandard(Tableau::from_rows({{2, 1}, {3, 4}})));
  EXPECT_EQ(weight(t, 5), (std::vector<int>{2, 2, 2, 2, 2}));
  EXPECT_THROW(Tableau::from_rows({{1, 2}, {3}}), InputError);
  EXPECT_EQ(product(t.column_range(1, 2), t.column_range(3, 5)), t);
}

TEST(Tableau, BoxPartition) {
  const auto s = compute_setup(3, 7, {2, 5});
  const auto bp = box_partition(s, 2);
  EXPECT_EQ(bp.b1(1), (BoxRun{1, {1, 14}}));
  EXPECT_EQ(bp.b2(1), (BoxRun{2, {1, 4}}));
  EXPECT_EQ(bp.b1(2), (BoxRun{2, {5, 14}}));
  EXPECT_EQ(bp.b2(2), (BoxRun{3, {1, 2}}));
  EXPECT_EQ(bp.b1(3), (BoxRun{3, {3, 14}}));
  EXPECT_TRUE(bp.b2(3).cols.empty());
}

TEST(Tableau, SplitPredicates) {
  const auto s = compute_setup(2, 5, {2});
  const auto t = Tableau::from_rows({{1, 1, 2, 3, 3}, {2, 4, 4, 5, 5}});
  const auto halves = split(t, s, 1);
  EXPECT_EQ(halves.first, Tableau::from_rows({{1, 1}, {2, 4}}));
  EXPECT_TRUE(satisfies_p1(halves.first, s));
  EXPECT_TRUE(satisfies_p2(halves.second, s));
  EXPECT_FALSE(satisfies_p2(halves.first, s));
}

TEST(Tableau, AppendixStepsRejectNonMember) {
  const auto s = compute_setup(2, 5, {2});
  EXPECT_TRUE(check_appendix_steps(Tableau::from_rows({{1, 1, 2, 3, 3}, {2, 4, 4, 5, 5}}), s, 1).ok());
  EXPECT_FALSE(check_appendix_steps(Tableau::from_rows({{1, 1, 2, 2, 3}, {3, 3, 4, 5, 5}}), s, 1).ok());
}

TEST(Tableau, Sweeps) {
  for (const auto& [r, n, l] : std::vector<std::tuple<int, int, std::vector<int>>>{
           {2, 5, {2}}, {3, 7, {2, 5}}, {2, 7, {2}}}) {
    const auto s = compute_setup(r, n, l);
    for (int d = 1; d <= 2; ++d) {
      EXPECT_TRUE(verify_tableau_structure(s, d).passed()) << s.describe();
      EXPECT_TRUE(verify_t_invariance_equivalence(s, d, 7, 300000, 2000).passed()) << s.describe();
    }
  }
}
