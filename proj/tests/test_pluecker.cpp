#include "tquot/error.hpp"
#include "tquot/pluecker.hpp"

#include <gtest/gtest.h>

#include <algorithm>
#include <numeric>

using namespace tquot;

namespace {

// Leibniz expansion; small r only.
long long leibniz(const PointMatrix& x, const std::vector<int>& cols) {
  std::vector<int> perm(cols.size());
  std::iota(perm.begin(), perm.end(), 0);
  long long det = 0;
  do {
    int inversions = 0;
    for (std::size_t i = 0; i < perm.size(); ++i)
      for (std::size_t j = i + 1; j < perm.size(); ++j) inversions += perm[i] > perm[j];
    long long term = inversions % 2 ? -1 : 1;
    for (std::size_t i = 0; i < perm.size(); ++i) term *= x.at(static_cast<int>(i) + 1, cols[perm[i]]);
    det += term;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return det;
}

long long leibniz_eval(const PlueckerPolynomial& poly, const PointMatrix& x) {
  long long acc = 0;
  for (const auto& [factors, coef] : poly.terms()) {
    long long term = coef;
    for (const auto& tau : factors) term *= leibniz(x, {tau.entries().begin(), tau.entries().end()});
    acc += term;
  }
  return acc;
}

IndexTuple tup(std::vector<int> v, int n) { return IndexTuple(std::move(v), n); }

}  // namespace

TEST(Pluecker, SignedCoordinate) {
  const int seq1[] = {3, 1, 2};
  const auto a = signed_coordinate(seq1, 5);
  EXPECT_EQ(a.sign, 1);
  EXPECT_EQ(*a.tuple, tup({1, 2, 3}, 5));
  const int seq2[] = {2, 1, 3};
  EXPECT_EQ(signed_coordinate(seq2, 5).sign, -1);
  const int seq3[] = {2, 1, 2};
  EXPECT_EQ(signed_coordinate(seq3, 5).sign, 0);
}

TEST(Pluecker, MinorMatchesLeibniz) {
  Rng rng(5);
  for (int trial = 0; trial < 20; ++trial) {
    const auto x = random_point_matrix(3, 6, rng);
    EXPECT_EQ(x.rank(), 3);
    for (const auto& tau : all_index_tuples(3, 6)) {
      const std::vector<int> cols(tau.entries().begin(), tau.entries().end());
      EXPECT_EQ(x.minor(cols), BigInt(leibniz(x, cols)));
    }
    const int swapped[] = {2, 1, 3};
    EXPECT_EQ(x.minor(swapped), BigInt(-leibniz(x, {1, 2, 3})));
  }
}

TEST(Pluecker, BareissAgainstKnown) {
  EXPECT_EQ(exact_determinant({BigInt(2), BigInt(0), BigInt(1), BigInt(3)}, 2), BigInt(6));
  EXPECT_EQ(exact_determinant({BigInt(0), BigInt(1), BigInt(1), BigInt(0)}, 2), BigInt(-1));
  EXPECT_EQ(exact_determinant({BigInt(1), BigInt(2), BigInt(2), BigInt(4)}, 2), BigInt(0));
}

TEST(Pluecker, RelationsVanishIndependently) {
  Rng rng(17);
  std::vector<PointMatrix> points;
  for (int k = 0; k < 10; ++k) points.push_back(random_point_matrix(3, 6, rng));
  const auto tuples = all_index_tuples(3, 6);
  int checked = 0;
  for (const auto& alpha : tuples)
    for (const auto& beta : tuples)
      for (int k = 1; k <= 3; ++k) {
        if (alpha.at(k) <= beta.at(k)) continue;
        const auto rel = shuffle_relation(alpha, beta, k, 6);
        for (const auto& x : points) ASSERT_EQ(leibniz_eval(rel, x), 0) << alpha.str() << beta.str() << k;
        ++checked;
      }
  EXPECT_GT(checked, 100);
}

TEST(Pluecker, PlaneRelationIsThreeTermPluecker) {
  // In G(2,4): p13 p24 = p12 p34 + p14 p23.
  const auto rel = shuffle_relation(tup({2, 4}, 4), tup({1, 3}, 4), 1, 4);
  PlueckerPolynomial expected;
  expected.add(1, {tup({1, 3}, 4), tup({2, 4}, 4)});
  expected.add(-1, {tup({1, 2}, 4), tup({3, 4}, 4)});
  expected.add(-1, {tup({1, 4}, 4), tup({2, 3}, 4)});
  EXPECT_TRUE(rel == expected || rel == -expected);
}

TEST(Pluecker, RestrictionToBinomial) {
  const auto s = compute_setup(3, 7, {2, 5});
  const auto rel = shuffle_relation(tup({1, 4, 5}, 7), tup({1, 2, 6}, 7), 2, 7);
  const auto restricted = restrict_to_richardson(rel, s);
  PlueckerPolynomial expected;
  expected.add(1, {tup({1, 4, 5}, 7), tup({1, 2, 6}, 7)});
  expected.add(-1, {tup({1, 2, 5}, 7), tup({1, 4, 6}, 7)});
  EXPECT_TRUE(restricted == expected || restricted == -expected);
}

TEST(Pluecker, RichardsonSamplesKillVanishingCoordinates) {
  const auto s = compute_setup(3, 7, {2, 5});
  Rng rng(3);
  for (int k = 0; k < 10; ++k) {
    const auto x = sample_richardson_point(s, rng);
    EXPECT_EQ(x.rank(), 3);
    for (const auto& tau : all_index_tuples(3, 7))
      if (vanishes_on_richardson(tau, s)) {
        const std::vector<int> cols(tau.entries().begin(), tau.entries().end());
        EXPECT_EQ(leibniz(x, cols), 0) << tau.str();
      }
  }
}

TEST(Pluecker, ShuffleTermsRejectBadInput) {
  EXPECT_THROW(shuffle_terms(tup({1, 2}, 4), tup({3, 4}, 4), 1, 4), InputError);
  EXPECT_THROW(shuffle_terms(tup({3, 4}, 4), tup({1, 2}, 4), 3, 4), InputError);
}

TEST(Pluecker, ShuffleTermCount) {
  // |M| = r-k+1, |N| = k: binom(r+1, k) shuffles.
  EXPECT_EQ(shuffle_terms(tup({2, 4, 6}, 7), tup({1, 3, 5}, 7), 2, 7).size(), 6u);
  EXPECT_EQ(shuffle_terms(tup({2, 4, 6}, 7), tup({1, 3, 5}, 7), 1, 7).size(), 4u);
}

TEST(Pluecker, BinomialLaw) {
  for (const auto& [r, n, l] : std::vector<std::tuple<int, int, std::vector<int>>>{
           {2, 5, {2}}, {3, 7, {2, 5}}, {3, 7, {3, 5}}}) {
    const auto s = compute_setup(r, n, l);
    const Report rep = verify_binomial_law(s, 5, 11);
    EXPECT_TRUE(rep.passed()) << s.describe();
  }
}

TEST(Pluecker, OracleSweepAndMutation) {
  EXPECT_TRUE(verify_relation_oracle(2, 5, 10, 1).passed());
  const Report bad = verify_relation_oracle(2, 4, 10, 1, SignFault{0, 1});
  EXPECT_FALSE(bad.passed());
  ASSERT_FALSE(bad.counterexamples.empty());
  EXPECT_TRUE(bad.counterexamples.front().contains("matrix"));
}

TEST(Pluecker, TableauMonomial) {
  const auto f = tableau_monomial(Tableau::from_rows({{1, 1}, {2, 3}}), 3);
  EXPECT_EQ(f.coefficient({tup({1, 3}, 3), tup({1, 2}, 3)}), 1);
  EXPECT_THROW(tableau_monomial(Tableau::from_rows({{2}, {1}}), 3), InputError);
}
