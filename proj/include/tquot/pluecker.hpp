#pragma once

#include "tquot/numeric.hpp"
#include "tquot/report.hpp"
#include "tquot/setup.hpp"
#include "tquot/tableau.hpp"

#include <cstdint>
#include <map>
#include <optional>
#include <random>
#include <span>
#include <vector>

namespace tquot {

/// p of an arbitrary sequence under the alternating extension.
struct SignedCoordinate {
  int sign = 0;                     // +1, -1, or 0 on a repeated entry
  std::optional<IndexTuple> tuple;  // sorted tuple when sign != 0
};

SignedCoordinate signed_coordinate(std::span<const int> seq, int n);

/// A multiset of index tuples, kept sorted; the product of its coordinates.
using PlueckerMonomial = std::vector<IndexTuple>;

/// Integer combination of products of Pluecker coordinates. Keys are sorted
/// multisets of sorted tuples; zero coefficients are never stored.
class PlueckerPolynomial {
 public:
  using Terms = std::map<PlueckerMonomial, std::int64_t>;

  static PlueckerPolynomial monomial(PlueckerMonomial factors, std::int64_t coef = 1);

  void add(std::int64_t coef, PlueckerMonomial factors);

  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }
  std::int64_t coefficient(PlueckerMonomial factors) const;

  PlueckerPolynomial operator-() const;
  friend PlueckerPolynomial operator+(const PlueckerPolynomial& a, const PlueckerPolynomial& b);
  friend PlueckerPolynomial operator-(const PlueckerPolynomial& a, const PlueckerPolynomial& b);
  friend PlueckerPolynomial operator*(const PlueckerPolynomial& a, const PlueckerPolynomial& b);
  friend bool operator==(const PlueckerPolynomial&, const PlueckerPolynomial&) = default;

 private:
  Terms terms_;
};

/// f_Gamma: the product of the coordinates indexed by the columns.
/// Throws InputError unless every column is strictly increasing.
PlueckerPolynomial tableau_monomial(const Tableau& t, int n);

/// One summand of the shuffle relation P(alpha, beta, k).
///
/// `chosen` lists positions (into M ++ N, M = alpha_k..alpha_r,
/// N = beta_1..beta_k) that go to the alpha side.
struct ShuffleTerm {
  std::vector<int> chosen;
  int shuffle_sign = 1;
  std::vector<int> alpha_seq;  // alpha_1..alpha_{k-1} ++ chosen
  std::vector<int> beta_seq;   // rest ++ beta_{k+1}..beta_r
  SignedCoordinate alpha;
  SignedCoordinate beta;
  bool identity = false;
  bool transposition = false;  // exchanges exactly alpha_k and beta_k

  std::int64_t coefficient() const { return std::int64_t{shuffle_sign} * alpha.sign * beta.sign; }
};

/// Every shuffle of M and N, including those with repeated entries.
/// Throws InputError unless 1 <= k <= r and alpha_k > beta_k.
std::vector<ShuffleTerm> shuffle_terms(const IndexTuple& alpha, const IndexTuple& beta, int k, int n);

PlueckerPolynomial relation_from_terms(std::span<const ShuffleTerm> terms);

/// Sum over shuffles of sign * p_{alpha^sigma} p_{beta^sigma}; vanishes on
/// every point of G(r, n).
PlueckerPolynomial shuffle_relation(const IndexTuple& alpha, const IndexTuple& beta, int k, int n);

/// Integer r x n matrix; its row span is a point of G(r, n) when full rank.
class PointMatrix {
 public:
  PointMatrix(int rows, int cols);
  static PointMatrix from_rows(const std::vector<std::vector<std::int64_t>>& rows);

  int rows() const { return rows_; }
  int cols() const { return cols_; }
  /// 1-based.
  std::int64_t at(int i, int j) const { return data_[index(i, j)]; }
  void set(int i, int j, std::int64_t v) { data_[index(i, j)] = v; }
  std::vector<std::vector<std::int64_t>> row_lists() const;

  /// Determinant of the r x r submatrix on the given columns (any order).
  BigInt minor(std::span<const int> columns) const;
  int rank() const;

 private:
  std::size_t index(int i, int j) const {
    return static_cast<std::size_t>(i - 1) * static_cast<std::size_t>(cols_) +
           static_cast<std::size_t>(j - 1);
  }

  int rows_;
  int cols_;
  std::vector<std::int64_t> data_;
};

/// Fraction-free (Bareiss) determinant of a row-major square matrix.
BigInt exact_determinant(std::vector<BigInt> m, std::size_t size);

/// Evaluates polynomials at one matrix, memoizing minors.
class MinorOracle {
 public:
  explicit MinorOracle(const PointMatrix& x) : x_(x) {}

  const BigInt& coordinate(const IndexTuple& tau);
  BigInt evaluate(const PlueckerPolynomial& poly);

 private:
  const PointMatrix& x_;
  std::map<IndexTuple, BigInt> cache_;
};

BigInt evaluate(const PlueckerPolynomial& poly, const PointMatrix& x);

using Rng = std::mt19937_64;

/// Full-rank matrix with entries uniform in [-9, 9].
PointMatrix random_point_matrix(int r, int n, Rng& rng);

/// Full-rank matrix whose row t is supported on columns [l_{t-1}, a_t].
/// Such a row span lies in X_w (rows 1..t inside V_{a_t}) and in X^{v_l}
/// (rows r-t+1..r inside span(e_{l_{r-t}}, ..., e_n)).
PointMatrix sample_richardson_point(const QuotientSetup& s, Rng& rng);
PointMatrix sample_richardson_point(const QuotientSetup& s, std::uint64_t seed);

/// Drops every term with a factor p_tau vanishing on X^{v_l}_w.
PlueckerPolynomial restrict_to_richardson(const PlueckerPolynomial& poly, const QuotientSetup& s);

enum class Regime { P1, P2 };

/// Row where two columns alpha, beta fail alpha_t <= beta_t: the first such
/// row for P1, the last for P2.
std::optional<int> violation_row(const IndexTuple& alpha, const IndexTuple& beta, Regime regime);

/// Survival analysis of P(alpha, beta, k) on X^{v_l}_w.
struct BinomialAnalysis {
  int k = 0;
  std::vector<ShuffleTerm> offenders;  // non-identity, non-transposition terms that survive
  PlueckerPolynomial restricted;
  PlueckerPolynomial expected;         // p_alpha p_beta - p_alpha' p_beta'
  IndexTuple alpha_swapped;
  IndexTuple beta_swapped;

  bool binomial() const { return restricted == expected || restricted == -expected; }
  bool ok() const { return offenders.empty() && binomial(); }
};

BinomialAnalysis analyze_binomial(const IndexTuple& alpha, const IndexTuple& beta, Regime regime,
                                  const QuotientSetup& s);

/// All two-column column-standard tableaux satisfying the regime's predicate
/// that have a violation row, as (alpha, beta) column pairs.
std::vector<std::pair<IndexTuple, IndexTuple>> regime_pairs(const QuotientSetup& s, Regime regime);

/// Survival claim plus oracle vanishing of each surviving binomial on
/// `samples` Richardson points, for both regimes.
Report verify_binomial_law(const QuotientSetup& s, int samples, std::uint64_t seed);

/// Flip the sign of one shuffle term inside one relation of the sweep.
struct SignFault {
  std::size_t relation = 0;
  std::size_t term = 1;
};

/// Every valid (alpha, beta, k) in G(r, n) evaluates to 0 on `samples`
/// random full-rank matrices. When |I(r,n)|^2 exceeds `pair_cap`, a seeded
/// random subset of pairs of that size is used instead.
Report verify_relation_oracle(int r, int n, int samples, std::uint64_t seed,
                              std::optional<SignFault> fault = std::nullopt,
                              std::size_t pair_cap = 40000);

nlohmann::json to_json(const PlueckerPolynomial& poly);
nlohmann::json to_json(const PointMatrix& x);

}  // namespace tquot
