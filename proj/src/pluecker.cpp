#include "tquot/pluecker.hpp"

#include "tquot/error.hpp"

#include <algorithm>
#include <numeric>

namespace tquot {

namespace {

int permutation_sign(std::span<const int> seq) {
  int inversions = 0;
  for (std::size_t i = 0; i < seq.size(); ++i)
    for (std::size_t j = i + 1; j < seq.size(); ++j)
      if (seq[i] > seq[j]) ++inversions;
  return inversions % 2 == 0 ? 1 : -1;
}

std::vector<int> to_vector(const IndexTuple& t) {
  return std::vector<int>(t.entries().begin(), t.entries().end());
}

}  // namespace

SignedCoordinate signed_coordinate(std::span<const int> seq, int n) {
  std::vector<int> sorted(seq.begin(), seq.end());
  std::sort(sorted.begin(), sorted.end());
  if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) return {};
  return {permutation_sign(seq), IndexTuple(std::move(sorted), n)};
}

// ---------------------------------------------------------------------------
// PlueckerPolynomial

PlueckerPolynomial PlueckerPolynomial::monomial(PlueckerMonomial factors, std::int64_t coef) {
  PlueckerPolynomial p;
  p.add(coef, std::move(factors));
  return p;
}

void PlueckerPolynomial::add(std::int64_t coef, PlueckerMonomial factors) {
  if (coef == 0) return;
  std::sort(factors.begin(), factors.end());
  auto [it, inserted] = terms_.try_emplace(std::move(factors), coef);
  if (!inserted) {
    it->second += coef;
    if (it->second == 0) terms_.erase(it);
  }
}

std::int64_t PlueckerPolynomial::coefficient(PlueckerMonomial factors) const {
  std::sort(factors.begin(), factors.end());
  auto it = terms_.find(factors);
  return it == terms_.end() ? 0 : it->second;
}

PlueckerPolynomial PlueckerPolynomial::operator-() const {
  PlueckerPolynomial out = *this;
  for (auto& [mono, coef] : out.terms_) coef = -coef;
  return out;
}

PlueckerPolynomial operator+(const PlueckerPolynomial& a, const PlueckerPolynomial& b) {
  PlueckerPolynomial out = a;
  for (const auto& [mono, coef] : b.terms_) out.add(coef, mono);
  return out;
}

PlueckerPolynomial operator-(const PlueckerPolynomial& a, const PlueckerPolynomial& b) { return a + (-b); }

PlueckerPolynomial operator*(const PlueckerPolynomial& a, const PlueckerPolynomial& b) {
  PlueckerPolynomial out;
  for (const auto& [ma, ca] : a.terms_)
    for (const auto& [mb, cb] : b.terms_) {
      PlueckerMonomial m = ma;
      m.insert(m.end(), mb.begin(), mb.end());
      out.add(ca * cb, std::move(m));
    }
  return out;
}

PlueckerPolynomial tableau_monomial(const Tableau& t, int n) {
  PlueckerMonomial factors;
  for (int j = 1; j <= t.cols(); ++j) factors.emplace_back(t.column(j), n);
  return PlueckerPolynomial::monomial(std::move(factors));
}

// ---------------------------------------------------------------------------
// Shuffle relations

std::vector<ShuffleTerm> shuffle_terms(const IndexTuple& alpha, const IndexTuple& beta, int k, int n) {
  const int r = static_cast<int>(alpha.size());
  if (static_cast<int>(beta.size()) != r) throw InputError("shuffle relation on tuples of different length");
  if (k < 1 || k > r) throw InputError("shuffle relation needs 1 <= k <= r, got k=" + std::to_string(k));
  if (alpha.at(static_cast<std::size_t>(k)) <= beta.at(static_cast<std::size_t>(k)))
    throw InputError("shuffle relation needs alpha_k > beta_k; got " + alpha.str() + ", " + beta.str() +
                     ", k=" + std::to_string(k));

  // seq = M ++ N with M = alpha_k..alpha_r, N = beta_1..beta_k
  std::vector<int> seq;
  for (int t = k; t <= r; ++t) seq.push_back(alpha.at(static_cast<std::size_t>(t)));
  for (int t = 1; t <= k; ++t) seq.push_back(beta.at(static_cast<std::size_t>(t)));
  const int total = r + 1;
  const int msize = r - k + 1;

  std::vector<int> identity_pick(static_cast<std::size_t>(msize));
  std::iota(identity_pick.begin(), identity_pick.end(), 0);
  std::vector<int> swap_pick(identity_pick.begin() + 1, identity_pick.end());
  swap_pick.push_back(total - 1);

  std::vector<ShuffleTerm> out;
  std::vector<bool> mask(static_cast<std::size_t>(total), false);
  std::fill(mask.begin(), mask.begin() + msize, true);
  do {
    ShuffleTerm term;
    std::vector<int> rest;
    for (int p = 0; p < total; ++p) (mask[static_cast<std::size_t>(p)] ? term.chosen : rest).push_back(p);

    std::vector<int> order = term.chosen;
    order.insert(order.end(), rest.begin(), rest.end());
    term.shuffle_sign = permutation_sign(order);

    for (int t = 1; t < k; ++t) term.alpha_seq.push_back(alpha.at(static_cast<std::size_t>(t)));
    for (int p : term.chosen) term.alpha_seq.push_back(seq[static_cast<std::size_t>(p)]);
    for (int p : rest) term.beta_seq.push_back(seq[static_cast<std::size_t>(p)]);
    for (int t = k + 1; t <= r; ++t) term.beta_seq.push_back(beta.at(static_cast<std::size_t>(t)));

    term.alpha = signed_coordinate(term.alpha_seq, n);
    term.beta = signed_coordinate(term.beta_seq, n);
    term.identity = term.chosen == identity_pick;
    term.transposition = term.chosen == swap_pick;
    out.push_back(std::move(term));
  } while (std::prev_permutation(mask.begin(), mask.end()));
  return out;
}

PlueckerPolynomial relation_from_terms(std::span<const ShuffleTerm> terms) {
  PlueckerPolynomial poly;
  for (const auto& term : terms) {
    const auto coef = term.coefficient();
    if (coef == 0) continue;
    poly.add(coef, {*term.alpha.tuple, *term.beta.tuple});
  }
  return poly;
}

PlueckerPolynomial shuffle_relation(const IndexTuple& alpha, const IndexTuple& beta, int k, int n) {
  return relation_from_terms(shuffle_terms(alpha, beta, k, n));
}

// ---------------------------------------------------------------------------
// Exact minors

BigInt exact_determinant(std::vector<BigInt> m, std::size_t size) {
  if (size == 0) return 1;
  auto at = [&](std::size_t i, std::size_t j) -> BigInt& { return m[i * size + j]; };
  int sign = 1;
  BigInt prev = 1;
  for (std::size_t k = 0; k + 1 < size; ++k) {
    if (at(k, k) == 0) {
      std::size_t p = k + 1;
      while (p < size && at(p, k) == 0) ++p;
      if (p == size) return 0;
      for (std::size_t j = 0; j < size; ++j) std::swap(at(k, j), at(p, j));
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < size; ++i) {
      for (std::size_t j = k + 1; j < size; ++j) at(i, j) = (at(i, j) * at(k, k) - at(i, k) * at(k, j)) / prev;
      at(i, k) = 0;
    }
    prev = at(k, k);
  }
  return sign * at(size - 1, size - 1);
}

PointMatrix::PointMatrix(int rows, int cols)
    : rows_(rows), cols_(cols), data_(static_cast<std::size_t>(rows) * static_cast<std::size_t>(cols), 0) {}

PointMatrix PointMatrix::from_rows(const std::vector<std::vector<std::int64_t>>& rows) {
  const int r = static_cast<int>(rows.size());
  const int n = rows.empty() ? 0 : static_cast<int>(rows.front().size());
  PointMatrix x(r, n);
  for (int i = 1; i <= r; ++i) {
    const auto& row = rows[static_cast<std::size_t>(i - 1)];
    if (static_cast<int>(row.size()) != n) throw InputError("ragged matrix at row " + std::to_string(i));
    for (int j = 1; j <= n; ++j) x.set(i, j, row[static_cast<std::size_t>(j - 1)]);
  }
  return x;
}

std::vector<std::vector<std::int64_t>> PointMatrix::row_lists() const {
  std::vector<std::vector<std::int64_t>> out;
  for (int i = 1; i <= rows_; ++i) {
    auto first = data_.begin() + static_cast<std::ptrdiff_t>(index(i, 1));
    out.emplace_back(first, first + cols_);
  }
  return out;
}

BigInt PointMatrix::minor(std::span<const int> columns) const {
  if (static_cast<int>(columns.size()) != rows_) throw InputError("minor needs exactly r columns");
  const std::size_t r = columns.size();
  std::vector<BigInt> m;
  m.reserve(r * r);
  for (int i = 1; i <= rows_; ++i)
    for (int c : columns) {
      if (c < 1 || c > cols_) throw InputError("minor column " + std::to_string(c) + " out of range");
      m.emplace_back(at(i, c));
    }
  return exact_determinant(std::move(m), r);
}

int PointMatrix::rank() const {
  std::vector<BigInt> m(data_.begin(), data_.end());
  auto at = [&](int i, int j) -> BigInt& {
    return m[static_cast<std::size_t>(i) * static_cast<std::size_t>(cols_) + static_cast<std::size_t>(j)];
  };
  int rank = 0;
  for (int col = 0; col < cols_ && rank < rows_; ++col) {
    int p = rank;
    while (p < rows_ && at(p, col) == 0) ++p;
    if (p == rows_) continue;
    for (int j = 0; j < cols_; ++j) std::swap(at(rank, j), at(p, j));
    for (int i = rank + 1; i < rows_; ++i) {
      const BigInt factor = at(i, col);
      if (factor == 0) continue;
      for (int j = 0; j < cols_; ++j) at(i, j) = at(i, j) * at(rank, col) - factor * at(rank, j);
    }
    ++rank;
  }
  return rank;
}

const BigInt& MinorOracle::coordinate(const IndexTuple& tau) {
  auto it = cache_.find(tau);
  if (it == cache_.end()) it = cache_.emplace(tau, x_.minor(tau.entries())).first;
  return it->second;
}

BigInt MinorOracle::evaluate(const PlueckerPolynomial& poly) {
  BigInt total = 0;
  for (const auto& [mono, coef] : poly.terms()) {
    BigInt value = coef;
    for (const auto& tau : mono) {
      value *= coordinate(tau);
      if (value == 0) break;
    }
    total += value;
  }
  return total;
}

BigInt evaluate(const PlueckerPolynomial& poly, const PointMatrix& x) { return MinorOracle(x).evaluate(poly); }

// ---------------------------------------------------------------------------
// Sampling

namespace {

constexpr int kMaxResample = 1000;

PointMatrix supported_matrix(int r, int n, Rng& rng, const std::vector<Interval>& support) {
  std::uniform_int_distribution<int> entry(-9, 9);
  for (int attempt = 0; attempt < kMaxResample; ++attempt) {
    PointMatrix x(r, n);
    for (int i = 1; i <= r; ++i) {
      const Interval cols = support[static_cast<std::size_t>(i - 1)];
      bool nonzero = false;
      while (!nonzero) {
        for (int j = cols.lo; j <= cols.hi; ++j) {
          const int v = entry(rng);
          x.set(i, j, v);
          nonzero = nonzero || v != 0;
        }
      }
    }
    if (x.rank() == r) return x;
  }
  throw InvariantViolation("no full-rank sample after " + std::to_string(kMaxResample) + " attempts");
}

}  // namespace

PointMatrix random_point_matrix(int r, int n, Rng& rng) {
  return supported_matrix(r, n, rng, std::vector<Interval>(static_cast<std::size_t>(r), Interval{1, n}));
}

PointMatrix sample_richardson_point(const QuotientSetup& s, Rng& rng) {
  std::vector<Interval> support;
  for (int t = 1; t <= s.r(); ++t) support.push_back(s.row_range(t));
  return supported_matrix(s.r(), s.n(), rng, support);
}

PointMatrix sample_richardson_point(const QuotientSetup& s, std::uint64_t seed) {
  Rng rng(seed);
  return sample_richardson_point(s, rng);
}

PlueckerPolynomial restrict_to_richardson(const PlueckerPolynomial& poly, const QuotientSetup& s) {
  PlueckerPolynomial out;
  for (const auto& [mono, coef] : poly.terms()) {
    const bool dead =
        std::any_of(mono.begin(), mono.end(), [&](const IndexTuple& tau) { return vanishes_on_richardson(tau, s); });
    if (!dead) out.add(coef, mono);
  }
  return out;
}

// ---------------------------------------------------------------------------
// Binomial law

std::optional<int> violation_row(const IndexTuple& alpha, const IndexTuple& beta, Regime regime) {
  const int r = static_cast<int>(alpha.size());
  std::optional<int> found;
  for (int t = 1; t <= r; ++t) {
    if (alpha.at(static_cast<std::size_t>(t)) > beta.at(static_cast<std::size_t>(t))) {
      found = t;
      if (regime == Regime::P1) break;
    }
  }
  return found;
}

BinomialAnalysis analyze_binomial(const IndexTuple& alpha, const IndexTuple& beta, Regime regime,
                                  const QuotientSetup& s) {
  const auto k = violation_row(alpha, beta, regime);
  if (!k) throw InputError("columns " + alpha.str() + ", " + beta.str() + " have no violation row");
  BinomialAnalysis out;
  out.k = *k;
  const auto terms = shuffle_terms(alpha, beta, out.k, s.n());
  for (const auto& term : terms) {
    if (term.identity || term.transposition || term.coefficient() == 0) continue;
    if (!vanishes_on_richardson(*term.alpha.tuple, s) && !vanishes_on_richardson(*term.beta.tuple, s))
      out.offenders.push_back(term);
  }
  out.restricted = restrict_to_richardson(relation_from_terms(terms), s);

  auto a = to_vector(alpha);
  auto b = to_vector(beta);
  std::swap(a[static_cast<std::size_t>(out.k - 1)], b[static_cast<std::size_t>(out.k - 1)]);
  out.alpha_swapped = IndexTuple(std::move(a), s.n());
  out.beta_swapped = IndexTuple(std::move(b), s.n());
  out.expected = PlueckerPolynomial::monomial({alpha, beta}) -
                 PlueckerPolynomial::monomial({out.alpha_swapped, out.beta_swapped});
  return out;
}

std::vector<std::pair<IndexTuple, IndexTuple>> regime_pairs(const QuotientSetup& s, Regime regime) {
  std::vector<std::vector<int>> columns{{}};
  for (int i = 1; i <= s.r(); ++i) {
    const Interval range = regime == Regime::P1 ? s.p1_range(i) : s.p2_range(i);
    std::vector<std::vector<int>> next;
    for (const auto& prefix : columns)
      for (int v = range.lo; v <= range.hi; ++v) {
        if (!prefix.empty() && prefix.back() >= v) continue;
        auto col = prefix;
        col.push_back(v);
        next.push_back(std::move(col));
      }
    columns = std::move(next);
  }
  std::vector<std::pair<IndexTuple, IndexTuple>> out;
  for (const auto& a : columns)
    for (const auto& b : columns) {
      IndexTuple alpha(a, s.n());
      IndexTuple beta(b, s.n());
      if (violation_row(alpha, beta, regime)) out.emplace_back(std::move(alpha), std::move(beta));
    }
  return out;
}

namespace {

nlohmann::json term_json(const ShuffleTerm& t) {
  return {{"alpha_seq", t.alpha_seq}, {"beta_seq", t.beta_seq}, {"coef", t.coefficient()}};
}

}  // namespace

Report verify_binomial_law(const QuotientSetup& s, int samples, std::uint64_t seed) {
  Report rep("binomial_law");
  Rng rng(seed);
  std::vector<PointMatrix> points;
  for (int i = 0; i < samples; ++i) points.push_back(sample_richardson_point(s, rng));
  std::vector<MinorOracle> oracles(points.begin(), points.end());

  std::size_t per_regime[2] = {0, 0};
  for (Regime regime : {Regime::P1, Regime::P2}) {
    const char* name = regime == Regime::P1 ? "P1" : "P2";
    for (const auto& [alpha, beta] : regime_pairs(s, regime)) {
      ++per_regime[regime == Regime::P1 ? 0 : 1];
      nlohmann::json where = {{"regime", name}, {"alpha", to_vector(alpha)}, {"beta", to_vector(beta)}};
      BinomialAnalysis an;
      try {
        an = analyze_binomial(alpha, beta, regime, s);
      } catch (const std::exception& e) {
        where["reason"] = e.what();
        rep.fail(where);
        continue;
      }
      where["k"] = an.k;
      if (!an.offenders.empty()) {
        where["reason"] = "surviving shuffle term outside identity/transposition";
        where["offender"] = term_json(an.offenders.front());
        rep.fail(where);
        continue;
      }
      if (!an.binomial()) {
        where["reason"] = "restricted relation is not the expected binomial";
        where["restricted"] = to_json(an.restricted);
        rep.fail(where);
        continue;
      }
      bool zero_everywhere = true;
      for (std::size_t m = 0; m < oracles.size() && zero_everywhere; ++m) {
        const BigInt value = oracles[m].evaluate(an.restricted);
        if (value != 0) {
          zero_everywhere = false;
          where["reason"] = "binomial does not vanish at sampled Richardson point";
          where["matrix"] = to_json(points[m]);
          where["value"] = value.str();
        }
      }
      rep.expect(zero_everywhere, where);
    }
  }
  rep.summary = {{"p1_pairs", per_regime[0]}, {"p2_pairs", per_regime[1]}, {"samples", samples}};
  return rep;
}

Report verify_relation_oracle(int r, int n, int samples, std::uint64_t seed, std::optional<SignFault> fault,
                              std::size_t pair_cap) {
  Report rep("relation_oracle");
  Rng rng(seed);
  std::vector<PointMatrix> points;
  for (int i = 0; i < samples; ++i) points.push_back(random_point_matrix(r, n, rng));
  std::vector<MinorOracle> oracles(points.begin(), points.end());

  const auto tuples = all_index_tuples(r, n);
  std::vector<std::pair<std::size_t, std::size_t>> pairs;
  const std::size_t full = tuples.size() * tuples.size();
  if (full <= pair_cap) {
    for (std::size_t i = 0; i < tuples.size(); ++i)
      for (std::size_t j = 0; j < tuples.size(); ++j) pairs.emplace_back(i, j);
  } else {
    std::uniform_int_distribution<std::size_t> pick(0, tuples.size() - 1);
    for (std::size_t q = 0; q < pair_cap; ++q) pairs.emplace_back(pick(rng), pick(rng));
  }

  std::size_t relation = 0;
  for (const auto& [i, j] : pairs) {
    const IndexTuple& alpha = tuples[i];
    const IndexTuple& beta = tuples[j];
    for (int k = 1; k <= r; ++k) {
      if (alpha.at(static_cast<std::size_t>(k)) <= beta.at(static_cast<std::size_t>(k))) continue;
      auto terms = shuffle_terms(alpha, beta, k, n);
      if (fault && fault->relation == relation) {
        for (std::size_t t = fault->term; t < terms.size(); ++t)
          if (terms[t].coefficient() != 0) {
            terms[t].shuffle_sign = -terms[t].shuffle_sign;
            break;
          }
      }
      const PlueckerPolynomial poly = relation_from_terms(terms);
      nlohmann::json where;
      bool zero_everywhere = true;
      for (std::size_t m = 0; m < oracles.size() && zero_everywhere; ++m) {
        const BigInt value = oracles[m].evaluate(poly);
        if (value != 0) {
          zero_everywhere = false;
          where = {{"alpha", to_vector(alpha)},
                   {"beta", to_vector(beta)},
                   {"k", k},
                   {"relation", to_json(poly)},
                   {"matrix", to_json(points[m])},
                   {"value", value.str()}};
        }
      }
      rep.expect(zero_everywhere, where);
      ++relation;
    }
  }
  rep.summary = {{"r", r}, {"n", n}, {"pairs", pairs.size()}, {"relations", relation}, {"samples", samples}};
  return rep;
}

nlohmann::json to_json(const PlueckerPolynomial& poly) {
  nlohmann::json terms = nlohmann::json::array();
  for (const auto& [mono, coef] : poly.terms()) {
    nlohmann::json factors = nlohmann::json::array();
    for (const auto& tau : mono) factors.push_back(to_vector(tau));
    terms.push_back({{"coef", coef}, {"factors", factors}});
  }
  return {{"terms", terms}};
}

nlohmann::json to_json(const PointMatrix& x) { return x.row_lists(); }

}  // namespace tquot
