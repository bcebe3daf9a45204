#include "tquot/straighten.hpp"

#include "tquot/error.hpp"
#include "tquot/lattice.hpp"

#include <algorithm>
#include <numeric>
#include <optional>

namespace tquot {

namespace {

bool regime_holds(const Tableau& t, Regime regime, const QuotientSetup& s) {
  return regime == Regime::P1 ? satisfies_p1(t, s) : satisfies_p2(t, s);
}

const char* regime_name(Regime regime) { return regime == Regime::P1 ? "P1" : "P2"; }

std::string at_str(int i, int j) { return "(" + std::to_string(i) + "," + std::to_string(j) + ")"; }

Tableau sort_columns_by_row(const Tableau& t, int key_row) {
  std::vector<int> order(static_cast<std::size_t>(t.cols()));
  std::iota(order.begin(), order.end(), 1);
  std::stable_sort(order.begin(), order.end(), [&](int a, int b) { return t.at(key_row, a) < t.at(key_row, b); });
  std::vector<std::vector<int>> cols;
  for (int j : order) cols.push_back(t.column(j));
  return Tableau::from_columns(t.rows(), cols);
}

std::optional<int> next_inversion(const Tableau& t, int i, SwapPolicy policy) {
  if (policy == SwapPolicy::LeftmostFirst) {
    for (int j = 1; j < t.cols(); ++j)
      if (t.at(i, j) > t.at(i, j + 1)) return j;
  } else {
    for (int j = t.cols() - 1; j >= 1; --j)
      if (t.at(i, j) > t.at(i, j + 1)) return j;
  }
  return std::nullopt;
}

}  // namespace

Tableau swap_step(const Tableau& t, int i, int j, Regime regime, const QuotientSetup& s) {
  if (t.rows() != s.r() || i < 1 || i > t.rows() || j < 1 || j >= t.cols())
    throw InputError("swap_step: box " + at_str(i, j) + " out of range");
  if (!is_column_standard(t)) throw InputError("swap_step: tableau " + t.str() + " is not column standard");
  if (!regime_holds(t, regime, s))
    throw InputError(std::string("swap_step: tableau ") + t.str() + " fails " + regime_name(regime));
  if (t.at(i, j) <= t.at(i, j + 1)) throw InputError("swap_step: no inversion at " + at_str(i, j));
  for (int row = 1; row <= t.rows(); ++row) {
    const bool guarded = regime == Regime::P1 ? row < i : row > i;
    if (guarded && t.at(row, j) > t.at(row, j + 1))
      throw InputError("swap_step: row " + std::to_string(i) + " is not the violation row of columns " +
                       std::to_string(j) + "," + std::to_string(j + 1));
  }

  Tableau out = t;
  out.set(i, j, t.at(i, j + 1));
  out.set(i, j + 1, t.at(i, j));
  for (int col : {j, j + 1})
    for (int row = 1; row < out.rows(); ++row)
      if (out.at(row, col) >= out.at(row + 1, col))
        throw InvariantViolation("swap at " + at_str(i, j) + " broke column standardness of " + t.str());
  return out;
}

StraightenResult straighten(const Tableau& t, Regime regime, const QuotientSetup& s, SwapPolicy policy) {
  if (t.rows() != s.r()) throw InputError("straighten: wrong number of rows");
  if (!is_column_standard(t)) throw InputError("straighten: tableau " + t.str() + " is not column standard");
  if (!regime_holds(t, regime, s))
    throw InputError(std::string("straighten: tableau ") + t.str() + " fails " + regime_name(regime));

  const int r = t.rows();
  StraightenResult res{sort_columns_by_row(t, regime == Regime::P1 ? 1 : r), 0};
  const std::size_t m = static_cast<std::size_t>(t.cols());
  const std::size_t bound = static_cast<std::size_t>(r) * m * m;

  for (int step = 1; step < r; ++step) {
    const int i = regime == Regime::P1 ? step + 1 : r - step;
    while (auto j = next_inversion(res.tableau, i, policy)) {
      res.tableau = swap_step(res.tableau, i, *j, regime, s);
      if (++res.swaps > bound)
        throw InvariantViolation("straightening exceeded " + std::to_string(bound) + " swaps on " + t.str());
    }
  }
  return res;
}

Tableau straighten_p1(const Tableau& t, const QuotientSetup& s, SwapPolicy policy) {
  return straighten(t, Regime::P1, s, policy).tableau;
}

Tableau straighten_p2(const Tableau& t, const QuotientSetup& s, SwapPolicy policy) {
  return straighten(t, Regime::P2, s, policy).tableau;
}

Tableau straighten_invariant_product(const Tableau& first, const Tableau& second, const QuotientSetup& s, int d1,
                                     int d2, SwapPolicy policy) {
  if (!is_t_invariant(first, s, d1))
    throw InputError("first factor " + first.str() + " is not in ST(lambda_" + std::to_string(d1) + ")");
  if (!is_t_invariant(second, s, d2))
    throw InputError("second factor " + second.str() + " is not in ST(lambda_" + std::to_string(d2) + ")");
  const SplitTableau a = split(first, s, d1);
  const SplitTableau b = split(second, s, d2);
  const Tableau lower = straighten_p1(product(a.first, b.first), s, policy);
  const Tableau upper = straighten_p2(product(a.second, b.second), s, policy);
  Tableau out = product(lower, upper);
  if (!is_t_invariant(out, s, d1 + d2))
    throw InvariantViolation("s(Gamma1 Gamma2) = " + out.str() + " is not in ST(lambda_" +
                             std::to_string(d1 + d2) + ")");
  return out;
}

Report verify_straightening(const QuotientSetup& s, int samples, std::uint64_t seed) {
  Report rep("straightening");
  Rng rng(seed);
  std::vector<PointMatrix> points;
  for (int i = 0; i < samples; ++i) points.push_back(sample_richardson_point(s, rng));
  std::vector<MinorOracle> oracles(points.begin(), points.end());

  const auto members = enumerate_st_bruteforce(s, 1);
  for (const auto& g1 : members)
    for (const auto& g2 : members) {
      nlohmann::json where = {{"gamma1", g1.row_lists()}, {"gamma2", g2.row_lists()}};
      Tableau out;
      try {
        out = straighten_invariant_product(g1, g2, s, 1, 1);
      } catch (const std::exception& e) {
        where["reason"] = e.what();
        rep.fail(where);
        continue;
      }
      where["result"] = out.row_lists();
      if (!is_semistandard(out) || !is_t_invariant(out, s, 2)) {
        where["reason"] = "result not a T-invariant semistandard tableau";
        rep.fail(where);
        continue;
      }
      if (z_of(out, s) != z_of(g1, s) + z_of(g2, s)) {
        where["reason"] = "z not additive";
        rep.fail(where);
        continue;
      }
      if (straighten_invariant_product(g1, g2, s, 1, 1, SwapPolicy::RightmostFirst) != out) {
        where["reason"] = "swap policies disagree";
        rep.fail(where);
        continue;
      }
      const PlueckerPolynomial lhs = tableau_monomial(product(g1, g2), s.n());
      const PlueckerPolynomial rhs = tableau_monomial(out, s.n());
      bool equal = true;
      for (std::size_t m = 0; m < oracles.size() && equal; ++m) {
        const BigInt a = oracles[m].evaluate(lhs);
        const BigInt b = oracles[m].evaluate(rhs);
        if (a != b) {
          equal = false;
          where["reason"] = "f_{Gamma1} f_{Gamma2} != f_{s(Gamma1 Gamma2)} at sampled point";
          where["matrix"] = to_json(points[m]);
          where["lhs"] = a.str();
          where["rhs"] = b.str();
        }
      }
      rep.expect(equal, where);
    }
  rep.summary = {{"members", members.size()}, {"pairs", members.size() * members.size()}, {"samples", samples}};
  return rep;
}

}  // namespace tquot
