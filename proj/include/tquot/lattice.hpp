#pragma once

#include "tquot/numeric.hpp"
#include "tquot/report.hpp"
#include "tquot/setup.hpp"
#include "tquot/tableau.hpp"

#include <compare>
#include <vector>

namespace tquot {

/// Nonnegative integer vector on the flat coordinate axis of
/// C = C_{1,2} u ... u C_{r-1,2} (ordering owned by QuotientSetup).
struct LatticePoint {
  std::vector<int> z;

  /// The slice of coordinates belonging to block C_{i,2}.
  std::vector<int> block(const QuotientSetup& s, int i) const;

  friend auto operator<=>(const LatticePoint&, const LatticePoint&) = default;
  friend bool operator==(const LatticePoint&, const LatticePoint&) = default;
};

LatticePoint operator+(const LatticePoint& lhs, const LatticePoint& rhs);

/// z_j(Gamma) = number of j in row i+1, for j in C_{i,2}. Any column count.
LatticePoint z_of(const Tableau& t, const QuotientSetup& s);

/// Nonnegative and every block C_{i,2} sums to d*c_i.
bool in_pd(const LatticePoint& z, const QuotientSetup& s, int d);

/// All of P_d: per-block weak compositions of d*c_i, combined by product.
/// Ordered lexicographically descending within each block (first block
/// slowest), e.g. (1,0) before (0,1).
std::vector<LatticePoint> enumerate_pd(const QuotientSetup& s, int d);

/// prod_i binom(d*c_i + |C_{i,2}| - 1, |C_{i,2}| - 1).
BigInt pd_count_formula(const QuotientSetup& s, int d);

/// The explicit tableau Gamma_z. Throws InputError when z is not in P_d or
/// some z_j exceeds rd; throws InvariantViolation if the result is not in
/// ST(lambda_d).
Tableau tableau_from_lattice(const LatticePoint& z, const QuotientSetup& s, int d);

/// Both round trips of the bijection P_d <-> ST(lambda_d) against the
/// brute-force enumeration, plus cardinalities.
Report verify_bijection(const QuotientSetup& s, int d);

/// For every member: z(Gamma) = z(Gamma^(1)) and z(Gamma^(2)) = 0.
Report verify_split_z(const QuotientSetup& s, int d);

}  // namespace tquot
