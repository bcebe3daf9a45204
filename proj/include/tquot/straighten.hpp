#pragma once

#include "tquot/pluecker.hpp"
#include "tquot/report.hpp"
#include "tquot/setup.hpp"
#include "tquot/tableau.hpp"

#include <cstdint>

namespace tquot {

/// Which adjacent inversion of the active row is swapped next.
enum class SwapPolicy { LeftmostFirst, RightmostFirst };

/// Exchanges Gamma(i,j) and Gamma(i,j+1) via the binomial relation on
/// columns j, j+1.
///
/// Requires: Gamma column standard and satisfying the regime's predicate,
/// Gamma(i,j) > Gamma(i,j+1), and i is the violation row of the two columns
/// (rows above i ordered for P1, rows below i ordered for P2). Throws
/// InputError otherwise; throws InvariantViolation if the result is not
/// column standard.
Tableau swap_step(const Tableau& t, int i, int j, Regime regime, const QuotientSetup& s);

struct StraightenResult {
  Tableau tableau;
  std::size_t swaps = 0;
};

/// Rearranges columns so the first row (P1) or last row (P2) is sorted, then
/// repairs the remaining rows one at a time with swap_step. Output is
/// semistandard, satisfies the same predicate and has f equal to the input's
/// on X^{v_l}_w.
StraightenResult straighten(const Tableau& t, Regime regime, const QuotientSetup& s,
                            SwapPolicy policy = SwapPolicy::LeftmostFirst);

Tableau straighten_p1(const Tableau& t, const QuotientSetup& s, SwapPolicy policy = SwapPolicy::LeftmostFirst);
Tableau straighten_p2(const Tableau& t, const QuotientSetup& s, SwapPolicy policy = SwapPolicy::LeftmostFirst);

/// s(Gamma1 Gamma2): straighten the P1 halves and the P2 halves separately
/// and concatenate. Throws InputError unless Gamma_k is in ST(lambda_{d_k}).
Tableau straighten_invariant_product(const Tableau& first, const Tableau& second, const QuotientSetup& s, int d1,
                                     int d2, SwapPolicy policy = SwapPolicy::LeftmostFirst);

/// For every pair in ST(lambda_1) x ST(lambda_1): semistandard and T-invariant
/// output, z-additivity, independence of the swap policy, and exact equality
/// f_{Gamma1} f_{Gamma2} = f_{s(Gamma1 Gamma2)} on `samples` Richardson points.
Report verify_straightening(const QuotientSetup& s, int samples, std::uint64_t seed);

}  // namespace tquot
