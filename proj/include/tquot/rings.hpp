#pragma once

#include "tquot/lattice.hpp"
#include "tquot/numeric.hpp"
#include "tquot/report.hpp"
#include "tquot/setup.hpp"
#include "tquot/tableau.hpp"

#include <compare>
#include <map>
#include <vector>

namespace tquot {

/// A basis monomial of A_d: the tensor over i of prod_{j in C_{i,2}} x_j^{e_j},
/// stored as one exponent vector on the flat coordinate axis.
struct SegreMonomial {
  std::vector<int> exponents;

  friend auto operator<=>(const SegreMonomial&, const SegreMonomial&) = default;
  friend bool operator==(const SegreMonomial&, const SegreMonomial&) = default;
};

SegreMonomial operator*(const SegreMonomial& lhs, const SegreMonomial& rhs);

/// R_d basis: ST(lambda_d), built through the lattice construction.
std::vector<Tableau> basis_r(const QuotientSetup& s, int d);

/// A_d basis: every exponent vector whose block C_{i,2} has total degree d*c_i.
std::vector<SegreMonomial> basis_a(const QuotientSetup& s, int d);

/// Phi on a basis element: Gamma -> x^{z(Gamma)}. Throws InputError on
/// non-members of ST(lambda_d).
SegreMonomial phi(const Tableau& t, const QuotientSetup& s, int d);

/// Homogeneous element of R with exact rational coefficients.
struct InvariantElement {
  int degree = 0;
  std::map<Tableau, Rational> coeffs;

  static InvariantElement basis(const Tableau& t, int degree);
  void add(const Tableau& t, const Rational& c);
};

/// Homogeneous element of A.
struct SegreElement {
  int degree = 0;
  std::map<SegreMonomial, Rational> coeffs;

  void add(const SegreMonomial& m, const Rational& c);
  friend bool operator==(const SegreElement&, const SegreElement&) = default;
};

/// Bilinear extension of s(Gamma1 Gamma2) on basis labels.
InvariantElement multiply_r(const InvariantElement& f, const InvariantElement& g, const QuotientSetup& s);
SegreElement multiply_a(const SegreElement& f, const SegreElement& g);
SegreElement phi(const InvariantElement& f, const QuotientSetup& s);

/// Hilbert function of P^{a_1-l_1} x ... x P^{a_{r-1}-l_{r-1}} under
/// O(c_1) x ... x O(c_{r-1}): prod_i binom(d c_i + a_i - l_i, a_i - l_i).
BigInt product_projective_hilbert(const QuotientSetup& s, int d);

struct HilbertRow {
  int d = 0;
  BigInt dim_r;      // |ST(lambda_d)| by direct search
  BigInt dim_a;      // |basis_a(d)|
  BigInt predicted;  // product_projective_hilbert

  bool equal() const { return dim_r == dim_a && dim_a == predicted; }
};

/// Rows for d = 1..d_max.
std::vector<HilbertRow> hilbert(const QuotientSetup& s, int d_max);

/// Phi is a bijection of bases for d <= d_max; multiplicative with 0/1
/// structure constants on basis pairs with d1 + d2 <= d_max; multiply_r is
/// commutative and associative on degree-1 basis elements.
Report verify_isomorphism(const QuotientSetup& s, int d_max);

Report verify_hilbert(const QuotientSetup& s, int d_max);

}  // namespace tquot
