#include "tquot/rings.hpp"

#include "tquot/error.hpp"
#include "tquot/straighten.hpp"

#include <set>

namespace tquot {

SegreMonomial operator*(const SegreMonomial& lhs, const SegreMonomial& rhs) {
  if (lhs.exponents.size() != rhs.exponents.size()) throw InputError("multiplying monomials of different arity");
  SegreMonomial out = lhs;
  for (std::size_t k = 0; k < out.exponents.size(); ++k) out.exponents[k] += rhs.exponents[k];
  return out;
}

std::vector<Tableau> basis_r(const QuotientSetup& s, int d) {
  std::vector<Tableau> out;
  for (const auto& p : enumerate_pd(s, d)) out.push_back(tableau_from_lattice(p, s, d));
  return out;
}

std::vector<SegreMonomial> basis_a(const QuotientSetup& s, int d) {
  if (d < 0) throw InputError("degree must be nonnegative");
  const int width = s.coord_count();
  std::vector<SegreMonomial> out;
  std::vector<int> e(static_cast<std::size_t>(width), 0);

  // Odometer over coordinates; block i must reach total d*c_i at its last variable.
  auto rec = [&](auto&& self, int k, int left) -> void {
    if (k == width) {
      out.push_back({e});
      return;
    }
    const auto label = s.coord_label(k);
    const bool last_in_block = label.value == s.block2(label.block).hi;
    if (label.value == s.block2(label.block).lo) left = d * s.c(label.block);
    if (last_in_block) {
      e[static_cast<std::size_t>(k)] = left;
      self(self, k + 1, 0);
      return;
    }
    for (int x = left; x >= 0; --x) {
      e[static_cast<std::size_t>(k)] = x;
      self(self, k + 1, left - x);
    }
  };
  rec(rec, 0, 0);
  return out;
}

SegreMonomial phi(const Tableau& t, const QuotientSetup& s, int d) {
  if (!is_t_invariant(t, s, d))
    throw InputError("phi: " + t.str() + " is not in ST(lambda_" + std::to_string(d) + ")");
  return {z_of(t, s).z};
}

InvariantElement InvariantElement::basis(const Tableau& t, int degree) {
  InvariantElement f;
  f.degree = degree;
  f.add(t, 1);
  return f;
}

void InvariantElement::add(const Tableau& t, const Rational& c) {
  if (c == 0) return;
  auto& slot = coeffs[t];
  slot += c;
  if (slot == 0) coeffs.erase(t);
}

void SegreElement::add(const SegreMonomial& m, const Rational& c) {
  if (c == 0) return;
  auto& slot = coeffs[m];
  slot += c;
  if (slot == 0) coeffs.erase(m);
}

InvariantElement multiply_r(const InvariantElement& f, const InvariantElement& g, const QuotientSetup& s) {
  InvariantElement out;
  out.degree = f.degree + g.degree;
  for (const auto& [t1, c1] : f.coeffs)
    for (const auto& [t2, c2] : g.coeffs)
      out.add(straighten_invariant_product(t1, t2, s, f.degree, g.degree), c1 * c2);
  return out;
}

SegreElement multiply_a(const SegreElement& f, const SegreElement& g) {
  SegreElement out;
  out.degree = f.degree + g.degree;
  for (const auto& [m1, c1] : f.coeffs)
    for (const auto& [m2, c2] : g.coeffs) out.add(m1 * m2, c1 * c2);
  return out;
}

SegreElement phi(const InvariantElement& f, const QuotientSetup& s) {
  SegreElement out;
  out.degree = f.degree;
  for (const auto& [t, c] : f.coeffs) out.add(phi(t, s, f.degree), c);
  return out;
}

BigInt product_projective_hilbert(const QuotientSetup& s, int d) {
  BigInt acc = 1;
  for (int i = 1; i <= s.r() - 1; ++i) acc *= binomial(d * s.c(i) + s.factor_dim(i), s.factor_dim(i));
  return acc;
}

std::vector<HilbertRow> hilbert(const QuotientSetup& s, int d_max) {
  std::vector<HilbertRow> rows;
  for (int d = 1; d <= d_max; ++d)
    rows.push_back({d, BigInt(enumerate_st_bruteforce(s, d).size()), BigInt(basis_a(s, d).size()),
                    product_projective_hilbert(s, d)});
  return rows;
}

Report verify_hilbert(const QuotientSetup& s, int d_max) {
  Report rep("hilbert");
  nlohmann::json table = nlohmann::json::array();
  for (const auto& row : hilbert(s, d_max)) {
    nlohmann::json line = {{"d", row.d},
                           {"dimR", row.dim_r.str()},
                           {"dimA", row.dim_a.str()},
                           {"predicted", row.predicted.str()},
                           {"equal", row.equal()}};
    table.push_back(line);
    rep.expect(row.equal(), line);
  }
  rep.summary = {{"table", table}};
  return rep;
}

Report verify_isomorphism(const QuotientSetup& s, int d_max) {
  Report rep("isomorphism");
  std::vector<std::vector<Tableau>> bases_r;
  for (int d = 0; d <= d_max; ++d) {
    bases_r.push_back(basis_r(s, d));
    const auto& br = bases_r.back();
    const auto ba = basis_a(s, d);
    std::set<SegreMonomial> images;
    for (const auto& t : br) images.insert(phi(t, s, d));
    const std::set<SegreMonomial> target(ba.begin(), ba.end());
    rep.expect(images == target && images.size() == br.size() && target.size() == ba.size(),
               {{"reason", "phi is not a basis bijection"}, {"d", d}, {"dimR", br.size()}, {"dimA", ba.size()}});
  }

  for (int d1 = 0; d1 <= d_max; ++d1)
    for (int d2 = 0; d1 + d2 <= d_max; ++d2) {
      const std::set<Tableau> members(bases_r[static_cast<std::size_t>(d1 + d2)].begin(),
                                      bases_r[static_cast<std::size_t>(d1 + d2)].end());
      for (const auto& t1 : bases_r[static_cast<std::size_t>(d1)])
        for (const auto& t2 : bases_r[static_cast<std::size_t>(d2)]) {
          nlohmann::json where = {{"d1", d1}, {"d2", d2}, {"gamma1", t1.row_lists()}, {"gamma2", t2.row_lists()}};
          const auto f = InvariantElement::basis(t1, d1);
          const auto g = InvariantElement::basis(t2, d2);
          InvariantElement fg;
          try {
            fg = multiply_r(f, g, s);
          } catch (const std::exception& e) {
            where["reason"] = e.what();
            rep.fail(where);
            continue;
          }
          const bool single = fg.coeffs.size() == 1 && fg.coeffs.begin()->second == 1 &&
                              members.count(fg.coeffs.begin()->first) == 1;
          if (!single) {
            where["reason"] = "product of basis elements is not a single basis element with coefficient 1";
            rep.fail(where);
            continue;
          }
          where["reason"] = "phi(fg) != phi(f) phi(g)";
          rep.expect(phi(fg, s) == multiply_a(phi(f, s), phi(g, s)), where);
        }
    }

  if (d_max >= 1) {
    const auto& deg1 = bases_r[1];
    for (const auto& a : deg1)
      for (const auto& b : deg1) {
        const auto fa = InvariantElement::basis(a, 1);
        const auto fb = InvariantElement::basis(b, 1);
        const auto ab = multiply_r(fa, fb, s);
        rep.expect(ab.coeffs == multiply_r(fb, fa, s).coeffs,
                   {{"reason", "not commutative"}, {"a", a.row_lists()}, {"b", b.row_lists()}});
        for (const auto& c : deg1) {
          const auto fc = InvariantElement::basis(c, 1);
          rep.expect(multiply_r(ab, fc, s).coeffs == multiply_r(fa, multiply_r(fb, fc, s), s).coeffs,
                     {{"reason", "not associative"},
                      {"a", a.row_lists()},
                      {"b", b.row_lists()},
                      {"c", c.row_lists()}});
        }
      }
  }
  rep.summary = {{"d_max", d_max}};
  return rep;
}

}  // namespace tquot
