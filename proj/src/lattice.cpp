#include "tquot/lattice.hpp"

#include "tquot/error.hpp"
#include "tquot/numeric.hpp"

#include <algorithm>
#include <set>

namespace tquot {

std::vector<int> LatticePoint::block(const QuotientSetup& s, int i) const {
  const auto first = z.begin() + s.block_offset(i);
  return std::vector<int>(first, first + s.block_size(i));
}

LatticePoint operator+(const LatticePoint& lhs, const LatticePoint& rhs) {
  if (lhs.z.size() != rhs.z.size()) throw InputError("adding lattice points of different length");
  LatticePoint out = lhs;
  for (std::size_t k = 0; k < out.z.size(); ++k) out.z[k] += rhs.z[k];
  return out;
}

LatticePoint z_of(const Tableau& t, const QuotientSetup& s) {
  if (t.rows() != s.r())
    throw InputError("z_of: tableau has " + std::to_string(t.rows()) + " rows, expected " +
                     std::to_string(s.r()));
  LatticePoint p{std::vector<int>(static_cast<std::size_t>(s.coord_count()), 0)};
  for (int i = 1; i <= s.r() - 1; ++i) {
    const Interval blk = s.block2(i);
    for (int j = 1; j <= t.cols(); ++j) {
      const int v = t.at(i + 1, j);
      if (blk.contains(v)) ++p.z[static_cast<std::size_t>(s.block_offset(i) + v - blk.lo)];
    }
  }
  return p;
}

bool in_pd(const LatticePoint& z, const QuotientSetup& s, int d) {
  if (static_cast<int>(z.z.size()) != s.coord_count()) return false;
  if (std::any_of(z.z.begin(), z.z.end(), [](int x) { return x < 0; })) return false;
  for (int i = 1; i <= s.r() - 1; ++i) {
    const auto b = z.block(s, i);
    int sum = 0;
    for (int x : b) sum += x;
    if (sum != d * s.c(i)) return false;
  }
  return true;
}

namespace {

// Weak compositions of `total` into `parts` parts, lexicographically descending.
std::vector<std::vector<int>> compositions(int total, int parts) {
  std::vector<std::vector<int>> out;
  if (parts == 0) {
    if (total == 0) out.emplace_back();
    return out;
  }
  std::vector<int> cur(static_cast<std::size_t>(parts), 0);
  auto rec = [&](auto&& self, int k, int left) -> void {
    if (k == parts - 1) {
      cur[static_cast<std::size_t>(k)] = left;
      out.push_back(cur);
      return;
    }
    for (int x = left; x >= 0; --x) {
      cur[static_cast<std::size_t>(k)] = x;
      self(self, k + 1, left - x);
    }
  };
  rec(rec, 0, total);
  return out;
}

}  // namespace

std::vector<LatticePoint> enumerate_pd(const QuotientSetup& s, int d) {
  if (d < 0) throw InputError("degree must be nonnegative");
  std::vector<LatticePoint> acc{LatticePoint{}};
  for (int i = 1; i <= s.r() - 1; ++i) {
    const auto parts = compositions(d * s.c(i), s.block_size(i));
    std::vector<LatticePoint> next;
    next.reserve(acc.size() * parts.size());
    for (const auto& prefix : acc)
      for (const auto& part : parts) {
        LatticePoint p = prefix;
        p.z.insert(p.z.end(), part.begin(), part.end());
        next.push_back(std::move(p));
      }
    acc = std::move(next);
  }
  return acc;
}

BigInt pd_count_formula(const QuotientSetup& s, int d) {
  BigInt count = 1;
  for (int i = 1; i <= s.r() - 1; ++i) {
    const int size = s.block_size(i);
    count *= binomial(d * s.c(i) + size - 1, size - 1);
  }
  return count;
}

Tableau tableau_from_lattice(const LatticePoint& z, const QuotientSetup& s, int d) {
  if (!in_pd(z, s, d)) throw InputError("lattice point is not in P_" + std::to_string(d));
  const int rd = s.r() * d;
  for (int i = 1; i <= s.r() - 1; ++i) {
    const auto b = z.block(s, i);
    for (std::size_t k = 0; k < b.size(); ++k)
      if (b[k] > rd)
        throw InputError("z_" + std::to_string(s.block2(i).lo + static_cast<int>(k)) + "=" +
                         std::to_string(b[k]) + " in block C_{" + std::to_string(i) +
                         ",2} exceeds rd=" + std::to_string(rd));
  }
  if (d == 0) return Tableau::empty(s.r());

  // Row i is B_{i-1,2} followed by B_{i,1}.
  std::vector<std::vector<int>> rows(static_cast<std::size_t>(s.r()));
  for (int i = 1; i <= s.r(); ++i) {
    auto& row = rows[static_cast<std::size_t>(i - 1)];
    if (i >= 2) {
      const Interval prev = s.block2(i - 1);
      const auto zb = z.block(s, i - 1);
      for (int j = prev.lo; j <= prev.hi; ++j) row.insert(row.end(), zb[static_cast<std::size_t>(j - prev.lo)], j);
    }
    const Interval own1 = s.block1(i);
    for (int j = own1.lo; j <= own1.hi; ++j) row.insert(row.end(), rd, j);
    const Interval own2 = s.block2(i);
    if (!own2.empty()) {
      const auto zb = z.block(s, i);
      for (int j = own2.lo; j <= own2.hi; ++j)
        row.insert(row.end(), rd - zb[static_cast<std::size_t>(j - own2.lo)], j);
    }
  }
  Tableau t = Tableau::from_rows(rows);
  if (!is_t_invariant(t, s, d))
    throw InvariantViolation("tableau_from_lattice produced " + t.str() + " outside ST(lambda_" +
                             std::to_string(d) + ") for " + s.describe());
  return t;
}

Report verify_bijection(const QuotientSetup& s, int d) {
  Report rep("bijection");
  const auto points = enumerate_pd(s, d);
  const auto members = enumerate_st_bruteforce(s, d);
  const BigInt formula = pd_count_formula(s, d);

  rep.summary = {{"d", d},
                 {"pd", points.size()},
                 {"st", members.size()},
                 {"formula", formula.str()}};
  rep.expect(points.size() == members.size() && BigInt(points.size()) == formula,
             {{"reason", "cardinality mismatch"}, {"d", d}, {"pd", points.size()},
              {"st", members.size()}, {"formula", formula.str()}});

  std::set<Tableau> images;
  for (const auto& p : points) {
    try {
      const Tableau t = tableau_from_lattice(p, s, d);
      images.insert(t);
      rep.expect(z_of(t, s) == p, {{"reason", "z(Gamma_z) != z"}, {"z", p.z}, {"tableau", t.row_lists()}});
    } catch (const std::exception& e) {
      rep.fail({{"reason", e.what()}, {"z", p.z}});
    }
  }
  for (const auto& t : members) {
    const LatticePoint p = z_of(t, s);
    if (!in_pd(p, s, d)) {
      rep.fail({{"reason", "z(Gamma) not in P_d"}, {"tableau", t.row_lists()}, {"z", p.z}});
      continue;
    }
    rep.expect(tableau_from_lattice(p, s, d) == t,
               {{"reason", "Gamma_{z(Gamma)} != Gamma"}, {"tableau", t.row_lists()}, {"z", p.z}});
  }
  rep.expect(images.size() == points.size(), {{"reason", "construction not injective"}, {"d", d}});
  return rep;
}

Report verify_split_z(const QuotientSetup& s, int d) {
  Report rep("split_z");
  const LatticePoint zero{std::vector<int>(static_cast<std::size_t>(s.coord_count()), 0)};
  for (const auto& t : enumerate_st_bruteforce(s, d)) {
    const SplitTableau halves = split(t, s, d);
    const LatticePoint whole = z_of(t, s);
    const LatticePoint left = z_of(halves.first, s);
    const LatticePoint right = z_of(halves.second, s);
    rep.expect(whole == left && right == zero,
               {{"tableau", t.row_lists()}, {"z", whole.z}, {"z1", left.z}, {"z2", right.z}});
  }
  rep.summary = {{"d", d}};
  return rep;
}

}  // namespace tquot
