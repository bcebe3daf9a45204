#pragma once

#include "tquot/report.hpp"

#include <compare>
#include <cstddef>
#include <initializer_list>
#include <span>
#include <string>
#include <vector>

namespace tquot {

/// Closed integer interval [lo, hi]; empty when lo > hi.
struct Interval {
  int lo = 1;
  int hi = 0;

  bool empty() const { return lo > hi; }
  int size() const { return empty() ? 0 : hi - lo + 1; }
  bool contains(int v) const { return lo <= v && v <= hi; }

  friend bool operator==(const Interval&, const Interval&) = default;
};

/// A strictly increasing r-tuple in [1, n]; indexes a Pluecker coordinate.
class IndexTuple {
 public:
  IndexTuple() = default;

  /// Throws InputError unless entries are strictly increasing within [1, n].
  IndexTuple(std::vector<int> entries, int n);

  std::size_t size() const { return entries_.size(); }
  /// 1-based access.
  int at(std::size_t i) const { return entries_[i - 1]; }
  std::span<const int> entries() const { return entries_; }

  std::string str() const;

  friend auto operator<=>(const IndexTuple&, const IndexTuple&) = default;
  friend bool operator==(const IndexTuple&, const IndexTuple&) = default;

 private:
  std::vector<int> entries_;
};

/// Componentwise (Bruhat) order on I(r, n).
bool tuple_leq(const IndexTuple& lhs, const IndexTuple& rhs);

/// All of I(r, n) in lexicographic order.
std::vector<IndexTuple> all_index_tuples(int r, int n);

/// Numerical data of one Richardson variety X^{v_l}_w in G(r, n), gcd(r, n) = 1.
///
/// Indices are 1-based: a(i), c(i), l(i) accept 0 <= i <= r,
/// block1(i), block2(i) accept 1 <= i <= r. l(0) = 1 and l(r) = a(r) + 1 are
/// the sentinels.
///
/// The union of the blocks C_{i,2}, i = 1..r-1, is flattened into one
/// coordinate axis: blocks in increasing i, values increasing within a block.
/// Empty blocks occupy zero coordinates but still count as blocks.
class QuotientSetup {
 public:
  int r() const { return r_; }
  int n() const { return n_; }

  int a(int i) const { return a_[static_cast<std::size_t>(i)]; }
  int c(int i) const { return c_[static_cast<std::size_t>(i)]; }
  int l(int i) const { return l_[static_cast<std::size_t>(i)]; }

  /// (l_1, ..., l_{r-1}) as passed to compute_setup.
  std::vector<int> l_choice() const;

  /// C_{i,1} = [a_{i-1}+1, l_i-1].
  Interval block1(int i) const { return {a(i - 1) + 1, l(i) - 1}; }
  /// C_{i,2} = [l_i, a_i]; empty for i = r.
  Interval block2(int i) const { return {l(i), a(i)}; }
  /// C_i = [a_{i-1}+1, a_i].
  Interval block(int i) const { return {a(i - 1) + 1, a(i)}; }

  /// Entries allowed in row i of a nonvanishing monomial: [l_{i-1}, a_i].
  Interval row_range(int i) const { return {l(i - 1), a(i)}; }
  /// Row i range of the P1 predicate: [l_{i-1}, a_{i-1}+1].
  Interval p1_range(int i) const { return {l(i - 1), a(i - 1) + 1}; }
  /// Row i range of the P2 predicate: [a_{i-1}+1, a_i].
  Interval p2_range(int i) const { return {a(i - 1) + 1, a(i)}; }

  const IndexTuple& w() const { return w_; }
  const IndexTuple& v() const { return v_; }
  const IndexTuple& vl() const { return vl_; }

  /// Number of lattice coordinates, |C|.
  int coord_count() const { return offsets_.back(); }
  /// Flat offset of block C_{i,2}, 1 <= i <= r-1.
  int block_offset(int i) const { return offsets_[static_cast<std::size_t>(i - 1)]; }
  int block_size(int i) const { return block2(i).size(); }

  struct CoordLabel {
    int block;  // i
    int value;  // j in C_{i,2}
  };
  CoordLabel coord_label(int k) const;

  /// Dimension a_i - l_i of the i-th projective factor, 1 <= i <= r-1.
  int factor_dim(int i) const { return a(i) - l(i); }

  std::string describe() const;

  friend QuotientSetup compute_setup(int r, int n, std::span<const int> l);

 private:
  QuotientSetup() = default;

  int r_ = 0;
  int n_ = 0;
  std::vector<int> a_;
  std::vector<int> c_;
  std::vector<int> l_;
  std::vector<int> offsets_;
  IndexTuple w_;
  IndexTuple v_;
  IndexTuple vl_;
};

/// Builds and validates the setup for (r, n, l_1..l_{r-1}).
/// Throws InputError on r, n out of range, gcd(r, n) != 1, wrong length of l,
/// or any l_i outside [a_{i-1}+2, a_i].
QuotientSetup compute_setup(int r, int n, std::span<const int> l);

inline QuotientSetup compute_setup(int r, int n, std::initializer_list<int> l) {
  return compute_setup(r, n, std::span<const int>(l.begin(), l.size()));
}

/// True iff p_tau vanishes identically on X^{v_l}_w, i.e. some tau_i lies
/// outside [l_{i-1}, a_i].
bool vanishes_on_richardson(const IndexTuple& tau, const QuotientSetup& s);

/// Every admissible choice (l_1, ..., l_{r-1}) for (r, n); empty when some
/// a_i - a_{i-1} < 2 for i < r. Requires gcd(r, n) = 1.
std::vector<std::vector<int>> admissible_l_choices(int r, int n);

/// Checks every numerical invariant of one setup: coprimality, a_r = n,
/// c_0 = c_r = 0, 0 < c_i < r, the chain a_{i-1} < a_{i-1}+2 <= l_i <= a_i,
/// the partition of [1, n] into the blocks, and the disjointness of P1/P2
/// ranges from the row ranges of other rows.
Report verify_setup_invariants(const QuotientSetup& s);

/// compute_setup + verify_setup_invariants for every coprime (r, n) with
/// 2 <= n <= n_max and every admissible l.
Report verify_setup_sweep(int n_max);

}  // namespace tquot
