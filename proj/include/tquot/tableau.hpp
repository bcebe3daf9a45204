#pragma once

#include "tquot/report.hpp"
#include "tquot/setup.hpp"

#include <compare>
#include <cstdint>
#include <string>
#include <vector>

namespace tquot {

/// Rectangular Young tableau of shape m*omega_r: r rows, m columns.
/// Boxes are addressed 1-based as (i, j) = (row, column).
class Tableau {
 public:
  Tableau() = default;

  /// The unique tableau with `rows` rows and no columns.
  static Tableau empty(int rows);
  /// Throws InputError on ragged input.
  static Tableau from_rows(const std::vector<std::vector<int>>& rows);
  /// Each inner vector is one column (top to bottom) of length `rows`.
  static Tableau from_columns(int rows, const std::vector<std::vector<int>>& cols);

  int rows() const { return rows_; }
  int cols() const { return cols_; }

  int at(int i, int j) const { return grid_[index(i, j)]; }
  void set(int i, int j, int value) { grid_[index(i, j)] = value; }

  std::vector<int> row(int i) const;
  std::vector<int> column(int j) const;
  std::vector<std::vector<int>> row_lists() const;

  /// Columns first..last (1-based, inclusive); empty when last < first.
  Tableau column_range(int first, int last) const;

  std::string str() const;

  friend auto operator<=>(const Tableau&, const Tableau&) = default;
  friend bool operator==(const Tableau&, const Tableau&) = default;

 private:
  std::size_t index(int i, int j) const {
    return static_cast<std::size_t>(i - 1) * static_cast<std::size_t>(cols_) +
           static_cast<std::size_t>(j - 1);
  }

  int rows_ = 0;
  int cols_ = 0;
  std::vector<int> grid_;
};

bool is_row_semistandard(const Tableau& t);
bool is_column_standard(const Tableau& t);
/// Rows weakly increase left to right, columns strictly increase downward.
bool is_semistandard(const Tableau& t);

/// Occurrence counts of 1..n; component k-1 holds wt_k.
std::vector<int> weight(const Tableau& t, int n);

/// Column concatenation; throws InputError on row-count mismatch.
Tableau product(const Tableau& lhs, const Tableau& rhs);

struct SplitTableau {
  Tableau first;   // columns 1..rd
  Tableau second;  // columns rd+1..nd
};

/// Cuts a tableau with nd columns after column rd.
SplitTableau split(const Tableau& t, const QuotientSetup& s, int d);

/// Row i entries lie in [l_{i-1}, a_{i-1}+1].
bool satisfies_p1(const Tableau& t, const QuotientSetup& s);
/// Row i entries lie in [a_{i-1}+1, a_i].
bool satisfies_p2(const Tableau& t, const QuotientSetup& s);

/// A run of boxes {row} x cols.
struct BoxRun {
  int row = 0;
  Interval cols;

  friend bool operator==(const BoxRun&, const BoxRun&) = default;
};

/// B_{i,1} = {i} x [dc_{i-1}+1, dn] and B_{i,2} = {i+1} x [1, dc_i].
struct BoxPartition {
  int d = 0;
  std::vector<BoxRun> first;   // index i-1 holds B_{i,1}
  std::vector<BoxRun> second;  // index i-1 holds B_{i,2}

  const BoxRun& b1(int i) const { return first[static_cast<std::size_t>(i - 1)]; }
  const BoxRun& b2(int i) const { return second[static_cast<std::size_t>(i - 1)]; }
};

BoxPartition box_partition(const QuotientSetup& s, int d);

/// Membership in ST(lambda_d): semistandard, every value 1..n exactly rd
/// times, row i entries within [l_{i-1}, a_i].
bool is_t_invariant(const Tableau& t, const QuotientSetup& s, int d);

/// Box-wise criterion: for every i, B_i is row semistandard, holds each value
/// of C_i exactly rd times, and Gamma(i,1) >= l_{i-1}.
bool is_t_invariant_via_boxes(const Tableau& t, const QuotientSetup& s, int d);

/// The four intermediate facts used to derive semistandardness from the
/// box-wise criterion.
struct AppendixSteps {
  bool row_semistandard = false;
  bool last_column_is_a = false;     // Gamma(i, nd) = a_i
  bool column_rd_is_floor = false;   // Gamma(i, rd) = a_{i-1} + 1
  bool column_standard = false;
  std::vector<std::string> failures;

  bool ok() const { return failures.empty(); }
};

AppendixSteps check_appendix_steps(const Tableau& t, const QuotientSetup& s, int d);

/// ST(lambda_d) by direct search over weakly increasing rows with running
/// column-strictness and content pruning. Sorted ascending. Independent of
/// the lattice construction.
std::vector<Tableau> enumerate_st_bruteforce(const QuotientSetup& s, int d);

/// Over every member of ST(lambda_d): the box-wise criterion holds, the
/// four derivation steps hold, values <= a_i fill exactly [1,i]x[1,dn] u
/// {i+1}x[1,dc_i], B_i holds C_i and B_{i,2} holds C_{i,2}, the split halves
/// satisfy P1 and P2, and distinct members differ somewhere in the B_{i,2}.
Report verify_tableau_structure(const QuotientSetup& s, int d);

/// Agreement of is_t_invariant and is_t_invariant_via_boxes. Every filling
/// with row i drawn from [l_{i-1}, a_i] is tried when there are at most
/// `exhaustive_limit` of them; otherwise `random_trials` seeded random
/// fillings plus single-entry and swap mutations of every member.
Report verify_t_invariance_equivalence(const QuotientSetup& s, int d, std::uint64_t seed,
                                       std::size_t exhaustive_limit = 300000, std::size_t random_trials = 20000);

}  // namespace tquot
