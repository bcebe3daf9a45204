#include "tquot/tableau.hpp"

#include "tquot/error.hpp"

#include <algorithm>
#include <map>
#include <random>
#include <sstream>

namespace tquot {

Tableau Tableau::empty(int rows) {
  Tableau t;
  t.rows_ = rows;
  return t;
}

Tableau Tableau::from_rows(const std::vector<std::vector<int>>& rows) {
  Tableau t;
  t.rows_ = static_cast<int>(rows.size());
  t.cols_ = rows.empty() ? 0 : static_cast<int>(rows.front().size());
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (static_cast<int>(rows[i].size()) != t.cols_)
      throw InputError("ragged tableau: row " + std::to_string(i + 1) + " has " +
                       std::to_string(rows[i].size()) + " entries, expected " +
                       std::to_string(t.cols_));
    t.grid_.insert(t.grid_.end(), rows[i].begin(), rows[i].end());
  }
  return t;
}

Tableau Tableau::from_columns(int rows, const std::vector<std::vector<int>>& cols) {
  Tableau t;
  t.rows_ = rows;
  t.cols_ = static_cast<int>(cols.size());
  t.grid_.assign(static_cast<std::size_t>(rows) * cols.size(), 0);
  for (int j = 1; j <= t.cols_; ++j) {
    const auto& col = cols[static_cast<std::size_t>(j - 1)];
    if (static_cast<int>(col.size()) != rows)
      throw InputError("column " + std::to_string(j) + " has length " +
                       std::to_string(col.size()) + ", expected " + std::to_string(rows));
    for (int i = 1; i <= rows; ++i) t.set(i, j, col[static_cast<std::size_t>(i - 1)]);
  }
  return t;
}

std::vector<int> Tableau::row(int i) const {
  auto first = grid_.begin() + static_cast<std::ptrdiff_t>(index(i, 1));
  return std::vector<int>(first, first + cols_);
}

std::vector<int> Tableau::column(int j) const {
  std::vector<int> out;
  out.reserve(static_cast<std::size_t>(rows_));
  for (int i = 1; i <= rows_; ++i) out.push_back(at(i, j));
  return out;
}

std::vector<std::vector<int>> Tableau::row_lists() const {
  std::vector<std::vector<int>> out;
  for (int i = 1; i <= rows_; ++i) out.push_back(row(i));
  return out;
}

Tableau Tableau::column_range(int first, int last) const {
  Tableau t;
  t.rows_ = rows_;
  t.cols_ = std::max(0, last - first + 1);
  for (int i = 1; i <= rows_; ++i)
    for (int j = first; j <= last; ++j) t.grid_.push_back(at(i, j));
  return t;
}

std::string Tableau::str() const {
  std::ostringstream os;
  os << '[';
  for (int i = 1; i <= rows_; ++i) {
    if (i > 1) os << ',';
    os << '[';
    for (int j = 1; j <= cols_; ++j) os << (j > 1 ? "," : "") << at(i, j);
    os << ']';
  }
  os << ']';
  return os.str();
}

bool is_row_semistandard(const Tableau& t) {
  for (int i = 1; i <= t.rows(); ++i)
    for (int j = 1; j < t.cols(); ++j)
      if (t.at(i, j) > t.at(i, j + 1)) return false;
  return true;
}

bool is_column_standard(const Tableau& t) {
  for (int j = 1; j <= t.cols(); ++j)
    for (int i = 1; i < t.rows(); ++i)
      if (t.at(i, j) >= t.at(i + 1, j)) return false;
  return true;
}

bool is_semistandard(const Tableau& t) { return is_row_semistandard(t) && is_column_standard(t); }

std::vector<int> weight(const Tableau& t, int n) {
  std::vector<int> wt(static_cast<std::size_t>(n), 0);
  for (int i = 1; i <= t.rows(); ++i)
    for (int j = 1; j <= t.cols(); ++j) {
      const int v = t.at(i, j);
      if (v < 1 || v > n)
        throw InputError("entry " + std::to_string(v) + " at (" + std::to_string(i) + "," +
                         std::to_string(j) + ") outside [1," + std::to_string(n) + "]");
      ++wt[static_cast<std::size_t>(v - 1)];
    }
  return wt;
}

Tableau product(const Tableau& lhs, const Tableau& rhs) {
  if (lhs.rows() != rhs.rows())
    throw InputError("product of tableaux with " + std::to_string(lhs.rows()) + " and " +
                     std::to_string(rhs.rows()) + " rows");
  std::vector<std::vector<int>> rows;
  for (int i = 1; i <= lhs.rows(); ++i) {
    auto row = lhs.row(i);
    auto tail = rhs.row(i);
    row.insert(row.end(), tail.begin(), tail.end());
    rows.push_back(std::move(row));
  }
  if (rows.empty()) return Tableau::empty(0);
  return Tableau::from_rows(rows);
}

SplitTableau split(const Tableau& t, const QuotientSetup& s, int d) {
  if (d < 0 || t.cols() != s.n() * d)
    throw InputError("split: tableau has " + std::to_string(t.cols()) + " columns, expected nd=" +
                     std::to_string(s.n() * d));
  const int cut = s.r() * d;
  return {t.column_range(1, cut), t.column_range(cut + 1, t.cols())};
}

namespace {

bool rows_within(const Tableau& t, const QuotientSetup& s, Interval (QuotientSetup::*range)(int) const) {
  if (t.rows() != s.r()) return false;
  for (int i = 1; i <= t.rows(); ++i) {
    const Interval iv = (s.*range)(i);
    for (int j = 1; j <= t.cols(); ++j)
      if (!iv.contains(t.at(i, j))) return false;
  }
  return true;
}

}  // namespace

bool satisfies_p1(const Tableau& t, const QuotientSetup& s) {
  return rows_within(t, s, &QuotientSetup::p1_range);
}

bool satisfies_p2(const Tableau& t, const QuotientSetup& s) {
  return rows_within(t, s, &QuotientSetup::p2_range);
}

BoxPartition box_partition(const QuotientSetup& s, int d) {
  if (d < 1) throw InputError("box_partition needs d >= 1");
  BoxPartition bp;
  bp.d = d;
  const int width = s.n() * d;
  for (int i = 1; i <= s.r(); ++i) {
    bp.first.push_back({i, {d * s.c(i - 1) + 1, width}});
    bp.second.push_back({i + 1, {1, d * s.c(i)}});
  }
  return bp;
}

bool is_t_invariant(const Tableau& t, const QuotientSetup& s, int d) {
  if (d < 0 || t.rows() != s.r() || t.cols() != s.n() * d) return false;
  for (int i = 1; i <= t.rows(); ++i) {
    const Interval iv = s.row_range(i);
    for (int j = 1; j <= t.cols(); ++j)
      if (!iv.contains(t.at(i, j))) return false;
  }
  if (!is_semistandard(t)) return false;
  const auto wt = weight(t, s.n());
  return std::all_of(wt.begin(), wt.end(), [&](int k) { return k == s.r() * d; });
}

bool is_t_invariant_via_boxes(const Tableau& t, const QuotientSetup& s, int d) {
  if (d < 0 || t.rows() != s.r() || t.cols() != s.n() * d) return false;
  if (d == 0) return true;
  const BoxPartition bp = box_partition(s, d);
  const int target = s.r() * d;
  for (int i = 1; i <= s.r(); ++i) {
    const Interval content = s.block(i);
    std::vector<int> count(static_cast<std::size_t>(content.size()), 0);
    for (const BoxRun& run : {bp.b1(i), bp.b2(i)}) {
      if (run.cols.empty()) continue;
      int prev = 0;
      for (int j = run.cols.lo; j <= run.cols.hi; ++j) {
        const int v = t.at(run.row, j);
        if (v < prev) return false;
        prev = v;
        if (!content.contains(v)) return false;
        ++count[static_cast<std::size_t>(v - content.lo)];
      }
    }
    if (std::any_of(count.begin(), count.end(), [&](int k) { return k != target; })) return false;
    if (t.at(i, 1) < s.l(i - 1)) return false;
  }
  return true;
}

AppendixSteps check_appendix_steps(const Tableau& t, const QuotientSetup& s, int d) {
  AppendixSteps rep;
  const int nd = s.n() * d;
  const int rd = s.r() * d;
  if (d < 1 || t.rows() != s.r() || t.cols() != nd) {
    rep.failures.push_back("shape mismatch for d=" + std::to_string(d));
    return rep;
  }
  rep.row_semistandard = is_row_semistandard(t);
  if (!rep.row_semistandard) rep.failures.push_back("step 1: not row semistandard");

  rep.last_column_is_a = true;
  rep.column_rd_is_floor = true;
  for (int i = 1; i <= s.r(); ++i) {
    if (t.at(i, nd) != s.a(i)) {
      rep.last_column_is_a = false;
      rep.failures.push_back("step 2: Gamma(" + std::to_string(i) + "," + std::to_string(nd) +
                             ")=" + std::to_string(t.at(i, nd)) + " != a_i=" + std::to_string(s.a(i)));
    }
    if (t.at(i, rd) != s.a(i - 1) + 1) {
      rep.column_rd_is_floor = false;
      rep.failures.push_back("step 3: Gamma(" + std::to_string(i) + "," + std::to_string(rd) +
                             ")=" + std::to_string(t.at(i, rd)) +
                             " != a_{i-1}+1=" + std::to_string(s.a(i - 1) + 1));
    }
  }
  rep.column_standard = is_column_standard(t);
  if (!rep.column_standard) rep.failures.push_back("step 4: not column standard");
  return rep;
}

namespace {

class StSearch {
 public:
  StSearch(const QuotientSetup& s, int d)
      : s_(s),
        r_(s.r()),
        m_(s.n() * d),
        remaining_(static_cast<std::size_t>(s.n()) + 1, s.r() * d),
        grid_(static_cast<std::size_t>(r_) * static_cast<std::size_t>(m_), 0) {
    remaining_[0] = 0;
  }

  std::vector<Tableau> run() {
    dfs(0);
    std::sort(out_.begin(), out_.end());
    return out_;
  }

 private:
  int& cell(int i, int j) {
    return grid_[static_cast<std::size_t>(i - 1) * static_cast<std::size_t>(m_) +
                 static_cast<std::size_t>(j - 1)];
  }

  // Smallest value that still needs placing but cannot appear below row i.
  int stranded_below(int i) const {
    const int next_lo = i < r_ ? s_.row_range(i + 1).lo : s_.n() + 1;
    for (int u = 1; u < next_lo && u <= s_.n(); ++u)
      if (remaining_[static_cast<std::size_t>(u)] > 0) return u;
    return s_.n() + 1;
  }

  void dfs(int pos) {
    if (pos == r_ * m_) {
      std::vector<std::vector<int>> rows;
      for (int i = 1; i <= r_; ++i) {
        auto first = grid_.begin() + static_cast<std::ptrdiff_t>((i - 1) * m_);
        rows.emplace_back(first, first + m_);
      }
      out_.push_back(m_ == 0 ? Tableau::empty(r_) : Tableau::from_rows(rows));
      return;
    }
    const int i = pos / m_ + 1;
    const int j = pos % m_ + 1;
    const Interval range = s_.row_range(i);

    // Values confined to rows <= i must fit in what is left of row i.
    const int next_lo = i < r_ ? s_.row_range(i + 1).lo : s_.n() + 1;
    int must_place = 0;
    for (int u = 1; u < next_lo && u <= s_.n(); ++u) must_place += remaining_[static_cast<std::size_t>(u)];
    if (must_place > m_ - j + 1) return;

    int lo = range.lo;
    if (j > 1) lo = std::max(lo, cell(i, j - 1));
    if (i > 1) lo = std::max(lo, cell(i - 1, j) + 1);
    const int hi = std::min(range.hi, stranded_below(i));

    for (int v = lo; v <= hi; ++v) {
      auto& left = remaining_[static_cast<std::size_t>(v)];
      if (left == 0) continue;
      --left;
      cell(i, j) = v;
      dfs(pos + 1);
      ++left;
    }
  }

  const QuotientSetup& s_;
  int r_;
  int m_;
  std::vector<int> remaining_;
  std::vector<int> grid_;
  std::vector<Tableau> out_;
};

}  // namespace

std::vector<Tableau> enumerate_st_bruteforce(const QuotientSetup& s, int d) {
  if (d < 0) throw InputError("degree must be nonnegative");
  if (d == 0) return {Tableau::empty(s.r())};
  return StSearch(s, d).run();
}

}  // namespace tquot

namespace tquot {

Report verify_tableau_structure(const QuotientSetup& s, int d) {
  Report rep("tableau_structure");
  const auto members = enumerate_st_bruteforce(s, d);
  const int r = s.r();
  const int nd = s.n() * d;
  const BoxPartition bp = box_partition(s, d);

  std::map<std::vector<int>, std::size_t> by_b2;
  for (std::size_t idx = 0; idx < members.size(); ++idx) {
    const Tableau& t = members[idx];
    nlohmann::json where = {{"d", d}, {"tableau", t.row_lists()}};

    where["reason"] = "box-wise criterion rejects a member";
    rep.expect(is_t_invariant_via_boxes(t, s, d), where);

    const AppendixSteps steps = check_appendix_steps(t, s, d);
    where["reason"] = "derivation steps";
    where["failures"] = steps.failures;
    rep.expect(steps.ok(), where);
    where.erase("failures");

    for (int i = 1; i <= r; ++i) {
      bool boxes_ok = true;
      for (int row = 1; row <= r; ++row)
        for (int col = 1; col <= nd; ++col) {
          const bool small = t.at(row, col) <= s.a(i);
          const bool predicted = row <= i || (row == i + 1 && col <= d * s.c(i));
          boxes_ok = boxes_ok && small == predicted;
        }
      where["reason"] = "values <= a_i do not fill the predicted boxes";
      where["i"] = i;
      rep.expect(boxes_ok, where);

      bool content_ok = true;
      for (const BoxRun& run : {bp.b1(i), bp.b2(i)})
        for (int col = run.cols.lo; col <= run.cols.hi; ++col)
          content_ok = content_ok && s.block(i).contains(t.at(run.row, col));
      for (int col = bp.b2(i).cols.lo; col <= bp.b2(i).cols.hi; ++col)
        content_ok = content_ok && s.block2(i).contains(t.at(bp.b2(i).row, col));
      where["reason"] = "B_i does not hold C_i, or B_{i,2} does not hold C_{i,2}";
      rep.expect(content_ok, where);
      where.erase("i");
    }

    const SplitTableau halves = split(t, s, d);
    where["reason"] = "split halves fail P1/P2";
    rep.expect(satisfies_p1(halves.first, s) && satisfies_p2(halves.second, s) &&
                   product(halves.first, halves.second) == t,
               where);

    std::vector<int> b2_contents;
    for (int i = 1; i <= r - 1; ++i)
      for (int col = bp.b2(i).cols.lo; col <= bp.b2(i).cols.hi; ++col) b2_contents.push_back(t.at(i + 1, col));
    auto [it, inserted] = by_b2.emplace(b2_contents, idx);
    where["reason"] = "two members share all B_{i,2} entries";
    if (!inserted) where["other"] = members[it->second].row_lists();
    rep.expect(inserted, where);
  }
  rep.summary = {{"d", d}, {"members", members.size()}};
  return rep;
}

Report verify_t_invariance_equivalence(const QuotientSetup& s, int d, std::uint64_t seed,
                                       std::size_t exhaustive_limit, std::size_t random_trials) {
  Report rep("t_invariance_equivalence");
  const int r = s.r();
  const int m = s.n() * d;
  std::size_t accepted = 0;

  auto judge = [&](const Tableau& t) {
    const bool direct = is_t_invariant(t, s, d);
    const bool boxes = is_t_invariant_via_boxes(t, s, d);
    accepted += direct ? 1 : 0;
    rep.expect(direct == boxes,
               {{"d", d}, {"tableau", t.row_lists()}, {"direct", direct}, {"boxes", boxes}});
  };

  double total = 1.0;
  for (int i = 1; i <= r; ++i)
    for (int j = 0; j < m; ++j) total *= s.row_range(i).size();

  std::vector<std::vector<int>> rows(static_cast<std::size_t>(r), std::vector<int>(static_cast<std::size_t>(m)));
  if (total <= static_cast<double>(exhaustive_limit)) {
    for (int i = 1; i <= r; ++i) std::fill(rows[static_cast<std::size_t>(i - 1)].begin(),
                                           rows[static_cast<std::size_t>(i - 1)].end(), s.row_range(i).lo);
    while (true) {
      judge(Tableau::from_rows(rows));
      int i = r;
      int j = m;
      while (i >= 1) {
        auto& cell = rows[static_cast<std::size_t>(i - 1)][static_cast<std::size_t>(j - 1)];
        if (cell < s.row_range(i).hi) {
          ++cell;
          break;
        }
        cell = s.row_range(i).lo;
        if (--j == 0) {
          j = m;
          --i;
        }
      }
      if (i < 1) break;
    }
    rep.summary = {{"mode", "exhaustive"}, {"fillings", rep.cases}, {"accepted", accepted}};
    return rep;
  }

  std::mt19937_64 rng(seed);
  for (std::size_t trial = 0; trial < random_trials; ++trial) {
    for (int i = 1; i <= r; ++i) {
      std::uniform_int_distribution<int> pick(s.row_range(i).lo, s.row_range(i).hi);
      auto& row = rows[static_cast<std::size_t>(i - 1)];
      for (auto& v : row) v = pick(rng);
      if (trial % 2 == 0) std::sort(row.begin(), row.end());
    }
    judge(Tableau::from_rows(rows));
  }
  for (const Tableau& t : enumerate_st_bruteforce(s, d)) {
    judge(t);
    for (int i = 1; i <= r; ++i)
      for (int j = 1; j <= m; ++j) {
        for (int v = s.row_range(i).lo; v <= s.row_range(i).hi; ++v) {
          if (v == t.at(i, j)) continue;
          Tableau u = t;
          u.set(i, j, v);
          judge(u);
        }
        if (j < m) {
          Tableau u = t;
          u.set(i, j, t.at(i, j + 1));
          u.set(i, j + 1, t.at(i, j));
          judge(u);
        }
        if (i < r) {
          Tableau u = t;
          u.set(i, j, t.at(i + 1, j));
          u.set(i + 1, j, t.at(i, j));
          judge(u);
        }
      }
  }
  rep.summary = {{"mode", "sampled"}, {"fillings", rep.cases}, {"accepted", accepted}};
  return rep;
}

}  // namespace tquot
