#include "tquot/setup.hpp"

#include "tquot/error.hpp"
#include "tquot/numeric.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

namespace tquot {

namespace {

std::string join(std::span<const int> xs, const char* sep = ",") {
  std::ostringstream os;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    if (i) os << sep;
    os << xs[i];
  }
  return os.str();
}

void check_rn(int r, int n) {
  if (r < 1 || n < 2 || r > n - 1) {
    std::ostringstream os;
    os << "need 1 <= r <= n-1 and n >= 2, got r=" << r << " n=" << n;
    throw InputError(os.str());
  }
  if (std::gcd(r, n) != 1) {
    std::ostringstream os;
    os << "r=" << r << " and n=" << n << " are not coprime (gcd=" << std::gcd(r, n) << ")";
    throw InputError(os.str());
  }
}

std::vector<int> ceil_points(int r, int n) {
  std::vector<int> a(static_cast<std::size_t>(r) + 1, 0);
  for (int i = 1; i <= r; ++i)
    a[static_cast<std::size_t>(i)] = static_cast<int>(ceil_div(std::int64_t{n} * i, r));
  return a;
}

}  // namespace

BigInt binomial(std::int64_t n, std::int64_t k) {
  if (k < 0 || n < 0 || k > n) return 0;
  k = std::min(k, n - k);
  BigInt acc = 1;
  for (std::int64_t i = 1; i <= k; ++i) {
    acc *= n - k + i;
    acc /= i;
  }
  return acc;
}

IndexTuple::IndexTuple(std::vector<int> entries, int n) : entries_(std::move(entries)) {
  for (std::size_t i = 0; i < entries_.size(); ++i) {
    if (entries_[i] < 1 || entries_[i] > n)
      throw InputError("index tuple (" + join(entries_) + ") has an entry outside [1," +
                       std::to_string(n) + "]");
    if (i > 0 && entries_[i - 1] >= entries_[i])
      throw InputError("index tuple (" + join(entries_) + ") is not strictly increasing");
  }
}

std::string IndexTuple::str() const { return "(" + join(entries_) + ")"; }

bool tuple_leq(const IndexTuple& lhs, const IndexTuple& rhs) {
  if (lhs.size() != rhs.size()) throw InputError("tuple_leq: tuples of different length");
  for (std::size_t i = 1; i <= lhs.size(); ++i)
    if (lhs.at(i) > rhs.at(i)) return false;
  return true;
}

std::vector<IndexTuple> all_index_tuples(int r, int n) {
  std::vector<IndexTuple> out;
  if (r < 0 || r > n) return out;
  std::vector<int> cur(static_cast<std::size_t>(r));
  std::iota(cur.begin(), cur.end(), 1);
  while (true) {
    out.emplace_back(cur, n);
    int i = r - 1;
    while (i >= 0 && cur[static_cast<std::size_t>(i)] == n - r + i + 1) --i;
    if (i < 0) break;
    ++cur[static_cast<std::size_t>(i)];
    for (int j = i + 1; j < r; ++j)
      cur[static_cast<std::size_t>(j)] = cur[static_cast<std::size_t>(j) - 1] + 1;
  }
  return out;
}

std::vector<int> QuotientSetup::l_choice() const {
  return std::vector<int>(l_.begin() + 1, l_.end() - 1);
}

QuotientSetup::CoordLabel QuotientSetup::coord_label(int k) const {
  for (int i = 1; i <= r_ - 1; ++i) {
    if (k < block_offset(i + 1)) return {i, l(i) + (k - block_offset(i))};
  }
  throw InputError("coordinate index " + std::to_string(k) + " out of range");
}

std::string QuotientSetup::describe() const {
  std::ostringstream os;
  os << "r=" << r_ << " n=" << n_ << " l=(" << join(l_choice()) << ")";
  return os.str();
}

QuotientSetup compute_setup(int r, int n, std::span<const int> l) {
  check_rn(r, n);
  if (static_cast<int>(l.size()) != r - 1) {
    std::ostringstream os;
    os << "expected " << r - 1 << " values l_1..l_{r-1}, got " << l.size();
    throw InputError(os.str());
  }

  QuotientSetup s;
  s.r_ = r;
  s.n_ = n;
  s.a_ = ceil_points(r, n);
  s.c_.resize(static_cast<std::size_t>(r) + 1);
  for (int i = 0; i <= r; ++i)
    s.c_[static_cast<std::size_t>(i)] = r * s.a(i) - n * i;

  s.l_.assign(static_cast<std::size_t>(r) + 1, 0);
  s.l_[0] = 1;
  s.l_[static_cast<std::size_t>(r)] = s.a(r) + 1;
  for (int i = 1; i <= r - 1; ++i) {
    const int li = l[static_cast<std::size_t>(i - 1)];
    if (li < s.a(i - 1) + 2 || li > s.a(i)) {
      std::ostringstream os;
      os << "l_" << i << "=" << li << " outside admissible range ["
         << s.a(i - 1) + 2 << "," << s.a(i) << "] for r=" << r << " n=" << n;
      throw InputError(os.str());
    }
    s.l_[static_cast<std::size_t>(i)] = li;
  }

  s.offsets_.assign(1, 0);
  for (int i = 1; i <= r - 1; ++i) s.offsets_.push_back(s.offsets_.back() + s.block_size(i));

  std::vector<int> w(s.a_.begin() + 1, s.a_.end());
  std::vector<int> v{1};
  v.insert(v.end(), s.a_.begin() + 1, s.a_.end() - 1);
  std::vector<int> vl(s.l_.begin(), s.l_.end() - 1);
  s.w_ = IndexTuple(std::move(w), n);
  s.v_ = IndexTuple(std::move(v), n);
  s.vl_ = IndexTuple(std::move(vl), n);
  return s;
}

bool vanishes_on_richardson(const IndexTuple& tau, const QuotientSetup& s) {
  if (static_cast<int>(tau.size()) != s.r())
    throw InputError("tuple " + tau.str() + " has length != r=" + std::to_string(s.r()));
  for (int i = 1; i <= s.r(); ++i)
    if (!s.row_range(i).contains(tau.at(static_cast<std::size_t>(i)))) return true;
  return false;
}

std::vector<std::vector<int>> admissible_l_choices(int r, int n) {
  check_rn(r, n);
  const auto a = ceil_points(r, n);
  std::vector<std::vector<int>> out;
  std::vector<int> cur;
  auto rec = [&](auto&& self, int i) -> void {
    if (i == r) {
      out.push_back(cur);
      return;
    }
    for (int li = a[static_cast<std::size_t>(i - 1)] + 2; li <= a[static_cast<std::size_t>(i)]; ++li) {
      cur.push_back(li);
      self(self, i + 1);
      cur.pop_back();
    }
  };
  rec(rec, 1);
  return out;
}

}  // namespace tquot

namespace tquot {

namespace {

bool disjoint(const Interval& x, const Interval& y) {
  return x.empty() || y.empty() || x.hi < y.lo || y.hi < x.lo;
}

}  // namespace

Report verify_setup_invariants(const QuotientSetup& s) {
  Report rep("setup_invariants");
  const int r = s.r();
  const int n = s.n();
  auto where = [&](const char* what) { return nlohmann::json{{"setup", s.describe()}, {"reason", what}}; };

  rep.expect(std::gcd(r, n) == 1, where("gcd(r,n) != 1"));
  rep.expect(s.a(r) == n, where("a_r != n"));
  rep.expect(s.c(0) == 0 && s.c(r) == 0, where("c_0 or c_r nonzero"));
  for (int i = 1; i <= r; ++i) {
    rep.expect(r * s.a(i) >= n * i && r * (s.a(i) - 1) < n * i, where("a_i is not the least a with ra >= ni"));
    rep.expect(s.c(i) == r * s.a(i) - n * i, where("c_i != r a_i - n i"));
  }
  for (int i = 1; i <= r - 1; ++i) {
    rep.expect(0 < s.c(i) && s.c(i) < r, where("c_i outside (0, r)"));
    rep.expect(s.a(i - 1) < s.a(i - 1) + 2 && s.a(i - 1) + 2 <= s.l(i) && s.l(i) <= s.a(i),
               where("chain a_{i-1}+2 <= l_i <= a_i broken"));
  }

  std::vector<int> owner(static_cast<std::size_t>(n) + 1, 0);
  bool partition_ok = true;
  for (int i = 1; i <= r; ++i) {
    const Interval b1 = s.block1(i);
    const Interval b2 = s.block2(i);
    partition_ok = partition_ok && b1.size() + b2.size() == s.a(i) - s.a(i - 1);
    for (const Interval& blk : {b1, b2})
      for (int v = blk.lo; v <= blk.hi; ++v) {
        if (v < 1 || v > n || owner[static_cast<std::size_t>(v)] != 0) partition_ok = false;
        else owner[static_cast<std::size_t>(v)] = i;
      }
  }
  for (int v = 1; v <= n; ++v) partition_ok = partition_ok && owner[static_cast<std::size_t>(v)] != 0;
  partition_ok = partition_ok && s.block2(r).empty();
  rep.expect(partition_ok, where("blocks C_{i,1}, C_{i,2} do not partition [1,n]"));

  for (int i = 1; i <= r; ++i)
    for (int j = 1; j <= r; ++j) {
      if (j < i)
        rep.expect(disjoint(s.p1_range(j), s.row_range(i)), where("P1 range of an earlier row meets row range"));
      if (i < j)
        rep.expect(disjoint(s.p2_range(j), s.row_range(i)), where("P2 range of a later row meets row range"));
    }
  return rep;
}

Report verify_setup_sweep(int n_max) {
  Report rep("setup_sweep");
  std::size_t setups = 0;
  for (int n = 2; n <= n_max; ++n)
    for (int r = 1; r <= n - 1; ++r) {
      if (std::gcd(r, n) != 1) continue;
      for (const auto& l : admissible_l_choices(r, n)) {
        ++setups;
        try {
          rep.absorb(verify_setup_invariants(compute_setup(r, n, l)));
        } catch (const std::exception& e) {
          rep.fail({{"r", r}, {"n", n}, {"l", l}, {"reason", e.what()}});
        }
      }
    }
  rep.summary = {{"n_max", n_max}, {"setups", setups}};
  return rep;
}

}  // namespace tquot
