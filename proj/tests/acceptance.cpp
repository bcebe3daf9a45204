// One PASS/FAIL line per acceptance criterion; exit status 1 if any fails.

#include "tquot/cli.hpp"
#include "tquot/lattice.hpp"
#include "tquot/pluecker.hpp"
#include "tquot/rings.hpp"
#include "tquot/setup.hpp"
#include "tquot/straighten.hpp"
#include "tquot/tableau.hpp"

#include <chrono>
#include <cstdio>
#include <functional>
#include <sstream>
#include <string>
#include <vector>

using namespace tquot;

namespace {

constexpr std::uint64_t kSeed = 20240601;

struct TestSetup {
  int r, n;
  std::vector<int> l;
};

// (3,5) admits only l = (2,4).
const std::vector<TestSetup> kSetups{{2, 5, {2}}, {2, 5, {3}}, {3, 5, {2, 4}}, {3, 7, {2, 5}},
                                     {3, 7, {3, 5}}, {2, 7, {2}}, {2, 7, {3}}, {2, 7, {4}}};

QuotientSetup make(const TestSetup& t) { return compute_setup(t.r, t.n, t.l); }

int bijection_degree(const QuotientSetup& s) { return s.r() == 2 ? 3 : 2; }

struct Verdict {
  bool ok = true;
  std::string note;

  void need(bool cond, const std::string& why) {
    if (!cond && ok) note = why;
    ok = ok && cond;
  }
  void need(const Report& rep, const std::string& where) {
    std::string why = rep.check + " failed at " + where;
    if (!rep.counterexamples.empty()) why += ": " + rep.counterexamples.front().dump().substr(0, 300);
    need(rep.passed(), why);
  }
};

Verdict setup_sweep() {
  Verdict v;
  const Report rep = verify_setup_sweep(12);
  v.need(rep, "n <= 12");
  v.note = v.ok ? std::to_string(rep.summary.value("setups", 0)) + " setups" : v.note;
  return v;
}

Verdict bijection() {
  Verdict v;
  for (const auto& t : kSetups) {
    const auto s = make(t);
    for (int d = 1; d <= bijection_degree(s); ++d) v.need(verify_bijection(s, d), s.describe() + " d=" + std::to_string(d));
  }
  const std::vector<std::size_t> anchor{2, 3, 4};
  const auto s25 = compute_setup(2, 5, {2});
  for (int d = 1; d <= 3; ++d)
    v.need(enumerate_st_bruteforce(s25, d).size() == anchor[static_cast<std::size_t>(d - 1)],
           "(2,5,l=2) anchor at d=" + std::to_string(d));
  v.need(enumerate_st_bruteforce(compute_setup(3, 7, {2, 5}), 1).size() == 3, "(3,7,l=(2,5)) anchor at d=1");
  return v;
}

Verdict appendix_steps() {
  Verdict v;
  std::size_t checked = 0;
  for (const auto& t : kSetups) {
    const auto s = make(t);
    for (int d = 1; d <= bijection_degree(s); ++d)
      for (const auto& g : enumerate_st_bruteforce(s, d)) {
        const auto steps = check_appendix_steps(g, s, d);
        v.need(steps.ok() && steps.last_column_is_a && steps.column_rd_is_floor, s.describe() + " " + g.str());
        ++checked;
      }
  }
  if (v.ok) v.note = std::to_string(checked) + " tableaux";
  return v;
}

Verdict oracle_soundness() {
  Verdict v;
  std::size_t relations = 0;
  for (const auto& [r, n] : std::vector<std::pair<int, int>>{{2, 4}, {2, 5}, {3, 6}}) {
    const Report rep = verify_relation_oracle(r, n, 100, kSeed + static_cast<std::uint64_t>(10 * r + n));
    v.need(rep, "G(" + std::to_string(r) + "," + std::to_string(n) + ")");
    relations += rep.cases;
  }
  if (v.ok) v.note = std::to_string(relations) + " relations x 100 matrices";
  return v;
}

Verdict binomial_law() {
  Verdict v;
  for (const auto& t : kSetups) {
    const auto s = make(t);
    v.need(verify_binomial_law(s, 20, kSeed), s.describe());
  }
  return v;
}

Verdict straightening() {
  Verdict v;
  for (const auto& t : kSetups) {
    const auto s = make(t);
    v.need(verify_straightening(s, 20, kSeed), s.describe());
  }
  return v;
}

Verdict isomorphism() {
  Verdict v;
  for (const auto& t : kSetups) {
    const auto s = make(t);
    v.need(verify_isomorphism(s, 3), s.describe());
  }
  return v;
}

Verdict hilbert_level() {
  Verdict v;
  for (const auto& t : kSetups) {
    const auto s = make(t);
    v.need(verify_hilbert(s, 3), s.describe());
  }
  auto dims = [](const QuotientSetup& s) {
    std::vector<BigInt> out;
    for (const auto& row : hilbert(s, 3)) out.push_back(row.dim_r);
    return out;
  };
  v.need(dims(compute_setup(2, 5, {2})) == std::vector<BigInt>{2, 3, 4}, "(2,5,l=2) anchor (2,3,4)");
  v.need(dims(compute_setup(3, 7, {2, 5})) == std::vector<BigInt>{3, 5, 7}, "(3,7,l=(2,5)) anchor (3,5,7)");
  return v;
}

Verdict cli() {
  Verdict v;
  for (const auto& t : kSetups) {
    RunConfig cfg;
    cfg.r = t.r;
    cfg.n = t.n;
    cfg.l = t.l;
    cfg.seed = kSeed;
    std::ostringstream out, err;
    v.need(run_command("verify", cfg, out, err) == 0, "verify exit code on " + make(t).describe());
  }

  const Report mutated = verify_relation_oracle(2, 4, 100, kSeed, SignFault{0, 1});
  v.need(!mutated.passed() && !mutated.counterexamples.empty() && mutated.counterexamples.front().contains("matrix"),
         "sign fault not detected by the G(2,4) oracle sweep");

  RunConfig cfg;
  cfg.r = 2;
  cfg.n = 5;
  cfg.l = {2};
  cfg.seed = kSeed;
  cfg.sign_fault = SignFault{0, 1};
  std::ostringstream out, err;
  const int code = run_command("verify", cfg, out, err);
  bool serialized = false;
  const auto doc = nlohmann::json::parse(out.str());
  for (const auto& res : doc.at("results"))
    if (res.at("check") == "relation_oracle")
      serialized = res.at("status") == "fail" && res.at("detail").contains("counterexamples");
  v.need(code == 1 && serialized, "verify --inject-sign-fault did not exit 1 with a counterexample");
  if (v.ok) v.note = "8 setups exit 0; sign fault exits 1 with counterexample";
  return v;
}

}  // namespace

int main() {
  const std::vector<std::pair<std::string, std::function<Verdict()>>> criteria{
      {"setup sweep n <= 12", setup_sweep},
      {"bijection P_d <-> ST(lambda_d)", bijection},
      {"row/column anchors on every member", appendix_steps},
      {"oracle soundness G(2,4) G(2,5) G(3,6)", oracle_soundness},
      {"binomial law, 20 Richardson points", binomial_law},
      {"straightening, 20 Richardson points", straightening},
      {"isomorphism d <= 3", isomorphism},
      {"Hilbert functions d <= 3", hilbert_level},
      {"CLI verify and sign-fault mutation", cli},
  };

  int failed = 0;
  for (std::size_t k = 0; k < criteria.size(); ++k) {
    const auto start = std::chrono::steady_clock::now();
    Verdict v;
    try {
      v = criteria[k].second();
    } catch (const std::exception& e) {
      v.ok = false;
      v.note = std::string("exception: ") + e.what();
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    std::printf("%s  %zu. %-42s %6.2fs  %s\n", v.ok ? "PASS" : "FAIL", k + 1, criteria[k].first.c_str(), secs,
                v.note.c_str());
    failed += v.ok ? 0 : 1;
  }
  std::printf("%zu/%zu criteria passed\n", criteria.size() - static_cast<std::size_t>(failed), criteria.size());
  return failed == 0 ? 0 : 1;
}
