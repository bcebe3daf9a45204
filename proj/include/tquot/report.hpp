#pragma once

#include <json.hpp>

#include <cstddef>
#include <string>
#include <utility>
#include <vector>

namespace tquot {

/// Outcome of one verification sweep. Counterexamples are kept as JSON so a
/// failing case can be serialized verbatim by the CLI.
struct Report {
  std::string check;
  std::size_t cases = 0;
  std::size_t failures = 0;
  std::vector<nlohmann::json> counterexamples;
  nlohmann::json summary = nlohmann::json::object();

  static constexpr std::size_t kMaxKept = 8;

  explicit Report(std::string name) : check(std::move(name)) {}

  bool passed() const { return failures == 0; }

  void pass() { ++cases; }

  void fail(nlohmann::json counterexample) {
    ++cases;
    ++failures;
    if (counterexamples.size() < kMaxKept) counterexamples.push_back(std::move(counterexample));
  }

  void expect(bool ok, const nlohmann::json& counterexample) {
    if (ok)
      pass();
    else
      fail(counterexample);
  }

  /// Fold another report's counts and counterexamples into this one.
  void absorb(const Report& other) {
    cases += other.cases;
    failures += other.failures;
    for (const auto& c : other.counterexamples) {
      if (counterexamples.size() >= kMaxKept) break;
      counterexamples.push_back(c);
    }
  }
};

}  // namespace tquot
