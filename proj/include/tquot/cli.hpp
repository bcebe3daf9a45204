#pragma once

#include "tquot/pluecker.hpp"

#include <json.hpp>

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

namespace tquot {

enum class OutputFormat { Json, Csv, Text };

OutputFormat parse_format(const std::string& name);

struct RunConfig {
  int r = 0;
  int n = 0;
  std::vector<int> l;
  int d_max = 3;
  int samples = 20;
  std::uint64_t seed = 1;
  OutputFormat format = OutputFormat::Json;
  std::string out;  // empty: standard output
  std::optional<SignFault> sign_fault;
  std::vector<std::string> tableau_files;  // straighten only

  nlohmann::json to_json() const;
};

/// {"config": ..., "results": [{"check", "status", "detail"}], "data": ...}
/// plus the exit code the document implies.
struct CommandOutput {
  nlohmann::json document;
  int exit_code = 0;
};

CommandOutput cmd_setup(const RunConfig& cfg);
CommandOutput cmd_enumerate(const RunConfig& cfg);
CommandOutput cmd_verify(const RunConfig& cfg);
CommandOutput cmd_hilbert(const RunConfig& cfg);
CommandOutput cmd_straighten(const RunConfig& cfg);

std::string render(const CommandOutput& result, const std::string& command, OutputFormat format);

/// Validates cfg, runs the named command and writes the rendering to cfg.out
/// or `out`. Returns 0 (all pass), 1 (a check failed) or 2 (invalid input,
/// message on `err`).
int run_command(const std::string& command, const RunConfig& cfg, std::ostream& out, std::ostream& err);

}  // namespace tquot
