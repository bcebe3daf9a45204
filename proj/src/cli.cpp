#include "tquot/cli.hpp"

#include "tquot/error.hpp"
#include "tquot/io.hpp"
#include "tquot/lattice.hpp"
#include "tquot/rings.hpp"
#include "tquot/setup.hpp"
#include "tquot/straighten.hpp"
#include "tquot/tableau.hpp"

#include <algorithm>
#include <fstream>
#include <ostream>
#include <sstream>

namespace tquot {

namespace {

using nlohmann::json;

const char* format_name(OutputFormat f) {
  switch (f) {
    case OutputFormat::Json: return "json";
    case OutputFormat::Csv: return "csv";
    case OutputFormat::Text: return "text";
  }
  return "json";
}

QuotientSetup validated_setup(const RunConfig& cfg) {
  if (cfg.samples < 1) throw InputError("--samples must be >= 1");
  if (cfg.d_max < 1) throw InputError("--dmax must be >= 1");
  return compute_setup(cfg.r, cfg.n, cfg.l);
}

json result_entry(const Report& rep) {
  json detail = {{"cases", rep.cases}, {"failures", rep.failures}, {"summary", rep.summary}};
  if (!rep.counterexamples.empty()) detail["counterexamples"] = rep.counterexamples;
  return {{"check", rep.check}, {"status", rep.passed() ? "pass" : "fail"}, {"detail", detail}};
}

CommandOutput assemble(const RunConfig& cfg, const std::vector<Report>& reports, json data = nullptr) {
  CommandOutput out;
  out.document = {{"config", cfg.to_json()}, {"results", json::array()}};
  for (const auto& rep : reports) {
    out.document["results"].push_back(result_entry(rep));
    if (!rep.passed()) out.exit_code = 1;
  }
  if (!data.is_null()) out.document["data"] = std::move(data);
  return out;
}

json blocks_json(const QuotientSetup& s) {
  json blocks = json::array();
  for (int i = 1; i <= s.r(); ++i)
    blocks.push_back({{"i", i},
                      {"C1", {s.block1(i).lo, s.block1(i).hi}},
                      {"C2", {s.block2(i).lo, s.block2(i).hi}}});
  return blocks;
}

json labelled_coordinates(const QuotientSetup& s) {
  json coords = json::array();
  for (int k = 0; k < s.coord_count(); ++k) {
    const auto label = s.coord_label(k);
    coords.push_back({label.block, label.value});
  }
  return coords;
}

}  // namespace

OutputFormat parse_format(const std::string& name) {
  if (name == "json") return OutputFormat::Json;
  if (name == "csv") return OutputFormat::Csv;
  if (name == "text") return OutputFormat::Text;
  throw InputError("unknown format '" + name + "' (json|csv|text)");
}

json RunConfig::to_json() const {
  json j = {{"r", r}, {"n", n}, {"l", l}, {"dmax", d_max}, {"samples", samples}, {"seed", seed},
            {"format", format_name(format)}};
  if (sign_fault) j["inject_sign_fault"] = {{"relation", sign_fault->relation}, {"term", sign_fault->term}};
  if (!tableau_files.empty()) j["tableaux"] = tableau_files;
  return j;
}

CommandOutput cmd_setup(const RunConfig& cfg) {
  const QuotientSetup s = validated_setup(cfg);
  json a = json::array(), c = json::array(), l = json::array();
  for (int i = 0; i <= s.r(); ++i) {
    a.push_back(s.a(i));
    c.push_back(s.c(i));
    l.push_back(s.l(i));
  }
  json factors = json::array();
  for (int i = 1; i <= s.r() - 1; ++i) factors.push_back({{"i", i}, {"dim", s.factor_dim(i)}, {"twist", s.c(i)}});
  json data = {{"a", a},
               {"c", c},
               {"l", l},
               {"blocks", blocks_json(s)},
               {"w", s.w().entries()},
               {"v", s.v().entries()},
               {"vl", s.vl().entries()},
               {"quotient", factors}};
  return assemble(cfg, {verify_setup_invariants(s)}, data);
}

CommandOutput cmd_enumerate(const RunConfig& cfg) {
  const QuotientSetup s = validated_setup(cfg);
  std::vector<Report> reports;
  json degrees = json::array();
  for (int d = 1; d <= cfg.d_max; ++d) {
    json rows = json::array();
    for (const auto& p : enumerate_pd(s, d)) {
      const Tableau t = tableau_from_lattice(p, s, d);
      rows.push_back({{"z", to_json(p, s)}, {"tableau", to_json(t)}});
    }
    Report rep = verify_bijection(s, d);
    rep.check += "_d" + std::to_string(d);
    reports.push_back(std::move(rep));
    degrees.push_back({{"d", d}, {"count", rows.size()}, {"bijection", rows}});
  }
  return assemble(cfg, reports, {{"coordinates", labelled_coordinates(s)}, {"degrees", degrees}});
}

CommandOutput cmd_verify(const RunConfig& cfg) {
  const QuotientSetup s = validated_setup(cfg);
  std::vector<Report> reports;
  reports.push_back(verify_setup_invariants(s));

  Report structure("tableau_structure");
  Report boxes("t_invariance_equivalence");
  Report bijection("bijection");
  Report split("split_z");
  for (int d = 1; d <= cfg.d_max; ++d) {
    structure.absorb(verify_tableau_structure(s, d));
    if (d <= 2) boxes.absorb(verify_t_invariance_equivalence(s, d, cfg.seed + 11 * static_cast<std::uint64_t>(d)));
    bijection.absorb(verify_bijection(s, d));
    split.absorb(verify_split_z(s, d));
  }
  reports.push_back(structure);
  reports.push_back(boxes);
  reports.push_back(bijection);
  reports.push_back(split);
  reports.push_back(verify_relation_oracle(s.r(), s.n(), cfg.samples, cfg.seed + 101, cfg.sign_fault));
  reports.push_back(verify_binomial_law(s, cfg.samples, cfg.seed + 202));
  reports.push_back(verify_straightening(s, cfg.samples, cfg.seed + 303));
  reports.push_back(verify_isomorphism(s, cfg.d_max));
  reports.push_back(verify_hilbert(s, cfg.d_max));
  return assemble(cfg, reports);
}

CommandOutput cmd_hilbert(const RunConfig& cfg) {
  const QuotientSetup s = validated_setup(cfg);
  Report rep("hilbert");
  json table = json::array();
  for (const auto& row : hilbert(s, cfg.d_max)) {
    json line = {{"d", row.d},
                 {"dimR", row.dim_r.str()},
                 {"dimA", row.dim_a.str()},
                 {"predicted", row.predicted.str()},
                 {"equal", row.equal()}};
    rep.expect(row.equal(), line);
    table.push_back(std::move(line));
  }
  return assemble(cfg, {rep}, {{"table", table}});
}

CommandOutput cmd_straighten(const RunConfig& cfg) {
  const QuotientSetup s = validated_setup(cfg);
  if (cfg.tableau_files.size() != 2) throw InputError("straighten needs exactly two tableau files");
  const Tableau g1 = read_tableau_file(cfg.tableau_files[0]);
  const Tableau g2 = read_tableau_file(cfg.tableau_files[1]);
  auto degree_of = [&](const Tableau& t, const std::string& path) {
    if (t.rows() != s.r() || t.cols() % s.n() != 0 || t.cols() == 0)
      throw InputError(path + ": expected " + std::to_string(s.r()) + " rows of nd entries for some d >= 1, got " +
                       std::to_string(t.rows()) + "x" + std::to_string(t.cols()));
    const int d = t.cols() / s.n();
    if (!is_t_invariant(t, s, d)) throw InputError(path + ": " + t.str() + " is not in ST(lambda_" + std::to_string(d) + ")");
    return d;
  };
  const int d1 = degree_of(g1, cfg.tableau_files[0]);
  const int d2 = degree_of(g2, cfg.tableau_files[1]);

  const Tableau result = straighten_invariant_product(g1, g2, s, d1, d2);
  const LatticePoint z = z_of(result, s);
  const LatticePoint z_sum = z_of(g1, s) + z_of(g2, s);

  Report member("membership");
  member.expect(is_t_invariant(result, s, d1 + d2), {{"tableau", to_json(result)}});
  Report additivity("z_additivity");
  additivity.expect(z == z_sum, {{"z", to_json(z, s)}, {"z1+z2", to_json(z_sum, s)}});

  Report oracle("oracle");
  const PlueckerPolynomial lhs = tableau_monomial(g1, s.n()) * tableau_monomial(g2, s.n());
  const PlueckerPolynomial rhs = tableau_monomial(result, s.n());
  Rng rng(cfg.seed);
  for (int k = 0; k < cfg.samples; ++k) {
    const PointMatrix x = sample_richardson_point(s, rng);
    MinorOracle m(x);
    const BigInt left = m.evaluate(lhs);
    const BigInt right = m.evaluate(rhs);
    oracle.expect(left == right, {{"matrix", to_json(x)}, {"lhs", left.str()}, {"rhs", right.str()}});
  }

  json data = {{"d1", d1},
               {"d2", d2},
               {"product", to_json(product(g1, g2))},
               {"straightened", to_json(result)},
               {"z", to_json(z, s)}};
  return assemble(cfg, {member, additivity, oracle}, data);
}

std::string render(const CommandOutput& result, const std::string& command, OutputFormat format) {
  const json& doc = result.document;
  std::ostringstream os;
  switch (format) {
    case OutputFormat::Json:
      os << doc.dump(2) << '\n';
      break;
    case OutputFormat::Csv:
      if (command == "hilbert") {
        os << "d,dimR,dimA,equal\n";
        for (const auto& row : doc.at("data").at("table"))
          os << row.at("d").get<int>() << ',' << row.at("dimR").get<std::string>() << ','
             << row.at("dimA").get<std::string>() << ',' << (row.at("equal").get<bool>() ? "true" : "false") << '\n';
      } else {
        os << "check,status,cases,failures\n";
        for (const auto& res : doc.at("results"))
          os << res.at("check").get<std::string>() << ',' << res.at("status").get<std::string>() << ','
             << res.at("detail").at("cases") << ',' << res.at("detail").at("failures") << '\n';
      }
      break;
    case OutputFormat::Text:
      os << command << ' ' << doc.at("config").dump() << '\n';
      for (const auto& res : doc.at("results")) {
        os << (res.at("status") == "pass" ? "PASS " : "FAIL ") << res.at("check").get<std::string>()
           << "  cases=" << res.at("detail").at("cases") << " failures=" << res.at("detail").at("failures") << '\n';
        if (res.at("detail").contains("counterexamples"))
          for (const auto& ce : res.at("detail").at("counterexamples")) os << "  counterexample " << ce.dump() << '\n';
      }
      if (doc.contains("data"))
        for (const auto& [key, value] : doc.at("data").items()) os << key << ": " << value.dump() << '\n';
      break;
  }
  return os.str();
}

int run_command(const std::string& command, const RunConfig& cfg, std::ostream& out, std::ostream& err) {
  CommandOutput result;
  try {
    if (command == "setup")
      result = cmd_setup(cfg);
    else if (command == "enumerate")
      result = cmd_enumerate(cfg);
    else if (command == "verify")
      result = cmd_verify(cfg);
    else if (command == "hilbert")
      result = cmd_hilbert(cfg);
    else if (command == "straighten")
      result = cmd_straighten(cfg);
    else
      throw InputError("unknown command '" + command + "'");
  } catch (const InputError& e) {
    err << "error: " << e.what() << '\n';
    return 2;
  }

  const std::string text = render(result, command, cfg.format);
  if (cfg.out.empty()) {
    out << text;
  } else {
    std::ofstream file(cfg.out);
    if (!file) {
      err << "error: cannot write '" << cfg.out << "'\n";
      return 2;
    }
    file << text;
  }
  return result.exit_code;
}

}  // namespace tquot
