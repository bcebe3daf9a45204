#include "tquot/cli.hpp"
#include "tquot/error.hpp"
#include "tquot/io.hpp"

#include <CLI11.hpp>

#include <iostream>

int main(int argc, char** argv) {
  CLI::App app{"Torus quotients of Richardson varieties in G(r,n)"};
  app.require_subcommand(1);

  tquot::RunConfig cfg;
  std::string l_text;
  std::string format = "json";
  std::string fault_text;

  auto add_common = [&](CLI::App* sub) {
    sub->add_option("--r", cfg.r, "rank r")->required();
    sub->add_option("--n", cfg.n, "ambient dimension n")->required();
    sub->add_option("--l", l_text, "l_1,...,l_{r-1} (comma-separated)");
    sub->add_option("--dmax", cfg.d_max, "largest degree")->capture_default_str();
    sub->add_option("--samples", cfg.samples, "oracle matrices per check")->capture_default_str();
    sub->add_option("--seed", cfg.seed, "generator seed")->capture_default_str();
    sub->add_option("--format", format, "json|csv|text")->capture_default_str();
    sub->add_option("--out", cfg.out, "output path (default stdout)");
  };

  for (const char* name : {"setup", "enumerate", "hilbert"}) add_common(app.add_subcommand(name));
  CLI::App* verify = app.add_subcommand("verify");
  add_common(verify);
  verify->add_option("--inject-sign-fault", fault_text,
                     "RELATION[,TERM]: flip one shuffle-term sign in the relation oracle sweep");
  CLI::App* straighten = app.add_subcommand("straighten");
  add_common(straighten);
  straighten->add_option("tableaux", cfg.tableau_files, "two tableau files")->required()->expected(2);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    cfg.l = tquot::parse_int_list(l_text);
    cfg.format = tquot::parse_format(format);
    if (!fault_text.empty()) {
      const auto parts = tquot::parse_int_list(fault_text);
      if (parts.empty() || parts.size() > 2 || parts[0] < 0 || (parts.size() == 2 && parts[1] < 0))
        throw tquot::InputError("--inject-sign-fault expects RELATION[,TERM] with nonnegative entries");
      cfg.sign_fault = tquot::SignFault{static_cast<std::size_t>(parts[0]),
                                        parts.size() == 2 ? static_cast<std::size_t>(parts[1]) : 1};
    }
  } catch (const tquot::InputError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  }

  const std::string command = app.get_subcommands().front()->get_name();
  return tquot::run_command(command, cfg, std::cout, std::cerr);
}
