#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "parker/cli.hpp"

int main(int argc, char** argv) {
  CLI::App app{"Eigenvalue field of the Parker element of a dessin d'enfant"};
  parker::DessinSource source;
  parker::Config config;
  std::string strategy = "auto", format = "text", selftest_filter;

  auto* input = app.add_option("-i,--input", source.path, "dessin file ('-' for standard input)");
  auto* inline_opt = app.add_option("--inline", source.text, "dessin text, e.g. \"n=3 a=(1 2 3) b=(1 2)\"");
  input->excludes(inline_opt);
  app.add_option("--strategy", strategy, "minimal polynomial route")->check(CLI::IsMember({"auto", "dense", "krylov"}));
  app.add_option("--format", format, "output format")->check(CLI::IsMember({"text", "machine"}));
  app.add_flag("--multiplicities", config.analysis.multiplicities, "eigenvalue multiplicities (dense scale only)");
  app.add_option("--dense-cap", config.analysis.dense_cap, "largest |G| for the dense route")->capture_default_str();
  app.add_option("--krylov-cap", config.analysis.krylov_cap, "largest |G| for the Krylov route")->capture_default_str();
  app.add_option("--group-cap", config.analysis.group_cap, "largest monodromy group enumerated")->capture_default_str();
  app.add_option("--chartab-cap", config.analysis.chartab_cap, "largest |G| for the character table")->capture_default_str();
  auto* selftest = app.add_option("--selftest", selftest_filter, "run the reference corpus, optionally filtered by name or tag")
                       ->expected(0, 1);
  selftest->excludes(input)->excludes(inline_opt);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : parker::exit_code::kInput;
  }

  config.analysis.strategy = parker::parse_strategy(strategy);
  config.format = format == "machine" ? parker::OutputFormat::Machine : parker::OutputFormat::Text;
  if (selftest->count() > 0) return parker::cmd_selftest(config, selftest_filter, std::cout, std::cerr);
  return parker::cmd_analyze(source, config, std::cout, std::cerr);
}
