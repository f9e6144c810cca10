#include <CLI11.hpp>

#include <iostream>
#include <string>

#include "ellsurf/cli.hpp"

namespace {

ellsurf::OutputFormat to_format(const std::string& s) {
  return s == "machine" ? ellsurf::OutputFormat::Machine
                        : ellsurf::OutputFormat::Human;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "Cohomologically trivial automorphisms and integral homology of "
      "properly elliptic quotient surfaces (C x E)/G"};
  app.require_subcommand(1);

  std::string format = "human";
  const auto format_check = CLI::IsMember({"human", "machine"});

  auto* analyze = app.add_subcommand(
      "analyze", "Run the full pipeline on a case file");
  std::string analyze_path;
  analyze->add_option("file", analyze_path, "case file (JSON)")->required();
  analyze->add_option("--format", format, "output format")
      ->check(format_check);

  auto* reproduce = app.add_subcommand(
      "reproduce", "Recompute a bundled table and compare every case");
  std::string table;
  reproduce->add_option("table", table, "a1 (20 cases) or a2 (11 cases)")
      ->required()
      ->check(CLI::IsMember({"a1", "a2"}));
  reproduce->add_option("--format", format, "output format")
      ->check(format_check);

  auto* simplify = app.add_subcommand(
      "simplify", "Reduce a monodromy to its tabulated normal form");
  std::string simplify_path;
  simplify->add_option("file", simplify_path, "case file (JSON)")->required();

  auto* catalog = app.add_subcommand(
      "catalog", "Print the bundled case tables without recomputation");
  int list = 0;
  catalog->add_option("--list", list, "1 or 2 (default: both)")
      ->check(CLI::IsMember({1, 2}));
  catalog->add_option("--format", format, "output format")
      ->check(format_check);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? 0 : 1;
  }

  if (analyze->parsed())
    return ellsurf::cmd_analyze(analyze_path, to_format(format), std::cout,
                                std::cerr);
  if (reproduce->parsed())
    return ellsurf::cmd_reproduce(table, to_format(format), std::cout,
                                  std::cerr);
  if (simplify->parsed())
    return ellsurf::cmd_simplify(simplify_path, std::cout, std::cerr);
  return ellsurf::cmd_catalog(list, to_format(format), std::cout, std::cerr);
}
