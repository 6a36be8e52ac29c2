// One line per criterion; exit status 1 when any criterion fails.

#include "cli/acceptance.hpp"

#include <CLI11.hpp>

#include <iostream>

int main(int argc, char** argv) {
  CLI::App app{"acceptance criteria"};
  std::vector<int> ids;
  std::string level = "full";
  nsz::cli::AcceptanceOptions opts;
  int budget = 600;
  bool verbose = false;
  app.add_option("--criterion", ids, "Criteria to run (default: all)");
  app.add_option("--level", level)->check(CLI::IsMember({"quick", "full"}));
  app.add_option("--seed", opts.seed);
  app.add_option("--budget", budget, "Seconds per check");
  app.add_flag("--verbose", verbose, "Print every check");
  CLI11_PARSE(app, argc, argv);
  opts.level = nsz::cli::parse_level(level);
  opts.budget = std::chrono::seconds(budget);
  if (ids.empty()) ids = nsz::cli::criterion_ids();

  bool ok = true;
  for (int id : ids) {
    auto report = nsz::cli::run_criterion(id, opts);
    std::cout << report.summary_line() << std::endl;
    for (const auto& c : report.checks) {
      if (verbose || c.status == "fail") std::cout << "    [" << c.status << "] " << c.label << ": " << c.detail << "\n";
    }
    ok = ok && report.passed();
  }
  return ok ? 0 : 1;
}
