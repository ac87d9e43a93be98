#include <iostream>
#include <string>

#include "CLI11.hpp"
#include "okbody/cli.hpp"

int main(int argc, char** argv) {
  CLI::App app{"Newton-Okounkov bodies on (weak) del Pezzo surfaces"};
  app.require_subcommand(0, 1);

  std::string surface = "X5", divisor, curve, format = "text", bound = "6";
  app.add_option("--surface", surface, "surface name: X1..X8, L3, S6");
  app.add_option("--divisor", divisor, "comma separated divisor, p/q entries allowed");
  app.add_option("--curve", curve, "comma separated integral curve class");
  app.add_option("--format", format, "json, text, csv or svg");
  app.add_option("--degree-bound", bound, "Hilbert basis check degree bound");

  std::string command;
  for (const char* name : {"info", "zariski", "body", "defect", "optimize", "global",
                           "global-body", "hilbert", "ehrhart"})
    app.add_subcommand(name)->fallthrough()->callback([&command, name] { command = name; });

  std::string outdir;
  auto* rp = app.add_subcommand("reproduce", "recompute the published tables and figures");
  rp->add_option("--out", outdir, "artifact directory")->required();

  CLI11_PARSE(app, argc, argv);

  try {
    if (rp->parsed()) {
      okb::ReproduceReport report = okb::reproduce_paper(outdir);
      for (const auto& line : report.lines) std::cout << line << "\n";
      return report.passed ? 0 : 2;
    }
    if (command.empty()) {
      std::cerr << "error: no command given\n";
      return 1;
    }
    okb::JobSpec job;
    job.surface = surface;
    job.command = okb::parse_command(command);
    job.output = okb::parse_format(format);
    job.degree_bound = okb::Int(bound);
    if (!divisor.empty()) job.divisor = okb::parse_divisor(divisor);
    if (!curve.empty()) job.curve = okb::parse_curve(curve);
    return okb::run(job, std::cout, std::cerr);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
}
