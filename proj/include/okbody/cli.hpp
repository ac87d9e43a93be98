#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "okbody/lattice.hpp"

namespace okb {

enum class Command { Info, Zariski, Body, Defect, Optimize, Global, Hilbert, Ehrhart };
enum class OutputFormat { Json, Text, Csv, Svg };

struct JobSpec {
  std::string surface;
  Command command = Command::Info;
  std::optional<QVec> divisor;
  std::optional<IVec> curve;
  OutputFormat output = OutputFormat::Text;
  Int degree_bound = 6;
};

Command parse_command(const std::string& s);
OutputFormat parse_format(const std::string& s);
// comma separated entries; rational "p/q" entries allowed in divisors
QVec parse_divisor(const std::string& s);
IVec parse_curve(const std::string& s);

// exit code 0 on success, 2 on domain errors, 1 on malformed input
int run(const JobSpec& job, std::ostream& out, std::ostream& err);

struct ReproduceReport {
  bool passed = false;
  std::vector<std::string> lines;  // one PASS/FAIL line per check
};

// recomputes every published target, writes CSV/JSON/SVG artifacts to outdir
ReproduceReport reproduce_paper(const std::string& outdir);

}  // namespace okb
