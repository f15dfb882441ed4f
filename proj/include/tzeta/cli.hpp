#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace tzeta {

/// Runs the command line (without the program name). Exit codes: 0 ok,
/// 1 check failure, 2 usage, 3 validation, 4 desk-scale guard.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

/// One result line for the `check` subcommand.
struct CheckResult {
  std::string name;
  bool ok = false;
  std::string detail;
};

/// Built-in corpus suites: oracle equivalence, limit identity, rationality
/// shape, anchors, quotient relation and presentation round trips.
std::vector<CheckResult> run_self_checks();

}  // namespace tzeta
