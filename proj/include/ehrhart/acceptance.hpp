#pragma once

// End-to-end acceptance checks, shared by the acceptance test binary and the
// `selftest` subcommand.

#include <ostream>
#include <string>
#include <vector>

namespace ehrhart::acceptance {

struct CriterionResult {
  int id = 0;
  std::string title;
  bool passed = false;
  std::string detail;
  double seconds = 0.0;
};

/// Runs every criterion in order. When `out` is given, one PASS/FAIL line is
/// printed per criterion as soon as it finishes.
std::vector<CriterionResult> run_all(std::ostream* out = nullptr);

std::string format_line(const CriterionResult& r);

}  // namespace ehrhart::acceptance
