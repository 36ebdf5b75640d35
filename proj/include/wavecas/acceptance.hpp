#pragma once

#include <functional>
#include <iosfwd>
#include <string>
#include <vector>

namespace wavecas::acceptance {

struct CriterionResult {
  bool passed = false;
  std::string expected;
  std::string observed;
  std::string tolerance;
};

struct Criterion {
  std::string name;
  std::string description;
  std::function<CriterionResult()> run;
};

/// The full verification catalogue, in report order.
const std::vector<Criterion>& criteria();

/// Runs every criterion whose name is in `only` (all when empty), printing
/// one pass/fail line each.  Returns the number of failures.
int run(std::ostream& out, const std::vector<std::string>& only = {});

/// Prints the criterion names without running anything.
void list(std::ostream& out);

}  // namespace wavecas::acceptance
