// Acceptance gate: one pass/fail line per criterion, nonzero exit on failure.
#include <iostream>

#include "wavecas/acceptance.hpp"

int main() {
  const int failures = wavecas::acceptance::run(std::cout);
  return failures == 0 ? 0 : 1;
}
