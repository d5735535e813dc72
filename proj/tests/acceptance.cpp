#include <iostream>

#include "omeasure/selftest.hpp"

int main() {
  int failures = 0;
  for (const auto& r : omeasure::selftest::run_all()) {
    std::cout << omeasure::selftest::format(r) << std::endl;
    if (!r.passed) ++failures;
  }
  std::cout << (failures == 0 ? "all criteria passed" : std::to_string(failures) + " criteria failed") << std::endl;
  return failures == 0 ? 0 : 1;
}
