#include <algorithm>
#include <iostream>

#include "heatinv/verification.hpp"

int main() {
  using namespace heatinv::verify;
  const auto results = runAll(Level::Full, &std::cout);
  const auto failed = std::count_if(results.begin(), results.end(), [](const auto& r) { return !r.passed; });
  std::cout << results.size() - failed << "/" << results.size() << " criteria passed\n";
  return failed == 0 ? 0 : 1;
}
