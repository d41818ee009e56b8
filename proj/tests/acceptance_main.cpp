#include <iostream>

#include "covgpd/acceptance.hpp"

int main() {
  int failed = 0;
  long long total = 0;
  for (const auto& r : covgpd::acceptance::run_all()) {
    std::cout << covgpd::acceptance::format(r) << " [" << r.millis << " ms]" << std::endl;
    failed += !r.passed;
    total += r.millis;
  }
  std::cout << (failed ? "FAILED " : "passed ") << covgpd::acceptance::kCriteria - failed << "/"
            << covgpd::acceptance::kCriteria << " in " << total << " ms" << std::endl;
  return failed ? 1 : 0;
}
