#pragma once

#include <string>
#include <vector>

/// The acceptance suite, shared by the selftest subcommand and the test
/// binary. Each criterion returns one line.
namespace covgpd::acceptance {

struct Result {
  int number = 0;
  std::string title;
  bool passed = false;
  std::string detail;  // counts on success, the first failure otherwise
  long long millis = 0;
};

inline constexpr int kCriteria = 10;

/// Runs one criterion. Exceptions are caught and reported as failures.
Result run(int number);
std::vector<Result> run_all();

/// "[PASS] AC3 fold formula: ..." without a trailing newline.
std::string format(const Result& r);

}  // namespace covgpd::acceptance
