#pragma once

#include <string>
#include <vector>

namespace tambara::check {

struct CriterionResult {
  int id = 0;
  std::string title;
  bool pass = false;
  std::string detail;
  double seconds = 0;
};

inline constexpr int kCriteria = 9;

/// Runs one acceptance criterion (1..9). Errors thrown by the library are
/// reported as failures.
CriterionResult run_criterion(int id, int threads = 1);
std::vector<CriterionResult> run_acceptance(int threads = 1);

/// "PASS [n] title: detail (t s)"
std::string format_result(const CriterionResult& r);

}  // namespace tambara::check
