#pragma once

#include <string>
#include <vector>

namespace qlift {

/// One measured quantity inside a criterion; passes when value <= limit.
struct CriterionPart {
  std::string label;
  double value = 0.0;
  double limit = 0.0;
  bool passed = false;
};

struct CriterionResult {
  int id = 0;
  std::string name;
  bool passed = false;
  /// Worst part relative to its limit.
  double measured = 0.0;
  double threshold = 0.0;
  std::string detail;
  double seconds = 0.0;
  double budget_seconds = 0.0;
  std::vector<CriterionPart> parts;
};

inline constexpr int kCriterionCount = 10;

const char* criterion_name(int id);
/// Throws InvalidArgument for ids outside 1..10.
CriterionResult run_criterion(int id, int workers = 1);
std::vector<CriterionResult> run_validation(int workers = 1);

}  // namespace qlift
