#pragma once

#include <string>
#include <vector>

namespace xychain {

struct CriterionResult {
  int id = 0;
  std::string name;
  bool passed = false;
  std::string detail;   // measured values and the bound they were held to
  double seconds = 0.0;
};

struct AcceptanceOptions {
  int threads = 0;          // 0: default resolution
  unsigned rng_seed = 424242;
};

/// Runs one acceptance criterion (1..10) at its pinned tolerances.
CriterionResult run_criterion(int id, const AcceptanceOptions& options = {});

/// Runs all criteria in order.
std::vector<CriterionResult> run_acceptance(const AcceptanceOptions& options = {});

/// One "PASS|FAIL criterion-k name: detail" line.
std::string format_criterion_line(const CriterionResult& result);

}  // namespace xychain
