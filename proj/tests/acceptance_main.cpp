// Acceptance suite runner: one line per criterion, nonzero exit on any
// failure. `--criterion k` runs a single criterion (used by ctest to report
// them individually).
#include <cstdlib>
#include <cstring>
#include <iostream>

#include "xychain/acceptance.hpp"
#include "xychain/criticality.hpp"
#include "xychain/io.hpp"

int main(int argc, char** argv) {
  int only = 0;
  for (int i = 1; i < argc; ++i) {
    if (std::strcmp(argv[i], "--criterion") == 0 && i + 1 < argc) {
      only = std::atoi(argv[i + 1]);
      ++i;
    } else {
      std::cerr << "usage: xychain_acceptance [--criterion 1..10]\n";
      return 2;
    }
  }

  int failures = 0;
  if (only != 0) {
    const auto r = xychain::run_criterion(only);
    std::cout << xychain::format_criterion_line(r) << "\n";
    failures += r.passed ? 0 : 1;
  } else {
    for (const auto& r : xychain::run_acceptance()) {
      std::cout << xychain::format_criterion_line(r) << std::endl;
      failures += r.passed ? 0 : 1;
    }
    // exploratory, not gated: the proposed onset-field relation continued
    // past the distances the model was worked out for
    for (int m = 5; m <= 6; ++m) {
      xychain::ChainParams p;
      const auto onset = xychain::entangled_field(m, p);
      const double predicted = (m - 1.0) * (m - 1.0) / ((m - 1.0) * (m - 1.0) + 1.0);
      std::cout << "INFO exploratory h_c^E(m=" << m << ") = "
                << (onset ? xychain::format_number(onset->location) : "none")
                << " (relation (m-1)^2/((m-1)^2+1) predicts "
                << xychain::format_number(predicted) << ")\n";
    }
    std::cout << (failures == 0 ? "acceptance: all criteria passed"
                                : "acceptance: " + std::to_string(failures) +
                                      " criterion(s) failed")
              << std::endl;
  }
  return failures == 0 ? 0 : 1;
}
