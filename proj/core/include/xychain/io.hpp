#pragma once

#include <string>
#include <vector>

#include "xychain/criticality.hpp"

namespace xychain {

/// Locale-independent %.12g formatting: 12 significant digits, below every
/// tolerance in the suite and above double rounding noise. All CSV output
/// goes through this, which keeps files byte-stable across runs.
std::string format_number(double v);

/// "# xychain <version>" plus one "# key=value" line per entry.
std::string csv_header(const std::vector<std::pair<std::string, std::string>>& meta);

std::string sweep_csv(int m, const std::vector<SweepPoint>& points,
                      const std::vector<std::pair<std::string, std::string>>& meta);

std::string boundary_csv(const PhaseBoundary& boundary,
                         const std::vector<std::pair<std::string, std::string>>& meta);

/// gnuplot splot layout: h,T,C rows with a blank line between h blocks.
std::string surface_grid(int m, const std::vector<SweepPoint>& points,
                         std::size_t t_count,
                         const std::vector<std::pair<std::string, std::string>>& meta);

}  // namespace xychain
