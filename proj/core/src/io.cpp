#include "xychain/io.hpp"

#include <cstdio>
#include <sstream>

#include "xychain/params.hpp"

namespace xychain {

std::string format_number(double v) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.12g", v);
  return buf;
}

std::string csv_header(const std::vector<std::pair<std::string, std::string>>& meta) {
  std::ostringstream out;
  out << "# xychain " << kVersion << "\n";
  for (const auto& [key, value] : meta) {
    out << "# " << key << "=" << value << "\n";
  }
  return out.str();
}

std::string sweep_csv(int m, const std::vector<SweepPoint>& points,
                      const std::vector<std::pair<std::string, std::string>>& meta) {
  std::ostringstream out;
  out << csv_header(meta);
  out << "h,T,m,C,W\n";
  for (const auto& p : points) {
    if (!p.ok) {
      out << format_number(p.h) << "," << format_number(p.T) << "," << m
          << ",error,error\n";
      continue;
    }
    out << format_number(p.h) << "," << format_number(p.T) << "," << m << ","
        << format_number(p.concurrence) << "," << format_number(p.witness) << "\n";
  }
  return out.str();
}

std::string boundary_csv(const PhaseBoundary& boundary,
                         const std::vector<std::pair<std::string, std::string>>& meta) {
  std::ostringstream out;
  out << csv_header(meta);
  out << "h,T_c,branch\n";
  for (const auto& p : boundary.points) {
    out << format_number(p.h) << "," << format_number(p.tc) << ","
        << (p.branch == PhaseBoundary::Branch::lower ? "lower" : "upper") << "\n";
  }
  return out.str();
}

std::string surface_grid(int m, const std::vector<SweepPoint>& points,
                         std::size_t t_count,
                         const std::vector<std::pair<std::string, std::string>>& meta) {
  std::ostringstream out;
  out << csv_header(meta);
  out << "# m=" << m << " columns: h T C\n";
  for (std::size_t i = 0; i < points.size(); ++i) {
    const auto& p = points[i];
    out << format_number(p.h) << " " << format_number(p.T) << " "
        << format_number(p.concurrence) << "\n";
    if (t_count != 0 && (i + 1) % t_count == 0 && i + 1 < points.size()) {
      out << "\n";  // block separator per h value
    }
  }
  return out.str();
}

}  // namespace xychain
