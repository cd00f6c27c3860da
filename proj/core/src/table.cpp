#include "qdeform/table.hpp"

#include <cmath>
#include <cstdio>
#include <ostream>
#include <stdexcept>

namespace qdeform {

std::string format_real(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

std::vector<double> Grid::values() const {
  if (points < 2) throw std::invalid_argument("grid needs at least two points");
  if (!(max > min) || !std::isfinite(min) || !std::isfinite(max)) {
    throw std::invalid_argument("grid range must be finite and increasing");
  }
  std::vector<double> xs(points);
  const double step = (max - min) / static_cast<double>(points - 1);
  for (std::size_t i = 0; i < points; ++i) {
    xs[i] = min + step * static_cast<double>(i);
  }
  xs.back() = max;
  return xs;
}

void write_csv(std::ostream& out, const FigureTable& table) {
  out << kFigureCsvHeader << '\n';
  for (const auto& r : table.rows) {
    out << r.curve_id << ',' << format_real(r.scale) << ',' << format_real(r.x_raw) << ','
        << format_real(r.y_raw) << ',' << format_real(r.x_rescaled) << ','
        << format_real(r.y_rescaled) << ',' << format_real(r.qlog_y) << '\n';
  }
}

}  // namespace qdeform
