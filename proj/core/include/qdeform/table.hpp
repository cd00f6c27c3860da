#pragma once

#include <cstddef>
#include <iosfwd>
#include <string>
#include <vector>

#include "qdeform/qcore.hpp"

namespace qdeform {

/// %.17g rendering; parses back to the identical double.
std::string format_real(double v);

/// Uniform grid of `points` abscissas from `min` to `max` inclusive.
struct Grid {
  double min = 0.0;
  double max = 5.0;
  std::size_t points = 501;

  /// Throws std::invalid_argument for points < 2 or a non-increasing range.
  std::vector<double> values() const;
};

/// One sample of a figure curve, in raw and rescaled coordinates.
///
/// `qlog_y` is ln_q of the raw ordinate, taken from the curve's linear
/// q-log form rather than by logging `y_raw`.
struct FigureRow {
  std::string curve_id;
  double scale = 1.0;
  double x_raw = 0.0;
  double y_raw = 0.0;
  double x_rescaled = 0.0;
  double y_rescaled = 0.0;
  double qlog_y = 0.0;
};

struct FigureTable {
  EntropicIndex q{1.0};
  std::vector<FigureRow> rows;
};

inline constexpr const char* kFigureCsvHeader =
    "curve_id,scale,x_raw,y_raw,x_rescaled,y_rescaled,qlog_y";

/// Header plus one LF-terminated line per row.
void write_csv(std::ostream& out, const FigureTable& table);

}  // namespace qdeform
