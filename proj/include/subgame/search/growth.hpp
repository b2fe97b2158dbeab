#pragma once

#include <cstdint>
#include <span>
#include <utility>
#include <vector>

namespace subgame::search {

struct LineFit {
  double slope = 0;
  double intercept = 0;
  std::vector<double> residuals;
  double max_abs_residual = 0;
};

/// Ordinary least squares y = slope x + intercept. Throws
/// std::invalid_argument for fewer than two points or constant x.
LineFit fit_line(std::span<const double> x, std::span<const double> y);

struct GrowthFit {
  /// ln p = alpha ln2 * max_s + c.
  double alpha = 0;
  LineFit exponential;
  /// ln p = beta ln(max_s) + c.
  double beta = 0;
  LineFit monomial;
};

/// Points are (max_s, period). Needs three points with positive values and
/// at least two distinct max_s; throws std::invalid_argument otherwise.
GrowthFit fit_growth(std::span<const std::pair<std::int64_t, std::int64_t>> points);

}  // namespace subgame::search
