#include "subgame/search/growth.hpp"

#include <cmath>
#include <stdexcept>

namespace subgame::search {

LineFit fit_line(std::span<const double> x, std::span<const double> y) {
  if (x.size() != y.size()) throw std::invalid_argument("x and y differ in length");
  const auto n = static_cast<double>(x.size());
  if (x.size() < 2) throw std::invalid_argument("a line fit needs at least two points");
  double mx = 0, my = 0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    mx += x[i];
    my += y[i];
  }
  mx /= n;
  my /= n;
  double sxx = 0, sxy = 0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    sxx += (x[i] - mx) * (x[i] - mx);
    sxy += (x[i] - mx) * (y[i] - my);
  }
  if (sxx == 0) throw std::invalid_argument("degenerate fit: all x values are equal");
  LineFit fit;
  fit.slope = sxy / sxx;
  fit.intercept = my - fit.slope * mx;
  for (std::size_t i = 0; i < x.size(); ++i) {
    const double r = y[i] - (fit.slope * x[i] + fit.intercept);
    fit.residuals.push_back(r);
    fit.max_abs_residual = std::max(fit.max_abs_residual, std::abs(r));
  }
  return fit;
}

GrowthFit fit_growth(std::span<const std::pair<std::int64_t, std::int64_t>> points) {
  if (points.size() < 3) throw std::invalid_argument("growth fit needs at least three points");
  std::vector<double> m, lnm, lnp;
  for (const auto& [max_s, period] : points) {
    if (max_s <= 0 || period <= 0) throw std::invalid_argument("growth fit needs positive max S and periods");
    m.push_back(static_cast<double>(max_s));
    lnm.push_back(std::log(static_cast<double>(max_s)));
    lnp.push_back(std::log(static_cast<double>(period)));
  }
  GrowthFit g;
  g.exponential = fit_line(m, lnp);
  g.alpha = g.exponential.slope / std::log(2.0);
  g.monomial = fit_line(lnm, lnp);
  g.beta = g.monomial.slope;
  return g;
}

}  // namespace subgame::search
