#include "wynnpade/stats.hpp"

#include <cmath>
#include <stdexcept>
#include <vector>

namespace wynnpade {

RegressionSummary loglog_regression(std::span<const std::pair<double, double>> pairs) {
  std::vector<double> xs, ys;  // x = log10 eps_real, y = log10 eps_emp
  xs.reserve(pairs.size());
  ys.reserve(pairs.size());
  for (const auto& [real, emp] : pairs) {
    if (!(real > 0.0) || !(emp > 0.0) || !std::isfinite(real) || !std::isfinite(emp)) continue;
    xs.push_back(std::log10(real));
    ys.push_back(std::log10(emp));
  }
  const int n = static_cast<int>(xs.size());
  if (n < 2) throw std::domain_error("degenerate sample");

  double mx = 0.0, my = 0.0;
  for (int i = 0; i < n; ++i) {
    mx += xs[static_cast<std::size_t>(i)];
    my += ys[static_cast<std::size_t>(i)];
  }
  mx /= n;
  my /= n;
  double sxx = 0.0, syy = 0.0, sxy = 0.0;
  for (int i = 0; i < n; ++i) {
    const double dx = xs[static_cast<std::size_t>(i)] - mx;
    const double dy = ys[static_cast<std::size_t>(i)] - my;
    sxx += dx * dx;
    syy += dy * dy;
    sxy += dx * dy;
  }
  if (sxx == 0.0 || syy == 0.0) throw std::domain_error("degenerate sample");

  RegressionSummary out;
  out.slope = sxy / sxx;
  out.intercept = my - out.slope * mx;
  out.r = sxy / std::sqrt(sxx * syy);
  out.n = n;
  return out;
}

}  // namespace wynnpade
