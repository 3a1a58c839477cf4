#include "wynnpade/series.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>

namespace wynnpade {

std::vector<double> partial_sums(const SeriesSpec& spec) {
  if (!std::isfinite(spec.x)) throw std::invalid_argument("non-finite series argument");
  std::vector<double> sums;
  switch (spec.kind) {
    case SeriesKind::LogOnePlusX: {
      if (spec.terms < 1) throw std::invalid_argument("terms must be >= 1");
      sums.reserve(static_cast<std::size_t>(spec.terms));
      double acc = 0.0;
      double power = 1.0;
      for (int k = 1; k <= spec.terms; ++k) {
        power *= spec.x;
        acc += (k % 2 == 1 ? power : -power) / k;
        sums.push_back(acc);
      }
      break;
    }
    case SeriesKind::Geometric: {
      if (spec.terms < 1) throw std::invalid_argument("terms must be >= 1");
      sums.reserve(static_cast<std::size_t>(spec.terms) + 1);
      double acc = 0.0;
      double power = 1.0;
      for (int k = 0; k <= spec.terms; ++k) {
        acc += power;
        sums.push_back(acc);
        power *= spec.x;
      }
      break;
    }
    case SeriesKind::Coefficients: {
      if (spec.coefficients.empty()) {
        throw std::invalid_argument("Coefficients kind requires a coefficient list");
      }
      sums.reserve(spec.coefficients.size());
      double acc = 0.0;
      double power = 1.0;
      for (double c : spec.coefficients) {
        acc += c * power;
        sums.push_back(acc);
        power *= spec.x;
      }
      break;
    }
  }
  return sums;
}

ApproximantChoice<double> sum_series(const SeriesSpec& spec) {
  return accelerate(partial_sums(spec));
}

std::vector<SweepRecord> error_sweep(double x_min, double x_max, double step, int terms) {
  if (!(x_min <= x_max)) throw std::invalid_argument("sweep bounds out of order");
  if (!(step > 0.0)) throw std::invalid_argument("sweep step must be positive");
  std::vector<SweepRecord> out;
  const double nan = std::numeric_limits<double>::quiet_NaN();
  for (int i = 0;; ++i) {
    const double x = x_min + i * step;
    if (x > x_max + 0.5 * step) break;
    SeriesSpec spec{SeriesKind::LogOnePlusX, x, {}, terms};
    const ApproximantChoice<double> r = sum_series(spec);
    out.push_back(SweepRecord{x, r.value, r.eta_min ? *r.eta_min : nan,
                              std::abs(r.value - std::log1p(x)), r.l, r.m});
    if (x >= x_max) break;
  }
  return out;
}

}  // namespace wynnpade
