#pragma once

// Partial-sum generators and the summation driver for the divergent-series
// experiment: the alternating log series sum_{k>=1} (-1)^(k+1) x^k / k is
// summed far outside its convergence radius by epsilon acceleration, with
// eps_emp = |eta_min| recorded against eps_real = |value - log(1+x)|.

#include <vector>

#include "wynnpade/epsilon.hpp"

namespace wynnpade {

enum class SeriesKind { LogOnePlusX, Geometric, Coefficients };

struct SeriesSpec {
  SeriesKind kind = SeriesKind::LogOnePlusX;
  double x = 0.0;
  std::vector<double> coefficients;  // Coefficients kind only
  int terms = 25;
};

// LogOnePlusX: S_1..S_N; Geometric: S_0..S_N of sum x^k; Coefficients: prefix
// sums of c_k x^k over the provided list.  Plain left-to-right accumulation —
// the rounding noise is part of the experiment.
std::vector<double> partial_sums(const SeriesSpec& spec);

ApproximantChoice<double> sum_series(const SeriesSpec& spec);

struct SweepRecord {
  double x = 0.0;
  double value = 0.0;
  double eps_emp = 0.0;   // NaN when no eta estimate exists
  double eps_real = 0.0;  // against the library logarithm
  int l = 0;
  int m = 0;
};

// Log-series summation over the inclusive grid x_min, x_min+step, ..., x_max.
std::vector<SweepRecord> error_sweep(double x_min, double x_max, double step, int terms);

}  // namespace wynnpade
