#pragma once

// Ordinary least squares of log10(eps_emp) on log10(eps_real) with the Pearson
// correlation coefficient — the reliability summary for the empirical error
// indicator.

#include <span>
#include <utility>

namespace wynnpade {

struct RegressionSummary {
  double slope = 0.0;
  double intercept = 0.0;
  double r = 0.0;
  int n = 0;  // usable pair count
};

// Pairs are (eps_real, eps_emp).  Pairs where either entry is non-finite or
// <= 0 are dropped.  Throws std::domain_error("degenerate sample") when fewer
// than two usable pairs remain or a variance vanishes.
RegressionSummary loglog_regression(std::span<const std::pair<double, double>> pairs);

}  // namespace wynnpade
