#pragma once

// N-point Pade evaluation: Aitken interpolant sequence + epsilon acceleration
// + minimal-|eta| selection, returning the value together with the empirical
// error estimate eps_emp = |eta_min|.

#include <optional>
#include <span>
#include <vector>

#include "wynnpade/aitken.hpp"

namespace wynnpade {

struct RationalEvaluation {
  double x = 0.0;
  double value = 0.0;
  std::optional<double> eta_min{};  // eps_emp; empty when no eta exists
  int l = 0;
  int m = 0;
  int used_nodes = 0;
  bool converged_exactly = false;
};

// Proximity order -> Taylor shift (if K > 0) -> Aitken sweep -> acceleration.
// A query exactly on a node abscissa bypasses the pipeline and returns y_i
// with (l,m) = (0,0) and no eta estimate.
RationalEvaluation evaluate(const NodeSet& nodes, double x);

// Elementwise evaluate, order preserved.
std::vector<RationalEvaluation> evaluate_sweep(const NodeSet& nodes,
                                               std::span<const double> queries);

}  // namespace wynnpade
