#pragma once

// Predictor-based stepper for dy/dx = F(x, y): the N-point Pade extrapolator
// with K=1 Hermite data (values + derivatives of the last <= W trace points)
// predicts y at x_last + h; the derivative is then refreshed via F at the new
// point and the window slides.
//
// The stepper is a pure predictor by design — there is no corrector stage and
// no step-size control beyond a single retry with a truncated window when the
// eta estimate exceeds eta_tol.  See README for the practical consequences on
// long integrations.

#include <functional>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace wynnpade {

struct OdeProblem {
  std::function<double(double, double)> rhs;
  double x0 = 0.0;
  double y0 = 0.0;
  double x_end = 1.0;
  double h = 0.01;       // > 0
  int window = 6;        // W >= 2
  double eta_tol = 1e-6;
};

struct OdePoint {
  double x = 0.0;
  double y = 0.0;
  double dy = 0.0;  // F(x, y)
  std::optional<double> eta_used{};
  std::optional<std::pair<int, int>> accepted_order{};
  bool eta_flagged = false;  // eta_used exceeded eta_tol even after the retry
};

using OdeTrace = std::vector<OdePoint>;

// Thrown when the state goes non-finite; carries the last good trace.
class OdeDivergenceError : public std::runtime_error {
 public:
  OdeDivergenceError(const std::string& what, OdeTrace partial_trace)
      : std::runtime_error(what), partial(std::move(partial_trace)) {}
  OdeTrace partial;
};

// One classical fourth-order (RK4) step.
double rk4_step(const std::function<double(double, double)>& f, double x, double y, double h);

// Seeds the first min(W, 4) points with RK4 at step h (fewer if x_end is
// closer than that), each annotated with y' = F(x, y).
OdeTrace bootstrap(const OdeProblem& problem);

// Predict at x_last + h, refresh the derivative, append.  On |eta_min| >
// eta_tol the step is retried once with the window truncated to the nearest
// max(2, W/2) points; the attempt with the smaller |eta| is appended and
// flagged if still above tolerance.
OdeTrace step(OdeTrace trace, const OdeProblem& problem);

// bootstrap + repeated step; the final step is shortened to land on x_end.
OdeTrace solve(const OdeProblem& problem);

}  // namespace wynnpade
