#include "wynnpade/ode.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "wynnpade/npade.hpp"

namespace wynnpade {

namespace {

void validate(const OdeProblem& p) {
  if (!p.rhs) throw std::invalid_argument("missing right-hand side");
  if (!(p.x_end > p.x0)) throw std::invalid_argument("x_end must exceed x0");
  if (!(p.h > 0.0)) throw std::invalid_argument("step must be positive");
  if (p.window < 2) throw std::invalid_argument("window must be >= 2");
  if (!std::isfinite(p.x0) || !std::isfinite(p.y0) || !std::isfinite(p.x_end) ||
      !std::isfinite(p.h) || !std::isfinite(p.eta_tol)) {
    throw std::invalid_argument("non-finite problem parameter");
  }
}

// Predictor over the last `window` trace points (K=1 Hermite data).
RationalEvaluation predict(const OdeTrace& trace, int window, double x_new) {
  const int count = std::min<int>(window, static_cast<int>(trace.size()));
  std::vector<Node> nodes;
  nodes.reserve(static_cast<std::size_t>(count));
  for (int i = static_cast<int>(trace.size()) - count; i < static_cast<int>(trace.size()); ++i) {
    const OdePoint& p = trace[static_cast<std::size_t>(i)];
    nodes.push_back(Node{p.x, p.y, {p.dy}});
  }
  try {
    return evaluate(make_node_set(std::move(nodes), 1), x_new);
  } catch (const std::invalid_argument&) {
    // The trace itself is finite, so a rejection here means the interpolation
    // arithmetic overflowed on an extreme-magnitude window.  Report it as a
    // non-finite prediction so the caller classifies it as divergence.
    RationalEvaluation r;
    r.x = x_new;
    r.value = std::numeric_limits<double>::quiet_NaN();
    r.used_nodes = count;
    return r;
  }
}

// One predictor step to an explicit target abscissa.
void step_to(OdeTrace& trace, const OdeProblem& problem, double x_new) {
  RationalEvaluation r = predict(trace, problem.window, x_new);
  bool flagged = false;
  if (r.eta_min && *r.eta_min > problem.eta_tol) {
    const int truncated = std::max(2, problem.window / 2);
    if (truncated < r.used_nodes) {
      // A retry only wins if it carries an estimate that is actually smaller;
      // an absent estimate is not evidence of a better prediction.
      RationalEvaluation retry = predict(trace, truncated, x_new);
      if (retry.eta_min && *retry.eta_min < *r.eta_min) r = retry;
    }
    flagged = !r.eta_min || *r.eta_min > problem.eta_tol;
  }

  if (!std::isfinite(r.value)) {
    throw OdeDivergenceError("non-finite prediction at x = " + std::to_string(x_new), trace);
  }
  const double dy = problem.rhs(x_new, r.value);
  if (!std::isfinite(dy)) {
    throw OdeDivergenceError("non-finite derivative at x = " + std::to_string(x_new), trace);
  }
  trace.push_back(OdePoint{x_new, r.value, dy, r.eta_min,
                           std::make_pair(r.l, r.m), flagged});
}

}  // namespace

double rk4_step(const std::function<double(double, double)>& f, double x, double y, double h) {
  const double k1 = f(x, y);
  const double k2 = f(x + 0.5 * h, y + 0.5 * h * k1);
  const double k3 = f(x + 0.5 * h, y + 0.5 * h * k2);
  const double k4 = f(x + h, y + h * k3);
  return y + h / 6.0 * (k1 + 2.0 * k2 + 2.0 * k3 + k4);
}

OdeTrace bootstrap(const OdeProblem& problem) {
  validate(problem);
  OdeTrace trace;
  const double dy0 = problem.rhs(problem.x0, problem.y0);
  if (!std::isfinite(dy0)) {
    throw OdeDivergenceError("non-finite derivative at x0", trace);
  }
  trace.push_back(OdePoint{problem.x0, problem.y0, dy0, std::nullopt, std::nullopt, false});

  const int seeds = std::min(problem.window, 4);
  const double tiny = 1e-9 * problem.h;
  while (static_cast<int>(trace.size()) < seeds) {
    const OdePoint& last = trace.back();
    const double x_next = last.x + problem.h;
    if (x_next > problem.x_end + tiny) break;
    const double y_next = rk4_step(problem.rhs, last.x, last.y, problem.h);
    if (!std::isfinite(y_next)) {
      throw OdeDivergenceError("non-finite state during bootstrap", trace);
    }
    const double dy_next = problem.rhs(x_next, y_next);
    if (!std::isfinite(dy_next)) {
      throw OdeDivergenceError("non-finite derivative during bootstrap", trace);
    }
    trace.push_back(OdePoint{x_next, y_next, dy_next, std::nullopt, std::nullopt, false});
  }
  return trace;
}

OdeTrace step(OdeTrace trace, const OdeProblem& problem) {
  validate(problem);
  if (trace.size() < 2) throw std::invalid_argument("step requires a trace of >= 2 points");
  step_to(trace, problem, trace.back().x + problem.h);
  return trace;
}

OdeTrace solve(const OdeProblem& problem) {
  OdeTrace trace = bootstrap(problem);
  const double tiny = 1e-9 * problem.h;
  while (trace.back().x < problem.x_end - tiny) {
    double x_next = trace.back().x + problem.h;
    if (x_next > problem.x_end - tiny) x_next = problem.x_end;  // shortened final step
    step_to(trace, problem, x_next);
  }
  return trace;
}

}  // namespace wynnpade
