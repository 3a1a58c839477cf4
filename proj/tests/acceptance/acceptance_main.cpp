// Acceptance gate: end-to-end checks of the library's headline claims, one
// PASS/FAIL line per check with the measured numbers.  The process exit
// code is the number of failed checks, so the harness stays honest: a
// check that cannot be met fails visibly rather than being skipped.

#include <algorithm>
#include <cfenv>
#include <cmath>
#include <cstdio>
#include <limits>
#include <numbers>
#include <random>
#include <string>
#include <vector>

#include "wynnpade/aitken.hpp"
#include "wynnpade/epsilon.hpp"
#include "wynnpade/npade.hpp"
#include "wynnpade/ode.hpp"
#include "wynnpade/series.hpp"
#include "wynnpade/stats.hpp"

using namespace wynnpade;

namespace {

int failures = 0;

void report(int id, bool pass, const std::string& detail) {
  std::printf("A%-2d %s  %s\n", id, pass ? "PASS" : "FAIL", detail.c_str());
  if (!pass) ++failures;
}

std::string num(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.3g", v);
  return buf;
}

double median(std::vector<double> v) {
  std::sort(v.begin(), v.end());
  const std::size_t n = v.size();
  return n % 2 ? v[n / 2] : 0.5 * (v[n / 2 - 1] + v[n / 2]);
}

std::vector<double> midpoint_grid(double lo, double hi, int n) {
  std::vector<double> qs;
  qs.reserve(static_cast<std::size_t>(n));
  for (int j = 1; j <= n; ++j) qs.push_back(lo + (j - 0.5) * (hi - lo) / n);
  return qs;
}

// --------------------------------------------------------------------------

// Row m=1 equals the classical three-term transform; on a geometric sequence
// it must produce the limit essentially exactly.
void check_1() {
  const auto geo = partial_sums({SeriesKind::Geometric, 0.5, {}, 5});  // 6 terms
  const auto table = build_table(geo);
  double worst = 0.0;
  for (int l = 1; l <= table.n() - 1; ++l) {
    const auto& cell = table.at(l, 1);
    if (cell.status != CellStatus::Valid && cell.status != CellStatus::Converged) {
      report(1, false, "row-1 exactness: cell (" + std::to_string(l) + ",1) unusable");
      return;
    }
    worst = std::max(worst, std::abs(cell.value - 2.0) / 2.0);
  }
  const auto exp_table = build_table({1.0, 2.0, 2.5});
  const double exp_err = std::abs(exp_table.at(1, 1).value - 3.0) / 3.0;
  worst = std::max(worst, exp_err);
  report(1, worst <= 1e-12,
         "row-1 exactness on geometric/exp heads: worst rel err " + num(worst) +
             " (tol 1e-12)");
}

// Every well-conditioned interior cell must satisfy the five-point identity
// 1/(S-C) + 1/(N-C) = 1/(E-C) + 1/(W-C) to relative 1e-8.  "Well-conditioned"
// means no difference is lost to rounding (|d| > 1e10*eps*|C|) and the
// right-hand side is not itself a catastrophic cancellation
// (sum |1/d| <= 10*|rhs|); the kept-cell floor keeps the check non-vacuous.
void check_2() {
  std::mt19937 rng(12345);
  std::uniform_real_distribution<double> uni(-1.0, 1.0);
  std::uniform_real_distribution<double> ratio(-0.8, 0.8);
  std::uniform_real_distribution<double> amp(0.5, 1.5);

  double worst = 0.0;
  long kept = 0, total = 0;
  for (int trial = 0; trial < 200; ++trial) {
    const int len = 8 + static_cast<int>(rng() % 8);  // 8..15
    std::vector<double> seq(static_cast<std::size_t>(len));
    if (trial % 2 == 0) {
      for (double& s : seq) s = uni(rng);
    } else {
      const double lim = uni(rng), q = ratio(rng), a = amp(rng);
      double p = 1.0;
      for (double& s : seq) {
        s = lim + a * p;
        p *= q;
      }
    }
    const auto table = build_table(seq);
    for (int m = 1; m <= table.max_row(); ++m) {
      for (int l = m + 1; l <= table.n() - m - 1; ++l) {
        if (!table.exists(l, m + 1)) continue;
        const auto& C = table.at(l, m);
        const auto& E = table.at(l + 1, m);
        const auto& W = table.at(l - 1, m);
        const auto& N = table.at(l, m - 1);
        const auto& S = table.at(l, m + 1);
        if (C.status != CellStatus::Valid || E.status != CellStatus::Valid ||
            W.status != CellStatus::Valid || N.status != CellStatus::Valid ||
            S.status != CellStatus::Valid) {
          continue;
        }
        ++total;
        const double d[4] = {S.value - C.value, N.value - C.value, E.value - C.value,
                             W.value - C.value};
        const double floor = 1e10 * std::numeric_limits<double>::epsilon() * std::abs(C.value);
        bool ok = true;
        for (double di : d) ok = ok && std::abs(di) > floor;
        if (!ok) continue;
        const double lhs = 1.0 / d[0] + 1.0 / d[1];
        const double rhs = 1.0 / d[2] + 1.0 / d[3];
        if (rhs == 0.0) continue;
        const double mass =
            std::abs(1.0 / d[0]) + std::abs(1.0 / d[1]) + std::abs(1.0 / d[2]) +
            std::abs(1.0 / d[3]);
        if (mass > 10.0 * std::abs(rhs)) continue;
        ++kept;
        worst = std::max(worst, std::abs(lhs - rhs) / std::abs(rhs));
      }
    }
  }
  const bool pass = worst <= 1e-8 && kept >= 1000;
  report(2, pass,
         "five-point identity residual: worst rel " + num(worst) + " over " +
             std::to_string(kept) + "/" + std::to_string(total) +
             " well-conditioned cells (tol 1e-8, floor 1000 cells)");
}

// Divergent-series summation accuracy at fixed arguments.
void check_3() {
  double worst_far = 0.0;
  for (double x : {2.0, 5.0, 10.0}) {
    const auto r = sum_series({SeriesKind::LogOnePlusX, x, {}, 25});
    worst_far = std::max(worst_far, std::abs(r.value - std::log1p(x)));
  }
  const auto r1 = sum_series({SeriesKind::LogOnePlusX, 1.0, {}, 25});
  const double err1 = std::abs(r1.value - std::log1p(1.0));
  const bool pass = worst_far <= 1e-3 && err1 <= 1e-9;
  report(3, pass,
         "log-series summation, N=25: worst err " + num(worst_far) +
             " on x in {2,5,10} (tol 1e-3); err " + num(err1) + " at x=1 (tol 1e-9)");
}

// The empirical indicator must track the real error across the sweep.
void check_4() {
  const auto recs = error_sweep(1.0, 20.0, 0.1, 25);
  std::vector<std::pair<double, double>> pairs;
  for (const auto& rec : recs) pairs.emplace_back(rec.eps_real, rec.eps_emp);
  const RegressionSummary s = loglog_regression(pairs);
  report(4, s.r >= 0.9,
         "log-series sweep [1,20]: indicator correlation r = " + num(s.r) +
             " over n = " + std::to_string(s.n) + " (need >= 0.9)");
}

// Sine extrapolation quality over the first arch plus the two-arch regression.
void check_5() {
  std::vector<Node> nodes;
  for (int i = 0; i < 21; ++i) {
    const double x = -std::numbers::pi + i * std::numbers::pi / 20.0;
    nodes.push_back(Node{x, std::sin(x), {}});
  }
  const NodeSet ns = make_node_set(nodes, 0);

  std::vector<double> err1;
  for (const auto& r : evaluate_sweep(ns, midpoint_grid(0.0, std::numbers::pi, 2000))) {
    err1.push_back(std::abs(r.value - std::sin(r.x)));
  }
  const double worst = *std::max_element(err1.begin(), err1.end());
  const double med = median(err1);

  std::vector<std::pair<double, double>> pairs;
  for (const auto& r :
       evaluate_sweep(ns, midpoint_grid(0.0, 2.0 * std::numbers::pi, 4000))) {
    if (r.eta_min) pairs.emplace_back(std::abs(r.value - std::sin(r.x)), *r.eta_min);
  }
  const RegressionSummary s = loglog_regression(pairs);

  const bool pass =
      worst <= 1e-2 && med <= 1e-4 && s.slope >= 0.8 && s.slope <= 1.2 && s.r >= 0.9;
  report(5, pass,
         "sine extrapolation: first-arch max " + num(worst) + " (tol 1e-2), median " +
             num(med) + " (tol 1e-4); two-arch regression slope " + num(s.slope) +
             " (need [0.8,1.2]), r " + num(s.r) + " (need >= 0.9)");
}

// Exact recovery of rational functions through the full pipeline.
void check_6() {
  // Part 1: 1/(1+x) from four integer nodes at off-node queries.
  std::vector<Node> rec_nodes;
  for (int i = 0; i < 4; ++i) rec_nodes.push_back(Node{double(i), 1.0 / (1.0 + i), {}});
  const NodeSet rns = make_node_set(rec_nodes, 0);
  double worst_rec = 0.0;
  for (double q : {0.5, 1.5, 2.5, 4.0, 9.0}) {
    worst_rec = std::max(worst_rec, std::abs(evaluate(rns, q).value - 1.0 / (1.0 + q)));
  }

  // Part 2: random degree-(p,q) rationals, p,q <= 3, sampled at nine nodes,
  // denominator roots kept far from the node hull [0,8].
  std::mt19937 rng(777);
  std::uniform_real_distribution<double> coef(-2.0, 2.0);
  std::uniform_real_distribution<double> root_mag(10.5, 25.0);
  std::uniform_real_distribution<double> uq(0.25, 7.75);
  double worst_rand = 0.0;
  for (int inst = 0; inst < 100; ++inst) {
    const int p = static_cast<int>(rng() % 4), q = static_cast<int>(rng() % 4);
    std::vector<double> numer(static_cast<std::size_t>(p) + 1);
    for (double& c : numer) c = coef(rng);
    if (std::abs(numer[0]) < 0.1) numer[0] = 1.0;  // keep f away from zero overall
    std::vector<double> roots(static_cast<std::size_t>(q));
    for (double& r : roots) r = (rng() % 2 ? 1.0 : -1.0) * root_mag(rng);

    const auto f = [&](double x) {
      double nv = 0.0, xp = 1.0;
      for (double c : numer) {
        nv += c * xp;
        xp *= x;
      }
      double dv = 1.0;
      for (double r : roots) dv *= (x - r);
      return nv / dv;
    };

    std::vector<Node> nodes;
    for (int i = 0; i < 9; ++i) nodes.push_back(Node{double(i), f(double(i)), {}});
    const NodeSet ns = make_node_set(nodes, 0);

    double query = uq(rng), fq = f(query);
    int guard = 0;
    while (std::abs(fq) < 1e-3 && ++guard < 50) {  // keep the relative test meaningful
      query = uq(rng);
      fq = f(query);
    }
    const double rel = std::abs(evaluate(ns, query).value - fq) / std::abs(fq);
    worst_rand = std::max(worst_rand, rel);
  }

  const bool pass = worst_rec <= 1e-10 && worst_rand <= 1e-8;
  report(6, pass,
         "rational recovery: 1/(1+x) worst abs err " + num(worst_rec) +
             " (tol 1e-10); random rationals worst rel err " + num(worst_rand) +
             " over 100 (tol 1e-8)");
  if (!pass) {
    std::printf("      note: the acceleration stage works on the interpolant value "
                "sequence alone, with no abscissa weighting, so it does not "
                "reconstruct the underlying rational exactly; accuracy decays with "
                "extrapolation distance (see README, Limitations)\n");
  }
}

// Hermite contact: K=1 data must pin values and slopes at the nodes.
void check_7() {
  std::vector<Node> nodes;
  for (int i = 0; i < 8; ++i) {
    const double x = 0.3 + 0.1 * i;
    nodes.push_back(Node{x, std::sin(x), {std::cos(x)}});
  }
  const NodeSet ns = make_node_set(nodes, 1);
  double worst_val = 0.0, worst_slope = 0.0;
  for (const Node& n : ns.nodes) {
    worst_val = std::max(worst_val, std::abs(evaluate(ns, n.x).value - n.y));
    const double d = 1e-6;
    const double fd =
        (evaluate(ns, n.x + d).value - evaluate(ns, n.x - d).value) / (2.0 * d);
    worst_slope = std::max(worst_slope, std::abs(fd - n.derivs[0]) / std::abs(n.derivs[0]));
  }
  const bool pass = worst_val <= 1e-10 && worst_slope <= 1e-4;
  report(7, pass,
         "Hermite contact on K=1 sine data: worst nodal value err " + num(worst_val) +
             " (tol 1e-10), worst finite-difference slope rel err " + num(worst_slope) +
             " (tol 1e-4)");
}

// Predictor ODE accuracy on closed-form problems.
void check_8() {
  const auto run_identity = [](double h) {
    OdeProblem p;
    p.rhs = [](double, double y) { return y; };
    p.y0 = 1.0;
    p.h = h;
    p.window = 6;
    double terminal = std::numeric_limits<double>::infinity();
    try {
      const OdeTrace t = solve(p);
      terminal = std::abs(t.back().y - std::exp(1.0));
    } catch (const OdeDivergenceError&) {
      // divergence counts as an unbounded terminal error
    }
    return terminal;
  };
  const double err_001 = run_identity(0.01);
  const double err_002 = run_identity(0.02);
  const double ratio = err_002 / err_001;

  OdeProblem pc;
  pc.rhs = [](double x, double) { return std::cos(x); };
  pc.y0 = 0.0;
  pc.h = 0.01;
  double err_cos = std::numeric_limits<double>::infinity();
  try {
    const OdeTrace t = solve(pc);
    err_cos = std::abs(t.back().y - std::sin(1.0));
  } catch (const OdeDivergenceError&) {
  }

  const bool pass = err_001 <= 1e-5 && ratio >= 4.0 && err_cos <= 1e-6;
  report(8, pass,
         "predictor ODE: |y(1)-e| = " + num(err_001) + " at h=0.01 (tol 1e-5); "
             "halving gain " + num(ratio) + "x (need >= 4); |y(1)-sin 1| = " +
             num(err_cos) + " (tol 1e-6)");
  if (!pass) {
    std::printf("      note: the stepper is a pure extrapolation predictor (no "
                "corrector); its error recurrence has growing parasitic modes, so "
                "long fixed-step integrations amplify noise instead of converging "
                "(see README, Limitations)\n");
  }
}

// Aitken entries against direct Lagrange evaluation.
void check_9() {
  std::mt19937 rng(20240815);
  std::uniform_real_distribution<double> jitter(-0.2, 0.2);
  std::uniform_real_distribution<double> uy(-2.0, 2.0);
  double worst = 0.0;
  long checked = 0;
  for (int trial = 0; trial < 500; ++trial) {
    const int count = 2 + static_cast<int>(rng() % 8);
    std::vector<Node> nodes;
    for (int i = 0; i < count; ++i) {
      nodes.push_back(Node{-2.0 + 0.5 * i + jitter(rng), uy(rng), {}});
    }
    const double q =
        std::uniform_real_distribution<double>(-2.0, -2.0 + 0.5 * (count - 1))(rng);
    const NodeSet ns = make_node_set(nodes, 0);
    const NodeSet ordered = order_by_proximity(ns, q);
    bool on_node = false;
    for (const Node& n : ordered.nodes) on_node = on_node || n.x == q;
    if (on_node) continue;
    const AitkenSequence s = aitken_sequence(ns, q);
    for (int l = 0; l < count; ++l) {
      double oracle = 0.0;
      for (int i = 0; i <= l; ++i) {
        double term = ordered.nodes[static_cast<std::size_t>(i)].y;
        for (int j = 0; j <= l; ++j) {
          if (j != i) {
            term *= (q - ordered.nodes[static_cast<std::size_t>(j)].x) /
                    (ordered.nodes[static_cast<std::size_t>(i)].x -
                     ordered.nodes[static_cast<std::size_t>(j)].x);
          }
        }
        oracle += term;
      }
      worst = std::max(worst, std::abs(s.values[static_cast<std::size_t>(l)] - oracle) /
                                  std::max(1.0, std::abs(oracle)));
      ++checked;
    }
  }
  report(9, worst <= 1e-9,
         "Aitken vs direct Lagrange: worst rel err " + num(worst) + " over " +
             std::to_string(checked) + " entries (tol 1e-9)");
}

// Degenerate inputs return documented values/statuses without FP faults.
void check_10() {
  std::feclearexcept(FE_INVALID | FE_DIVBYZERO);
  bool ok = true;
  std::string note;

  const auto check = [&](bool cond, const char* what) {
    if (!cond && ok) {
      ok = false;
      note = what;
    }
  };

  const auto constant = build_table({7.0, 7.0, 7.0});
  check(constant.at(1, 1).status == CellStatus::Converged && constant.at(1, 1).value == 7.0,
        "constant sequence not marked converged");
  const auto zeros = accelerate({0.0, 0.0, 0.0, 0.0});
  check(zeros.value == 0.0 && zeros.converged_exactly, "zero sequence mishandled");

  const auto tie_table = build_table({1.0, 2.0, 2.0, 3.0, 4.0});
  check(tie_table.at(1, 1).status == CellStatus::Converged, "tied pair not converged");
  check(tie_table.at(3, 1).status == CellStatus::Invalid, "singular stencil not invalidated");
  const auto tie_choice = accelerate({1.0, 2.0, 2.0, 3.0, 4.0});
  check(std::isfinite(tie_choice.value), "tie acceleration produced a non-finite value");

  const auto alt = accelerate({1.0, 2.0, 1.0, 2.0, 1.0});
  check(alt.value == 1.5, "period-2 sequence should settle on the midpoint");

  const auto single = accelerate({42.0});
  check(single.value == 42.0 && !single.eta_min.has_value(), "length-1 fallback broken");
  const auto pair_c = accelerate({1.0, 2.0});
  check(pair_c.value == 2.0 && !pair_c.eta_min.has_value() && pair_c.l == 1,
        "length-2 fallback broken");

  const bool clean = std::fetestexcept(FE_INVALID | FE_DIVBYZERO) == 0;
  check(clean, "raised FE_INVALID/FE_DIVBYZERO");

  report(10, ok,
         ok ? std::string("breakdown robustness: constants, internal ties, tiny inputs; "
                          "no FE_INVALID/FE_DIVBYZERO raised")
            : "breakdown robustness: " + note);
}

}  // namespace

int main() {
  check_1();
  check_2();
  check_3();
  check_4();
  check_5();
  check_6();
  check_7();
  check_8();
  check_9();
  check_10();
  std::printf("RESULT: %d/10 passed, %d failed\n", 10 - failures, failures);
  return failures;
}
