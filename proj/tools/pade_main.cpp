// pade — command-line front end: divergent-series summation, N-point Pade
// interpolation/extrapolation, the predictor ODE stepper, and CSV regression
// analysis.  Data goes to --output (default stdout), diagnostics to stderr.

#include <cmath>
#include <fstream>
#include <functional>
#include <iostream>
#include <limits>
#include <numbers>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "wynnpade/epsilon.hpp"
#include "wynnpade/io.hpp"
#include "wynnpade/npade.hpp"
#include "wynnpade/ode.hpp"
#include "wynnpade/series.hpp"
#include "wynnpade/stats.hpp"

namespace {

constexpr double kNaN = std::numeric_limits<double>::quiet_NaN();

struct OutputFile {
  explicit OutputFile(const std::string& path) {
    if (path != "-") {
      file.open(path);
      if (!file) throw std::runtime_error("cannot open output file: " + path);
    }
  }
  std::ostream& stream() { return file.is_open() ? file : std::cout; }
  std::ofstream file;
};

void print_regression_to(std::ostream& os, const std::string& prefix,
                         const std::vector<std::pair<double, double>>& pairs) {
  try {
    const wynnpade::RegressionSummary s = wynnpade::loglog_regression(pairs);
    os << prefix << "slope=" << wynnpade::fmt17(s.slope)
       << " intercept=" << wynnpade::fmt17(s.intercept) << " r=" << wynnpade::fmt17(s.r)
       << " n=" << s.n << "\n";
  } catch (const std::domain_error&) {
    std::cerr << "regression: degenerate sample (too few usable points)\n";
  }
}

struct SweepRange {
  double lo = 0.0, hi = 0.0, step = 0.0;
};

SweepRange parse_sweep(const std::string& text) {
  SweepRange r;
  const std::size_t c1 = text.find(':');
  const std::size_t c2 = c1 == std::string::npos ? std::string::npos : text.find(':', c1 + 1);
  if (c1 == std::string::npos || c2 == std::string::npos) {
    throw std::runtime_error("bad sweep range '" + text + "' (expected lo:hi:step)");
  }
  try {
    r.lo = std::stod(text.substr(0, c1));
    r.hi = std::stod(text.substr(c1 + 1, c2 - c1 - 1));
    r.step = std::stod(text.substr(c2 + 1));
  } catch (const std::exception&) {
    throw std::runtime_error("bad sweep range '" + text + "' (expected lo:hi:step)");
  }
  if (!(r.step > 0.0) || !(r.lo <= r.hi)) {
    throw std::runtime_error("bad sweep range '" + text + "' (need lo <= hi, step > 0)");
  }
  return r;
}

// ---------------------------------------------------------------- sum-series

int run_sum_series(double x, int terms, const std::string& sweep, const std::string& dump_path,
                   const std::string& output) {
  OutputFile out(output);
  std::ostream& os = out.stream();
  os << "x,value,eps_emp,eps_real,L,M\n";

  if (!sweep.empty()) {
    const SweepRange r = parse_sweep(sweep);
    const auto records = wynnpade::error_sweep(r.lo, r.hi, r.step, terms);
    std::vector<std::pair<double, double>> pairs;
    pairs.reserve(records.size());
    for (const auto& rec : records) {
      os << wynnpade::fmt17(rec.x) << ',' << wynnpade::fmt17(rec.value) << ','
         << wynnpade::fmt17(rec.eps_emp) << ',' << wynnpade::fmt17(rec.eps_real) << ','
         << rec.l << ',' << rec.m << '\n';
      pairs.emplace_back(rec.eps_real, rec.eps_emp);
    }
    print_regression_to(std::cerr, "regression: ", pairs);
    return 0;
  }

  wynnpade::SeriesSpec spec{wynnpade::SeriesKind::LogOnePlusX, x, {}, terms};
  const auto choice = wynnpade::sum_series(spec);
  const double eps_emp = choice.eta_min ? *choice.eta_min : kNaN;
  const double eps_real = std::abs(choice.value - std::log1p(x));
  os << wynnpade::fmt17(x) << ',' << wynnpade::fmt17(choice.value) << ','
     << wynnpade::fmt17(eps_emp) << ',' << wynnpade::fmt17(eps_real) << ',' << choice.l << ','
     << choice.m << '\n';

  if (!dump_path.empty()) {
    std::ofstream dump(dump_path);
    if (!dump) throw std::runtime_error("cannot open dump file: " + dump_path);
    const auto table = wynnpade::build_table(wynnpade::partial_sums(spec));
    wynnpade::dump_table(table, wynnpade::eta_table(table), dump);
  }
  return 0;
}

// --------------------------------------------------------------- extrapolate

int run_extrapolate(const std::string& nodes_path, int hermite, int node_count, double node_lo,
                    double node_hi, int queries, double query_lo, double query_hi,
                    const std::vector<double>& at, const std::string& output) {
  const bool builtin = nodes_path.empty();
  std::vector<wynnpade::Node> nodes;
  std::vector<int> lines;
  if (builtin) {
    if (node_count < 1) throw std::runtime_error("--node-count must be >= 1");
    for (int i = 0; i < node_count; ++i) {
      const double xi =
          node_count == 1 ? node_lo : node_lo + i * (node_hi - node_lo) / (node_count - 1);
      wynnpade::Node n{xi, std::sin(xi), {}};
      for (int j = 1; j <= hermite; ++j) {
        n.derivs.push_back(std::sin(xi + j * std::numbers::pi / 2.0));
      }
      nodes.push_back(std::move(n));
    }
  } else {
    std::ifstream in(nodes_path);
    if (!in) throw std::runtime_error("cannot open node file: " + nodes_path);
    nodes = wynnpade::read_node_file(in, &lines);
    if (nodes.empty()) throw std::runtime_error("node file contains no nodes");
    for (std::size_t i = 0; i < nodes.size(); ++i) {
      if (static_cast<int>(nodes[i].derivs.size()) < hermite) {
        throw std::runtime_error("node file line " + std::to_string(lines[i]) + ": expected >= " +
                                 std::to_string(hermite) + " derivative column(s)");
      }
    }
  }
  const wynnpade::NodeSet node_set = wynnpade::make_node_set(nodes, hermite);

  std::vector<double> qs;
  if (!at.empty()) {
    qs = at;
  } else {
    if (queries < 1) throw std::runtime_error("--queries must be >= 1");
    qs.reserve(static_cast<std::size_t>(queries));
    for (int j = 1; j <= queries; ++j) {
      qs.push_back(query_lo + (j - 0.5) * (query_hi - query_lo) / queries);
    }
  }

  OutputFile out(output);
  std::ostream& os = out.stream();
  os << "x,value,exact,eps_emp,eps_real,L,M\n";
  std::vector<std::pair<double, double>> pairs;
  pairs.reserve(qs.size());
  for (const auto& r : wynnpade::evaluate_sweep(node_set, qs)) {
    double exact = kNaN;
    if (builtin) {
      exact = std::sin(r.x);
    } else {
      for (const wynnpade::Node& n : node_set.nodes) {
        if (n.x == r.x) {
          exact = n.y;
          break;
        }
      }
    }
    const double eps_emp = r.eta_min ? *r.eta_min : kNaN;
    const double eps_real = std::abs(r.value - exact);
    os << wynnpade::fmt17(r.x) << ',' << wynnpade::fmt17(r.value) << ','
       << wynnpade::fmt17(exact) << ',' << wynnpade::fmt17(eps_emp) << ','
       << wynnpade::fmt17(eps_real) << ',' << r.l << ',' << r.m << '\n';
    pairs.emplace_back(eps_real, eps_emp);
  }
  print_regression_to(std::cerr, "regression: ", pairs);
  return 0;
}

// ----------------------------------------------------------------------- ode

void write_trace_rows(std::ostream& os, const wynnpade::OdeTrace& trace) {
  for (const auto& p : trace) {
    const double eta = p.eta_used ? *p.eta_used : kNaN;
    const int L = p.accepted_order ? p.accepted_order->first : -1;
    const int M = p.accepted_order ? p.accepted_order->second : -1;
    os << wynnpade::fmt17(p.x) << ',' << wynnpade::fmt17(p.y) << ',' << wynnpade::fmt17(p.dy)
       << ',' << wynnpade::fmt17(eta) << ',' << L << ',' << M << '\n';
  }
}

int run_ode(const std::string& problem_name, double x0, std::optional<double> y0, double x_end,
            double h, int window, double eta_tol, const std::string& output) {
  std::function<double(double, double)> rhs;
  double y0_default = 0.0;
  if (problem_name == "const") {
    rhs = [](double, double) { return 0.0; };
    y0_default = 0.0;
  } else if (problem_name == "identity") {
    rhs = [](double, double y) { return y; };
    y0_default = 1.0;
  } else if (problem_name == "cosine") {
    rhs = [](double x, double) { return std::cos(x); };
    y0_default = 0.0;
  } else {
    throw std::runtime_error("unknown problem '" + problem_name +
                             "' (builtins: const, identity, cosine)");
  }

  wynnpade::OdeProblem problem;
  problem.rhs = rhs;
  problem.x0 = x0;
  problem.y0 = y0 ? *y0 : y0_default;
  problem.x_end = x_end;
  problem.h = h;
  problem.window = window;
  problem.eta_tol = eta_tol;

  OutputFile out(output);
  std::ostream& os = out.stream();
  os << "x,y,dy,eta_used,L,M\n";
  try {
    write_trace_rows(os, wynnpade::solve(problem));
  } catch (const wynnpade::OdeDivergenceError& e) {
    write_trace_rows(os, e.partial);  // flush the partial trace before failing
    os.flush();
    std::cerr << "error: divergence: " << e.what() << "\n";
    return 3;
  }
  return 0;
}

// ------------------------------------------------------------------- analyze

int run_analyze(const std::string& csv_path, const std::string& output) {
  wynnpade::ParsedCsv csv;
  if (csv_path == "-") {
    csv = wynnpade::read_csv(std::cin);
  } else {
    std::ifstream in(csv_path);
    if (!in) throw std::runtime_error("cannot open CSV file: " + csv_path);
    csv = wynnpade::read_csv(in);
  }
  const int ie = wynnpade::column_index(csv, "eps_emp");
  const int ir = wynnpade::column_index(csv, "eps_real");
  if (ie < 0 || ir < 0) {
    throw std::runtime_error("CSV is missing the eps_emp/eps_real columns");
  }
  std::vector<std::pair<double, double>> pairs;
  pairs.reserve(csv.rows.size());
  for (const auto& row : csv.rows) {
    if (static_cast<int>(row.size()) <= std::max(ie, ir)) continue;
    pairs.emplace_back(row[static_cast<std::size_t>(ir)], row[static_cast<std::size_t>(ie)]);
  }
  const wynnpade::RegressionSummary s = wynnpade::loglog_regression(pairs);  // may throw
  OutputFile out(output);
  out.stream() << "slope=" << wynnpade::fmt17(s.slope)
               << " intercept=" << wynnpade::fmt17(s.intercept) << " r=" << wynnpade::fmt17(s.r)
               << " n=" << s.n << "\n";
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"N-point Pade approximation toolkit"};
  app.require_subcommand(1);

  // sum-series
  double ss_x = 1.0;
  int ss_terms = 25;
  std::string ss_sweep, ss_dump, ss_output = "-";
  CLI::App* ss = app.add_subcommand("sum-series",
                                    "Sum the alternating log series by epsilon acceleration");
  ss->add_option("--x", ss_x, "Series argument");
  ss->add_option("--terms", ss_terms, "Number of series terms")->check(CLI::PositiveNumber);
  ss->add_option("--sweep", ss_sweep, "Sweep range lo:hi:step (CSV row per grid point)");
  ss->add_option("--dump-table", ss_dump, "Write the epsilon table as CSV to this path");
  ss->add_option("-o,--output", ss_output, "Output path ('-' = stdout)");

  // extrapolate
  std::string ex_nodes, ex_output = "-";
  int ex_hermite = 0, ex_node_count = 21, ex_queries = 4000;
  double ex_node_lo = -std::numbers::pi, ex_node_hi = 0.0;
  double ex_query_lo = 0.0, ex_query_hi = 2.0 * std::numbers::pi;
  std::vector<double> ex_at;
  CLI::App* ex = app.add_subcommand("extrapolate",
                                    "Evaluate the N-point Pade interpolant over a query grid");
  ex->add_option("--nodes", ex_nodes, "Node file (default: builtin sine nodes)");
  ex->add_option("--hermite", ex_hermite, "Use K derivatives per node (Taylor-shifted path)")
      ->check(CLI::NonNegativeNumber);
  ex->add_option("--node-count", ex_node_count, "Builtin mode: node count");
  ex->add_option("--node-lo", ex_node_lo, "Builtin mode: first node abscissa");
  ex->add_option("--node-hi", ex_node_hi, "Builtin mode: last node abscissa");
  ex->add_option("--queries", ex_queries, "Query grid size");
  ex->add_option("--query-lo", ex_query_lo, "Query interval start");
  ex->add_option("--query-hi", ex_query_hi, "Query interval end");
  ex->add_option("--at", ex_at, "Explicit query abscissas (overrides the grid)")
      ->delimiter(',');
  ex->add_option("-o,--output", ex_output, "Output path ('-' = stdout)");

  // ode
  std::string od_problem, od_output = "-";
  double od_x0 = 0.0, od_y0_val = 0.0, od_x_end = 1.0, od_h = 0.01, od_eta_tol = 1e-6;
  int od_window = 6;
  CLI::App* od = app.add_subcommand("ode", "Integrate dy/dx = F(x,y) with the Pade predictor");
  // `--h` is the step-size flag, so this subcommand's help keeps only the long form.
  od->set_help_flag("--help", "Print this help message and exit");
  od->add_option("--problem", od_problem, "Builtin problem: const, identity, cosine")
      ->required();
  od->add_option("--x0", od_x0, "Initial abscissa");
  CLI::Option* od_y0_opt =
      od->add_option("--y0", od_y0_val, "Initial value (default depends on the problem)");
  od->add_option("--x-end", od_x_end, "Final abscissa");
  od->add_option("--h", od_h, "Step size");
  od->add_option("--window", od_window, "Max node window W");
  od->add_option("--eta-tol", od_eta_tol, "Retry threshold on |eta_min|");
  od->add_option("-o,--output", od_output, "Output path ('-' = stdout)");

  // analyze
  std::string an_csv, an_output = "-";
  CLI::App* an = app.add_subcommand("analyze", "Log-log regression of eps_emp vs eps_real");
  an->add_option("csv", an_csv, "CSV path with eps_emp and eps_real columns ('-' = stdin)")
      ->required();
  an->add_option("-o,--output", an_output, "Output path ('-' = stdout)");

  CLI11_PARSE(app, argc, argv);

  try {
    if (ss->parsed()) return run_sum_series(ss_x, ss_terms, ss_sweep, ss_dump, ss_output);
    if (ex->parsed()) {
      return run_extrapolate(ex_nodes, ex_hermite, ex_node_count, ex_node_lo, ex_node_hi,
                             ex_queries, ex_query_lo, ex_query_hi, ex_at, ex_output);
    }
    if (od->parsed()) {
      const std::optional<double> od_y0 =
          od_y0_opt->count() > 0 ? std::optional<double>(od_y0_val) : std::nullopt;
      return run_ode(od_problem, od_x0, od_y0, od_x_end, od_h, od_window, od_eta_tol, od_output);
    }
    if (an->parsed()) return run_analyze(an_csv, an_output);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 0;
}
