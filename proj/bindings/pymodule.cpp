// Python bindings for the wynnpade core: sequence acceleration, N-point Pade
// evaluation, series summation, the ODE predictor, and the regression summary.

#include <pybind11/functional.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <optional>
#include <sstream>
#include <utility>
#include <vector>

#include "wynnpade/epsilon.hpp"
#include "wynnpade/io.hpp"
#include "wynnpade/npade.hpp"
#include "wynnpade/ode.hpp"
#include "wynnpade/series.hpp"
#include "wynnpade/stats.hpp"

namespace py = pybind11;
using namespace wynnpade;

namespace {

Node to_node(const py::handle& item) {
  const py::sequence s = py::reinterpret_borrow<py::sequence>(item);
  Node n;
  n.x = py::cast<double>(s[0]);
  n.y = py::cast<double>(s[1]);
  if (py::len(s) > 2) n.derivs = py::cast<std::vector<double>>(s[2]);
  return n;
}

NodeSet to_node_set(const py::sequence& items, int K) {
  std::vector<Node> nodes;
  nodes.reserve(py::len(items));
  for (const py::handle& item : items) nodes.push_back(to_node(item));
  return make_node_set(std::move(nodes), K);
}

SeriesKind to_kind(const std::string& kind) {
  if (kind == "log1p") return SeriesKind::LogOnePlusX;
  if (kind == "geometric") return SeriesKind::Geometric;
  if (kind == "coefficients") return SeriesKind::Coefficients;
  throw std::invalid_argument("unknown series kind '" + kind +
                              "' (log1p, geometric, coefficients)");
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "N-point Pade approximation toolkit (Wynn identity + eta selection)";

  py::class_<ApproximantChoice<double>>(m, "ApproximantChoice")
      .def_readonly("value", &ApproximantChoice<double>::value)
      .def_readonly("eta_min", &ApproximantChoice<double>::eta_min)
      .def_readonly("l", &ApproximantChoice<double>::l)
      .def_readonly("m", &ApproximantChoice<double>::m)
      .def_readonly("converged_exactly", &ApproximantChoice<double>::converged_exactly)
      .def("__repr__", [](const ApproximantChoice<double>& c) {
        std::ostringstream os;
        os << "ApproximantChoice(value=" << fmt17(c.value) << ", eta_min="
           << (c.eta_min ? fmt17(*c.eta_min) : "None") << ", l=" << c.l << ", m=" << c.m
           << ", converged_exactly=" << (c.converged_exactly ? "True" : "False") << ")";
        return os.str();
      });

  py::class_<RationalEvaluation>(m, "RationalEvaluation")
      .def_readonly("x", &RationalEvaluation::x)
      .def_readonly("value", &RationalEvaluation::value)
      .def_readonly("eta_min", &RationalEvaluation::eta_min)
      .def_readonly("l", &RationalEvaluation::l)
      .def_readonly("m", &RationalEvaluation::m)
      .def_readonly("used_nodes", &RationalEvaluation::used_nodes)
      .def_readonly("converged_exactly", &RationalEvaluation::converged_exactly)
      .def("__repr__", [](const RationalEvaluation& r) {
        std::ostringstream os;
        os << "RationalEvaluation(x=" << fmt17(r.x) << ", value=" << fmt17(r.value)
           << ", eta_min=" << (r.eta_min ? fmt17(*r.eta_min) : "None") << ", l=" << r.l
           << ", m=" << r.m << ")";
        return os.str();
      });

  py::class_<SweepRecord>(m, "SweepRecord")
      .def_readonly("x", &SweepRecord::x)
      .def_readonly("value", &SweepRecord::value)
      .def_readonly("eps_emp", &SweepRecord::eps_emp)
      .def_readonly("eps_real", &SweepRecord::eps_real)
      .def_readonly("l", &SweepRecord::l)
      .def_readonly("m", &SweepRecord::m);

  py::class_<OdePoint>(m, "OdePoint")
      .def_readonly("x", &OdePoint::x)
      .def_readonly("y", &OdePoint::y)
      .def_readonly("dy", &OdePoint::dy)
      .def_readonly("eta_used", &OdePoint::eta_used)
      .def_readonly("accepted_order", &OdePoint::accepted_order)
      .def_readonly("eta_flagged", &OdePoint::eta_flagged);

  py::class_<RegressionSummary>(m, "RegressionSummary")
      .def_readonly("slope", &RegressionSummary::slope)
      .def_readonly("intercept", &RegressionSummary::intercept)
      .def_readonly("r", &RegressionSummary::r)
      .def_readonly("n", &RegressionSummary::n)
      .def("__repr__", [](const RegressionSummary& s) {
        std::ostringstream os;
        os << "RegressionSummary(slope=" << fmt17(s.slope) << ", intercept="
           << fmt17(s.intercept) << ", r=" << fmt17(s.r) << ", n=" << s.n << ")";
        return os.str();
      });

  // Hand-rolled exception class so the raised instance can carry the partial
  // trace as a `partial` attribute (a plain register_exception keeps only the
  // message).  The static is required: translators are plain function
  // pointers, so the lambda must not capture.
  static PyObject* divergence_exc =
      PyErr_NewException("wynnpade._core.OdeDivergenceError", PyExc_RuntimeError, nullptr);
  m.attr("OdeDivergenceError") = py::reinterpret_borrow<py::object>(divergence_exc);
  py::register_exception_translator([](std::exception_ptr p) {
    try {
      if (p) std::rethrow_exception(p);
    } catch (const OdeDivergenceError& e) {
      const py::object cls = py::reinterpret_borrow<py::object>(divergence_exc);
      py::object inst = cls(e.what());
      inst.attr("partial") = py::cast(e.partial);
      PyErr_SetObject(divergence_exc, inst.ptr());
    }
  });

  m.def(
      "accelerate",
      [](const std::vector<double>& seq) { return accelerate(seq); },
      py::arg("sequence"),
      "Accelerate a sequence via the epsilon table and minimal-|eta| selection.");

  m.def(
      "table_csv",
      [](const std::vector<double>& seq) {
        const auto table = build_table(seq);
        std::ostringstream os;
        dump_table(table, eta_table(table), os);
        return os.str();
      },
      py::arg("sequence"), "Debug CSV dump (l,m,value,status,eta) of the epsilon table.");

  m.def(
      "evaluate",
      [](const py::sequence& nodes, double x, int K) {
        return evaluate(to_node_set(nodes, K), x);
      },
      py::arg("nodes"), py::arg("x"), py::arg("K") = 0,
      "Evaluate the N-point Pade approximant at x.  Nodes are (x, y) or "
      "(x, y, [derivatives]) tuples; K derivatives per node are used.");

  m.def(
      "evaluate_sweep",
      [](const py::sequence& nodes, const std::vector<double>& queries, int K) {
        return evaluate_sweep(to_node_set(nodes, K), queries);
      },
      py::arg("nodes"), py::arg("queries"), py::arg("K") = 0);

  m.def(
      "aitken_sequence",
      [](const py::sequence& nodes, double x, int K) {
        return aitken_sequence(to_node_set(nodes, K), x).values;
      },
      py::arg("nodes"), py::arg("x"), py::arg("K") = 0,
      "Proximity-ordered Aitken interpolant value sequence S_0..S_n at x.");

  m.def(
      "order_by_proximity",
      [](const py::sequence& nodes, double x) {
        const NodeSet ordered = order_by_proximity(to_node_set(nodes, 0), x);
        std::vector<std::tuple<double, double, std::vector<double>>> out;
        out.reserve(ordered.nodes.size());
        for (const Node& n : ordered.nodes) out.emplace_back(n.x, n.y, n.derivs);
        return out;
      },
      py::arg("nodes"), py::arg("x"));

  m.def(
      "taylor_shift",
      [](const py::handle& node, double x) { return taylor_shift(to_node(node), x); },
      py::arg("node"), py::arg("x"),
      "Taylor shift of one (x_i, y_i, [derivatives]) node toward x.");

  m.def(
      "partial_sums",
      [](const std::string& kind, double x, int terms, const std::vector<double>& coefficients) {
        return partial_sums(SeriesSpec{to_kind(kind), x, coefficients, terms});
      },
      py::arg("kind"), py::arg("x"), py::arg("terms") = 25,
      py::arg("coefficients") = std::vector<double>{});

  m.def(
      "sum_series",
      [](const std::string& kind, double x, int terms, const std::vector<double>& coefficients) {
        return sum_series(SeriesSpec{to_kind(kind), x, coefficients, terms});
      },
      py::arg("kind"), py::arg("x"), py::arg("terms") = 25,
      py::arg("coefficients") = std::vector<double>{},
      "Accelerated series sum; kind is log1p, geometric, or coefficients.");

  m.def("error_sweep", &error_sweep, py::arg("x_min"), py::arg("x_max"), py::arg("step"),
        py::arg("terms") = 25,
        "Log-series summation sweep recording eps_emp and eps_real per grid point.");

  m.def(
      "ode_solve",
      [](const std::function<double(double, double)>& rhs, double x0, double y0, double x_end,
         double h, int window, double eta_tol) {
        return solve(OdeProblem{rhs, x0, y0, x_end, h, window, eta_tol});
      },
      py::arg("rhs"), py::arg("x0"), py::arg("y0"), py::arg("x_end"), py::arg("h") = 0.01,
      py::arg("window") = 6, py::arg("eta_tol") = 1e-6,
      "Integrate dy/dx = rhs(x, y) with the Pade predictor; returns the trace.");

  m.def(
      "loglog_regression",
      [](const std::vector<std::pair<double, double>>& pairs) {
        return loglog_regression(pairs);
      },
      py::arg("pairs"),
      "OLS of log10(eps_emp) on log10(eps_real) over (eps_real, eps_emp) pairs.");
}
