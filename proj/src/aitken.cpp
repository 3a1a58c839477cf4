#include "wynnpade/aitken.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace wynnpade {

NodeSet make_node_set(std::vector<Node> nodes, int K) {
  if (nodes.empty()) throw std::invalid_argument("empty node set");
  if (K < 0) throw std::invalid_argument("negative derivative order");
  for (const Node& n : nodes) {
    if (!std::isfinite(n.x) || !std::isfinite(n.y)) {
      throw std::invalid_argument("non-finite node data");
    }
    if (static_cast<int>(n.derivs.size()) < K) {
      throw std::invalid_argument("node derivative count below requested order");
    }
    for (double d : n.derivs) {
      if (!std::isfinite(d)) throw std::invalid_argument("non-finite node derivative");
    }
  }
  return NodeSet{std::move(nodes), K};
}

NodeSet order_by_proximity(NodeSet ns, double x) {
  std::stable_sort(ns.nodes.begin(), ns.nodes.end(), [x](const Node& a, const Node& b) {
    const double da = std::abs(x - a.x);
    const double db = std::abs(x - b.x);
    if (da != db) return da < db;
    return a.x < b.x;
  });
  return ns;
}

double taylor_shift(const Node& node, int K, double x) {
  const double dx = x - node.x;
  double value = node.y;
  double term = 1.0;
  for (int j = 1; j <= K; ++j) {
    term *= dx / j;  // dx^j / j!
    value += term * node.derivs[static_cast<std::size_t>(j - 1)];
  }
  return value;
}

double taylor_shift(const Node& node, double x) {
  return taylor_shift(node, static_cast<int>(node.derivs.size()), x);
}

AitkenSequence aitken_sequence(const NodeSet& ns, double x) {
  const NodeSet ordered = order_by_proximity(ns, x);
  const auto& nodes = ordered.nodes;
  const int n = static_cast<int>(nodes.size()) - 1;
  if (n < 0) throw std::invalid_argument("empty node set");
  for (int i = 0; i < n; ++i) {
    if (nodes[static_cast<std::size_t>(i)].x == nodes[static_cast<std::size_t>(i + 1)].x) {
      throw std::invalid_argument("coincident nodes");
    }
  }

  std::vector<double> f(nodes.size());
  for (std::size_t i = 0; i < nodes.size(); ++i) {
    f[i] = ordered.K > 0 ? taylor_shift(nodes[i], ordered.K, x) : nodes[i].y;
  }

  AitkenSequence out;
  out.query = x;
  out.values.reserve(nodes.size());
  // Column sweep: after sweep l, f[k] holds the interpolant on nodes
  // {0..l, k} evaluated at x.
  for (int l = 0; l < n; ++l) {
    const auto ul = static_cast<std::size_t>(l);
    out.values.push_back(f[ul]);
    const double xl = nodes[ul].x;
    for (int k = l + 1; k <= n; ++k) {
      const auto uk = static_cast<std::size_t>(k);
      const double xk = nodes[uk].x;
      // Error-correction arrangement of the two-point update: the correction
      // vanishes exactly for constant data, so converged windows do not drift.
      f[uk] += (xk - x) * (f[uk] - f[ul]) / (xl - xk);
    }
  }
  out.values.push_back(f[static_cast<std::size_t>(n)]);
  return out;
}

}  // namespace wynnpade
