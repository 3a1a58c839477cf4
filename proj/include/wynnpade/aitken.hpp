#pragma once

// Proximity-ordered Aitken ("crest by crest") polynomial interpolation.
//
// Given nodes (x_i, y_i) and a query x, the in-place column sweep produces the
// sequence S_0..S_n where S_l is the value at x of the degree-l polynomial
// through the l+1 nodes nearest to x.  With K > 0 each nodal value is first
// replaced by its K-term Taylor shift toward x, which gives the interpolant
// Hermite-style contact (value and K derivatives) at the nodes.

#include <span>
#include <vector>

namespace wynnpade {

struct Node {
  double x = 0.0;
  double y = 0.0;
  std::vector<double> derivs;  // derivs[j] = (j+1)-th derivative at x
};

// Nodes plus the uniform derivative order K actually used by the pipeline.
// Every node must carry at least K derivatives.
struct NodeSet {
  std::vector<Node> nodes;
  int K = 0;
};

// Validates finiteness and the uniform derivative order; throws
// std::invalid_argument on an empty list, K exceeding a node's derivative
// count, or non-finite data.
NodeSet make_node_set(std::vector<Node> nodes, int K = 0);

// Sorts by |x - x_i| nondecreasing; ties broken by smaller x_i.
NodeSet order_by_proximity(NodeSet ns, double x);

// K-term Taylor shift of one node's data toward x (all stored derivatives).
double taylor_shift(const Node& node, double x);
// Same, using only the first K derivatives.
double taylor_shift(const Node& node, int K, double x);

struct AitkenSequence {
  double query = 0.0;
  std::vector<double> values;  // entry l = degree-l interpolant at query
};

// Orders the nodes internally, applies the Taylor shift when ns.K > 0, then
// runs the column sweep.  Throws std::invalid_argument("coincident nodes") on
// duplicate abscissas.
AitkenSequence aitken_sequence(const NodeSet& ns, double x);

}  // namespace wynnpade
