#include "wynnpade/npade.hpp"

#include "wynnpade/epsilon.hpp"

namespace wynnpade {

RationalEvaluation evaluate(const NodeSet& nodes, double x) {
  const int count = static_cast<int>(nodes.nodes.size());
  for (const Node& n : nodes.nodes) {
    if (n.x == x) {
      return RationalEvaluation{x, n.y, std::nullopt, 0, 0, count, false};
    }
  }
  const AitkenSequence seq = aitken_sequence(nodes, x);
  const ApproximantChoice<double> choice =
      accelerate<double>(std::span<const double>(seq.values));
  return RationalEvaluation{x,        choice.value, choice.eta_min,
                            choice.l, choice.m,     count,
                            choice.converged_exactly};
}

std::vector<RationalEvaluation> evaluate_sweep(const NodeSet& nodes,
                                               std::span<const double> queries) {
  std::vector<RationalEvaluation> out;
  out.reserve(queries.size());
  for (double q : queries) out.push_back(evaluate(nodes, q));
  return out;
}

}  // namespace wynnpade
