#pragma once

#include <vector>

namespace softedge::fredholm {

// Gauss-Legendre rule mapped affinely to [t, upper], upper = t + tail.
// Weights are positive and sum to tail; nodes are strictly increasing and
// lie strictly inside (t, upper).
struct QuadratureRule {
  double t = 0.0;
  double upper = 0.0;
  std::vector<double> nodes;
  std::vector<double> weights;
  int order() const { return static_cast<int>(nodes.size()); }
};

// Reference Gauss-Legendre nodes/weights on [-1, 1], cached per order
// (Newton iteration on the Legendre recurrence). Thread-safe.
void gauss_legendre_reference(int order, std::vector<double>& x,
                              std::vector<double>& w);

// order >= 8, tail > 0 required.
QuadratureRule build_rule(double t, int order = 96, double tail = 16.0);

}  // namespace softedge::fredholm
