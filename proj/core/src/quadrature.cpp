#include "softedge/quadrature.hpp"

#include <cmath>
#include <map>
#include <mutex>
#include <stdexcept>
#include <utility>

namespace softedge::fredholm {
namespace {

std::mutex g_cache_mutex;
std::map<int, std::pair<std::vector<double>, std::vector<double>>> g_cache;

// Newton iteration for the roots of P_n; standard Golub-Welsch-free
// construction (see e.g. Numerical Recipes "gauleg").
void compute_reference(int n, std::vector<double>& x, std::vector<double>& w) {
  x.resize(n);
  w.resize(n);
  const int half = (n + 1) / 2;
  for (int i = 0; i < half; ++i) {
    long double z = cosl(M_PIl * (i + 0.75L) / (n + 0.5L));
    long double pp = 0.0L;
    for (int it = 0; it < 100; ++it) {
      long double p0 = 1.0L, p1 = 0.0L;
      for (int j = 0; j < n; ++j) {
        const long double p2 = p1;
        p1 = p0;
        p0 = ((2.0L * j + 1.0L) * z * p1 - j * p2) / (j + 1.0L);
      }
      // p0 = P_n(z); derivative from the standard identity.
      pp = n * (z * p0 - p1) / (z * z - 1.0L);
      const long double dz = p0 / pp;
      z -= dz;
      if (fabsl(dz) < 1e-19L) break;
    }
    x[i] = static_cast<double>(-z);
    x[n - 1 - i] = static_cast<double>(z);
    const double wi = static_cast<double>(2.0L / ((1.0L - z * z) * pp * pp));
    w[i] = wi;
    w[n - 1 - i] = wi;
  }
}

}  // namespace

void gauss_legendre_reference(int order, std::vector<double>& x,
                              std::vector<double>& w) {
  std::lock_guard<std::mutex> lock(g_cache_mutex);
  auto it = g_cache.find(order);
  if (it == g_cache.end()) {
    std::pair<std::vector<double>, std::vector<double>> ref;
    compute_reference(order, ref.first, ref.second);
    it = g_cache.emplace(order, std::move(ref)).first;
  }
  x = it->second.first;
  w = it->second.second;
}

QuadratureRule build_rule(double t, int order, double tail) {
  if (order < 8) throw std::domain_error("build_rule: order must be >= 8");
  if (!(tail > 0.0)) throw std::domain_error("build_rule: tail must be > 0");
  std::vector<double> x, w;
  gauss_legendre_reference(order, x, w);
  QuadratureRule rule;
  rule.t = t;
  rule.upper = t + tail;
  rule.nodes.resize(order);
  rule.weights.resize(order);
  const double c = 0.5 * (rule.upper + t), hw = 0.5 * tail;
  for (int i = 0; i < order; ++i) {
    rule.nodes[i] = c + hw * x[i];
    rule.weights[i] = hw * w[i];
  }
  return rule;
}

}  // namespace softedge::fredholm
