#include "softedge/nystrom.hpp"

#include <cmath>
#include <stdexcept>

namespace softedge::fredholm {
namespace detail {

std::vector<double> weighted_kernel_matrix(const kernels::KernelSpec& spec,
                                           double xi, const QuadratureRule& rule) {
  const int m = rule.order();
  kernels::KernelEvaluator ev(spec);
  ev.prime(rule.nodes);
  std::vector<double> sw(m);
  for (int i = 0; i < m; ++i) sw[i] = std::sqrt(rule.weights[i]);
  std::vector<double> M(static_cast<size_t>(m) * m);
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < m; ++j)
      M[static_cast<size_t>(i) * m + j] = xi * sw[i] * ev.at(i, j) * sw[j];
  return M;
}

double LuDet::value() const {
  if (!ok) return 0.0;
  return sign * std::ldexp(mant, e2);
}

LuDet lu_factor(std::vector<double>& M, int m, std::vector<int>& piv) {
  LuDet det;
  piv.resize(m);
  for (int k = 0; k < m; ++k) {
    int p = k;
    double best = std::fabs(M[static_cast<size_t>(k) * m + k]);
    for (int i = k + 1; i < m; ++i) {
      const double v = std::fabs(M[static_cast<size_t>(i) * m + k]);
      if (v > best) {
        best = v;
        p = i;
      }
    }
    piv[k] = p;
    if (p != k) {
      for (int j = 0; j < m; ++j)
        std::swap(M[static_cast<size_t>(k) * m + j], M[static_cast<size_t>(p) * m + j]);
      det.sign = -det.sign;
    }
    const double pivot = M[static_cast<size_t>(k) * m + k];
    if (pivot == 0.0 || !std::isfinite(pivot)) {
      det.ok = false;
      return det;
    }
    if (pivot < 0.0) {
      det.sign = -det.sign;
    }
    int e;
    det.mant *= std::frexp(std::fabs(pivot), &e);
    det.e2 += e;
    // keep mantissa in a sane band
    int em;
    det.mant = std::frexp(det.mant, &em);
    det.e2 += em;
    const double inv = 1.0 / pivot;
    for (int i = k + 1; i < m; ++i) {
      const double f = M[static_cast<size_t>(i) * m + k] * inv;
      M[static_cast<size_t>(i) * m + k] = f;
      if (f != 0.0)
        for (int j = k + 1; j < m; ++j)
          M[static_cast<size_t>(i) * m + j] -= f * M[static_cast<size_t>(k) * m + j];
    }
  }
  return det;
}

void lu_solve(const std::vector<double>& M, int m, const std::vector<int>& piv,
              std::vector<double>& b) {
  for (int k = 0; k < m; ++k)
    if (piv[k] != k) std::swap(b[k], b[piv[k]]);
  for (int i = 1; i < m; ++i) {
    double s = b[i];
    for (int j = 0; j < i; ++j) s -= M[static_cast<size_t>(i) * m + j] * b[j];
    b[i] = s;
  }
  for (int i = m - 1; i >= 0; --i) {
    double s = b[i];
    for (int j = i + 1; j < m; ++j) s -= M[static_cast<size_t>(i) * m + j] * b[j];
    b[i] = s / M[static_cast<size_t>(i) * m + i];
  }
}

}  // namespace detail

DetResult fredholm_det(const kernels::KernelSpec& spec, double xi, double t,
                       const QuadratureRule& rule) {
  if (!(xi >= 0.0 && xi <= 1.0))
    throw std::domain_error("fredholm_det: need 0 <= xi <= 1");
  if (rule.t != t)
    throw std::domain_error("fredholm_det: rule was built for a different t");
  DetResult r;
  if (xi == 0.0) return r;  // det(I) = 1
  const int m = rule.order();
  std::vector<double> M = detail::weighted_kernel_matrix(spec, xi, rule);
  for (int i = 0; i < m; ++i) {
    for (int j = 0; j < m; ++j) {
      double& e = M[static_cast<size_t>(i) * m + j];
      e = (i == j ? 1.0 : 0.0) - e;
    }
  }
  std::vector<int> piv;
  const detail::LuDet det = detail::lu_factor(M, m, piv);
  r.value = det.value();
  // Exponent below the double range: report zero and flag it.
  if (!det.ok || det.e2 < -1070 || r.value == 0.0) {
    r.value = 0.0;
    r.underflow = true;
  }
  return r;
}

double omega(const kernels::KernelSpec& specK, const kernels::KernelSpec& specL,
             double xi, double t, const QuadratureRule& rule) {
  if (!(xi >= 0.0 && xi <= 1.0))
    throw std::domain_error("omega: need 0 <= xi <= 1");
  if (!specL.correction())
    throw std::domain_error("omega: specL must be a correction kernel");
  if (rule.t != t)
    throw std::domain_error("omega: rule was built for a different t");
  if (xi == 0.0) return 0.0;
  const int m = rule.order();
  std::vector<double> M = detail::weighted_kernel_matrix(specK, xi, rule);
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < m; ++j) {
      double& e = M[static_cast<size_t>(i) * m + j];
      e = (i == j ? 1.0 : 0.0) - e;
    }
  std::vector<double> L = detail::weighted_kernel_matrix(specL, xi, rule);
  std::vector<int> piv;
  const detail::LuDet det = detail::lu_factor(M, m, piv);
  if (!det.ok)
    throw std::runtime_error("omega: I - xi Kw numerically singular (bad rule?)");
  // Tr((I - xi Kw)^{-1} xi Lw): one solve per column, sum the diagonal.
  double trace = 0.0;
  std::vector<double> col(m);
  for (int j = 0; j < m; ++j) {
    for (int i = 0; i < m; ++i) col[i] = L[static_cast<size_t>(i) * m + j];
    detail::lu_solve(M, m, piv, col);
    trace += col[j];
  }
  return -det.value() * trace;
}

}  // namespace softedge::fredholm
