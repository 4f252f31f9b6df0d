#include "softedge/weighted.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

#include "softedge/gamma.hpp"

namespace softedge::specfun {
namespace {

constexpr double kLogPi = 1.1447298858494001741;

// Split exp(lnv) into mantissa * 2^e without ever forming exp(lnv).
void exp_split(long double lnv, double& mant, int& e2) {
  const long double lb = lnv / 0.693147180559945309417232121458L;  // log2
  const long double fl = floorl(lb);
  e2 = static_cast<int>(fl);
  mant = static_cast<double>(exp2l(lb - fl));
}

// Rescale so max(|p|,|q|) stays within 2^+-60; accumulates into e2. The
// tight band matters: kernel assembly multiplies mantissas from two
// different nodes, so each factor must stay well inside the double range.
inline void renorm(double& p, double& q, int& e2) {
  const double m = std::fmax(std::fabs(p), std::fabs(q));
  if (m > 1.15e18 || (m > 0.0 && m < 8.7e-19)) {
    int ex;
    std::frexp(m, &ex);
    p = std::ldexp(p, -ex);
    q = std::ldexp(q, -ex);
    e2 += ex;
  }
}

}  // namespace

WeightedPair hermite_pair(int n, double x) {
  if (n < 0) throw std::domain_error("hermite_pair: n must be >= 0");
  if (!std::isfinite(x))
    throw std::domain_error("hermite_pair: non-finite x");
  // phi_0 = pi^{-1/4} exp(-x^2/2)
  double p0m;
  int e2;
  exp_split(-0.5L * static_cast<long double>(x) * x - 0.25L * kLogPi, p0m, e2);
  double pm1 = 0.0, p = p0m;
  // sqrt(b_{k}) phi_k = x phi_{k-1} - sqrt(b_{k-1}) phi_{k-2}, b_k = k/2.
  double sb_prev = 0.0;
  for (int k = 1; k <= n; ++k) {
    const double sb = std::sqrt(0.5 * k);
    const double next = (x * p - sb_prev * pm1) / sb;
    pm1 = p;
    p = next;
    sb_prev = sb;
    renorm(p, pm1, e2);
  }
  return {n, 0.0, x, p, pm1, e2};
}

WeightedPair laguerre_pair(int n, double a, double x) {
  if (n < 0) throw std::domain_error("laguerre_pair: n must be >= 0");
  if (!(a > -1.0))
    throw std::domain_error("laguerre_pair: need a > -1, got " + std::to_string(a));
  if (!(x >= 0.0) || !std::isfinite(x))
    throw std::domain_error("laguerre_pair: need x >= 0, got " + std::to_string(x));
  // phi_0 = x^{a/2} exp(-x/2) / sqrt(Gamma(a+1))
  double p0m;
  int e2 = 0;
  if (x == 0.0) {
    p0m = (a == 0.0) ? 1.0 : 0.0;
  } else {
    exp_split((0.5L * a) * logl(static_cast<long double>(x)) - 0.5L * x -
                  0.5L * static_cast<long double>(log_gamma(a + 1.0)),
              p0m, e2);
  }
  double pm1 = 0.0, p = p0m;
  // sqrt(b_k) phi_k = (x - a_{k-1}) phi_{k-1} - sqrt(b_{k-1}) phi_{k-2},
  // a_j = 2j + a + 1, b_j = j(j+a).
  double sb_prev = 0.0;
  for (int k = 1; k <= n; ++k) {
    const double sb = std::sqrt(static_cast<double>(k) * (k + a));
    const double ak = 2.0 * (k - 1) + a + 1.0;
    const double next = ((x - ak) * p - sb_prev * pm1) / sb;
    pm1 = p;
    p = next;
    sb_prev = sb;
    renorm(p, pm1, e2);
  }
  return {n, a, x, p, pm1, e2};
}

PairDerivs hermite_pair_derivs(const WeightedPair& p) {
  const double s = std::sqrt(2.0 * p.n);
  return {s * p.phi_nm1_m - p.x * p.phi_n_m,
          p.x * p.phi_nm1_m - s * p.phi_n_m};
}

PairDerivs laguerre_pair_derivs(const WeightedPair& p) {
  if (!(p.x > 0.0))
    throw std::domain_error("laguerre_pair_derivs: need x > 0");
  const double sb = std::sqrt(static_cast<double>(p.n) * (p.n + p.a));
  const double inv_x = 1.0 / p.x;
  return {(p.n * inv_x + 0.5 * p.a * inv_x - 0.5) * p.phi_n_m + sb * inv_x * p.phi_nm1_m,
          (0.5 - (p.n + 0.5 * p.a) * inv_x) * p.phi_nm1_m - sb * inv_x * p.phi_n_m};
}

WeightedPolyValue hermite_weighted(int n, double x) {
  const WeightedPair p = hermite_pair(n, x);
  return {n, 0.0, x, std::ldexp(p.phi_n_m, p.exp2)};
}

WeightedPolyValue laguerre_weighted(int n, double a, double x) {
  const WeightedPair p = laguerre_pair(n, a, x);
  return {n, a, x, std::ldexp(p.phi_n_m, p.exp2)};
}

}  // namespace softedge::specfun
