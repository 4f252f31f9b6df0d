#include "softedge/kernels.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

#include "softedge/airy.hpp"
#include "softedge/weighted.hpp"

namespace softedge::kernels {
namespace {

using specfun::airy;
using specfun::AiryPair;
using specfun::WeightedPair;

constexpr double kDiagTol = 1e-4;       // switch to confluent Taylor forms
const double kCbrt2 = std::cbrt(2.0);   // 2^{1/3}

// (f(x) g(y) - g(x) f(y)) / (x - y) from the cubic jets of f and g at the
// midpoint m = (x+y)/2, u = (x-y)/2. Exact through O(u^2); the O(u^4)
// remainder is negligible for |x-y| below kDiagTol.
inline double antisym_ratio(const double f[4], const double g[4], double u) {
  return (f[1] * g[0] - f[0] * g[1]) +
         u * u * ((f[3] * g[0] - f[0] * g[3]) / 6.0 +
                  (f[1] * g[2] - f[2] * g[1]) / 2.0);
}

// Cubic jets of Ai and Ai' at m, using Ai'' = m Ai.
inline void airy_jets(double m, double f[4], double g[4]) {
  const AiryPair p = airy(m);
  f[0] = p.ai;
  f[1] = p.ai_prime;
  f[2] = m * p.ai;
  f[3] = p.ai + m * p.ai_prime;
  g[0] = p.ai_prime;
  g[1] = m * p.ai;
  g[2] = p.ai + m * p.ai_prime;
  g[3] = 2.0 * p.ai_prime + m * m * p.ai;
}

struct AlphaCoefs {
  double c1, pre;  // pre = 1 / (160 c2)
  double beta, gamma, delta;
};

AlphaCoefs alpha_coefs(double alpha) {
  const double r = std::sqrt(1.0 + alpha);
  AlphaCoefs c;
  c.c1 = alpha * alpha * std::cbrt(1.0 + alpha + r) /
         (32.0 * std::pow(1.0 + alpha, 5.0 / 6.0) * std::pow(1.0 + r, 3.0));
  const double c2 = std::pow(1.0 + alpha, 2.0 / 3.0) * std::pow(1.0 + r, 2.0 / 3.0);
  c.pre = 1.0 / (160.0 * c2);
  c.beta = 2.0 + alpha - 6.0 * r;
  c.gamma = 6.0 + 2.0 * r + 3.0 * alpha;
  c.delta = (r - 1.0) * (r - 1.0);
  return c;
}

// Effective Laguerre parameter of a finite spec.
inline double effective_a(const KernelSpec& s) {
  return s.proportional ? s.alpha * s.N : s.a;
}

WeightedPair eval_pair(const KernelSpec& spec, double s) {
  if (spec.kind == KernelKind::FiniteGUE) return specfun::hermite_pair(spec.N, s);
  if (!(s > 0.0))
    throw std::domain_error(
        "finite LUE kernel: scaled argument maps to s = " + std::to_string(s) +
        " <= 0, outside the half line");
  return specfun::laguerre_pair(spec.N, effective_a(spec), s);
}

// sqrt(b_N): Christoffel-Darboux prefactor of the orthonormal kernel.
inline double sqrt_bN(const KernelSpec& spec) {
  if (spec.kind == KernelKind::FiniteGUE) return std::sqrt(0.5 * spec.N);
  return std::sqrt(static_cast<double>(spec.N) * (spec.N + effective_a(spec)));
}

// Cubic jets of (phi_N, phi_{N-1}) at s, in mantissa space at the pair's
// exponent, from the ladder relations and the second-order ODE each phi_n
// satisfies (harmonic oscillator for Hermite, its Laguerre analogue).
void pair_jets(const KernelSpec& spec, const WeightedPair& p, double s,
               double f[4], double g[4]) {
  const specfun::PairDerivs d = spec.kind == KernelKind::FiniteGUE
                                    ? specfun::hermite_pair_derivs(p)
                                    : specfun::laguerre_pair_derivs(p);
  f[0] = p.phi_n_m;
  f[1] = d.dphi_n_m;
  g[0] = p.phi_nm1_m;
  g[1] = d.dphi_nm1_m;
  if (spec.kind == KernelKind::FiniteGUE) {
    const double cf = s * s - (2.0 * spec.N + 1.0);
    const double cg = s * s - (2.0 * spec.N - 1.0);
    f[2] = cf * f[0];
    f[3] = 2.0 * s * f[0] + cf * f[1];
    g[2] = cg * g[0];
    g[3] = 2.0 * s * g[0] + cg * g[1];
  } else {
    const double a = effective_a(spec);
    const double a2 = a * a;
    auto q = [&](double n) {
      return 0.25 - (2.0 * n + a + 1.0) / (2.0 * s) + a2 / (4.0 * s * s);
    };
    auto qp = [&](double n) {
      return (2.0 * n + a + 1.0) / (2.0 * s * s) - a2 / (2.0 * s * s * s);
    };
    const double qN = q(spec.N), qN1 = q(spec.N - 1.0);
    f[2] = -f[1] / s + qN * f[0];
    f[3] = f[1] / (s * s) - f[2] / s + qp(spec.N) * f[0] + qN * f[1];
    g[2] = -g[1] / s + qN1 * g[0];
    g[3] = g[1] / (s * s) - g[2] / s + qp(spec.N - 1.0) * g[0] + qN1 * g[1];
  }
}

}  // namespace

KernelSpec KernelSpec::airy() { return {}; }
KernelSpec KernelSpec::correction_gue() {
  KernelSpec s;
  s.kind = KernelKind::CorrectionGUE;
  return s;
}
KernelSpec KernelSpec::correction_lue() {
  KernelSpec s;
  s.kind = KernelKind::CorrectionLUE;
  return s;
}
KernelSpec KernelSpec::correction_lue_alpha(double alpha) {
  if (!(alpha > 0.0))
    throw std::domain_error("correction_lue_alpha: need alpha > 0");
  KernelSpec s;
  s.kind = KernelKind::CorrectionLUEAlpha;
  s.alpha = alpha;
  return s;
}
KernelSpec KernelSpec::finite_gue(int N) {
  if (N < 1) throw std::domain_error("finite_gue: need N >= 1");
  KernelSpec s;
  s.kind = KernelKind::FiniteGUE;
  s.N = N;
  return s;
}
KernelSpec KernelSpec::finite_lue(int N, double a) {
  if (N < 1) throw std::domain_error("finite_lue: need N >= 1");
  if (!(a >= 0.0)) throw std::domain_error("finite_lue: need a >= 0");
  KernelSpec s;
  s.kind = KernelKind::FiniteLUE;
  s.N = N;
  s.a = a;
  return s;
}
KernelSpec KernelSpec::finite_lue_alpha(int N, double alpha) {
  if (N < 1) throw std::domain_error("finite_lue_alpha: need N >= 1");
  if (!(alpha > 0.0)) throw std::domain_error("finite_lue_alpha: need alpha > 0");
  KernelSpec s;
  s.kind = KernelKind::FiniteLUE;
  s.N = N;
  s.alpha = alpha;
  s.proportional = true;
  return s;
}

double EdgeScaling::s(double t) const {
  switch (ensemble) {
    case Ensemble::GUE:
      return std::sqrt(2.0 * N) + t / (std::sqrt(2.0) * std::pow(N, 1.0 / 6.0));
    case Ensemble::LUEFixedA:
      return 4.0 * N + 2.0 * a + 2.0 * std::cbrt(2.0 * N) * t;
    case Ensemble::LUEAlpha: {
      const double r = std::sqrt(1.0 + alpha);
      return N * (r + 1.0) * (r + 1.0) + jacobian() * t;
    }
  }
  return 0.0;
}

double EdgeScaling::jacobian() const {
  switch (ensemble) {
    case Ensemble::GUE:
      return 1.0 / (std::sqrt(2.0) * std::pow(N, 1.0 / 6.0));
    case Ensemble::LUEFixedA:
      return 2.0 * std::cbrt(2.0 * N);
    case Ensemble::LUEAlpha: {
      const double r = std::sqrt(1.0 + alpha);
      return std::cbrt(N) * (r + 1.0) * std::cbrt(1.0 / r + 1.0);
    }
  }
  return 0.0;
}

EdgeScaling EdgeScaling::gue(int N) { return {Ensemble::GUE, N, 0.0, 0.0}; }
EdgeScaling EdgeScaling::lue_fixed(int N, double a) {
  return {Ensemble::LUEFixedA, N, a, 0.0};
}
EdgeScaling EdgeScaling::lue_alpha(int N, double alpha) {
  return {Ensemble::LUEAlpha, N, alpha * N, alpha};
}

EdgeScaling canonical_scaling(const KernelSpec& spec) {
  if (!spec.finite())
    throw std::domain_error("canonical_scaling: spec is not a finite kernel");
  if (spec.kind == KernelKind::FiniteGUE) return EdgeScaling::gue(spec.N);
  if (spec.proportional) return EdgeScaling::lue_alpha(spec.N, spec.alpha);
  return EdgeScaling::lue_fixed(spec.N, spec.a);
}

double airy_kernel(double x, double y) {
  if (std::fabs(x - y) < kDiagTol) {
    double f[4], g[4];
    airy_jets(0.5 * (x + y), f, g);
    return antisym_ratio(f, g, 0.5 * (x - y));
  }
  const AiryPair px = airy(x), py = airy(y);
  return (px.ai * py.ai_prime - px.ai_prime * py.ai) / (x - y);
}

double correction_kernel(CorrectionVariant v, double x, double y) {
  const AiryPair px = airy(x), py = airy(y);
  const double aa = px.ai * py.ai;
  const double pp = px.ai_prime * py.ai_prime;
  const double cross = px.ai_prime * py.ai + px.ai * py.ai_prime;
  const double q = x * x + x * y + y * y;
  if (v == CorrectionVariant::GUE)
    return ((x + y) * pp - q * aa + 1.5 * cross) / 20.0;
  return kCbrt2 / 10.0 * (q * aa - (x + y) * pp + cross);
}

double correction_kernel_lue_alt(double x, double y) {
  const AiryPair px = airy(x), py = airy(y);
  const double q = x * x + x * y + y * y;
  return kCbrt2 / 10.0 *
         (q * px.ai_prime * py.ai_prime - q * px.ai * py.ai +
          1.5 * (px.ai_prime * py.ai + px.ai * py.ai_prime));
}

double detail::correction_alpha_literal(double alpha, double x, double y) {
  if (x == y)
    throw std::domain_error("correction_alpha_literal: x == y");
  const AlphaCoefs c = alpha_coefs(alpha);
  const AiryPair px = airy(x), py = airy(y);
  const double aa = px.ai * py.ai;
  const double pp = px.ai_prime * py.ai_prime;
  const double q = (x * x + y * y) * (x * x + y * y);
  const double B = -8.0 * c.beta * (x * x * x - y * y * y) * aa +
                   (4.0 * c.gamma * (x - y) - 5.0 * c.delta * q) * py.ai * px.ai_prime +
                   (4.0 * c.gamma * (x - y) + 5.0 * c.delta * q) * px.ai * py.ai_prime +
                   8.0 * c.beta * (x * x - y * y) * pp;
  return -c.c1 * q * airy_kernel(x, y) + c.pre * B / (x - y);
}

double detail::correction_alpha_decomposed(double alpha, double x, double y) {
  const AlphaCoefs c = alpha_coefs(alpha);
  const AiryPair px = airy(x), py = airy(y);
  const double aa = px.ai * py.ai;
  const double pp = px.ai_prime * py.ai_prime;
  const double cross = px.ai_prime * py.ai + px.ai * py.ai_prime;
  const double q = (x * x + y * y) * (x * x + y * y);
  const double kair = airy_kernel(x, y);
  // B / (x - y) with the difference quotients carried out exactly:
  //   (x^3-y^3)/(x-y) = x^2+xy+y^2, (x^2-y^2)/(x-y) = x+y, and the
  //   antisymmetric +-5 delta q cross pair reduces to the Airy kernel.
  const double bq = -8.0 * c.beta * (x * x + x * y + y * y) * aa +
                    4.0 * c.gamma * cross + 5.0 * c.delta * q * kair +
                    8.0 * c.beta * (x + y) * pp;
  return -c.c1 * q * kair + c.pre * bq;
}

double correction_kernel_alpha(double alpha, double x, double y) {
  if (!(alpha > 0.0))
    throw std::domain_error("correction_kernel_alpha: need alpha > 0");
  if (std::fabs(x - y) < kDiagTol)
    return detail::correction_alpha_decomposed(alpha, x, y);
  return detail::correction_alpha_literal(alpha, x, y);
}

double finite_kernel_scaled(const KernelSpec& spec, const EdgeScaling& sc,
                            double x, double y) {
  if (!spec.finite())
    throw std::domain_error("finite_kernel_scaled: spec is not a finite kernel");
  const double J = sc.jacobian();
  const double sb = sqrt_bN(spec);
  if (std::fabs(x - y) < kDiagTol) {
    const double sm = sc.s(0.5 * (x + y));
    const WeightedPair p = eval_pair(spec, sm);
    double f[4], g[4];
    pair_jets(spec, p, sm, f, g);
    const double us = 0.5 * J * (x - y);
    return J * sb * std::ldexp(antisym_ratio(f, g, us), 2 * p.exp2);
  }
  const double sx = sc.s(x), sy = sc.s(y);
  const WeightedPair pX = eval_pair(spec, sx), pY = eval_pair(spec, sy);
  const double num = pX.phi_n_m * pY.phi_nm1_m - pX.phi_nm1_m * pY.phi_n_m;
  return J * sb * std::ldexp(num, pX.exp2 + pY.exp2) / (sx - sy);
}

double finite_kernel_raw_diag(const KernelSpec& spec, double s) {
  if (!spec.finite())
    throw std::domain_error("finite_kernel_raw_diag: spec is not a finite kernel");
  const WeightedPair p = eval_pair(spec, s);
  const specfun::PairDerivs d = spec.kind == KernelKind::FiniteGUE
                                    ? specfun::hermite_pair_derivs(p)
                                    : specfun::laguerre_pair_derivs(p);
  const double num = d.dphi_n_m * p.phi_nm1_m - d.dphi_nm1_m * p.phi_n_m;
  return sqrt_bN(spec) * std::ldexp(num, 2 * p.exp2);
}

DensityCorrection density_correction(const KernelSpec& spec, double y) {
  const AiryPair p = airy(y);
  const double A = p.ai, P = p.ai_prime;
  DensityCorrection d;
  d.rho0 = P * P - y * A * A;
  switch (spec.kind) {
    case KernelKind::AiryLimit:
      d.rho1 = 0.0;
      break;
    case KernelKind::CorrectionGUE:
      d.rho1 = -(3.0 * y * y * A * A - 2.0 * y * P * P - 3.0 * A * P) / 20.0;
      break;
    case KernelKind::CorrectionLUE:
      d.rho1 = kCbrt2 / 10.0 * (3.0 * y * y * A * A - 2.0 * y * P * P + 2.0 * A * P);
      break;
    case KernelKind::CorrectionLUEAlpha:
      d.rho1 = detail::correction_alpha_decomposed(spec.alpha, y, y);
      break;
    default:
      throw std::domain_error("density_correction: finite kernels have no rho1");
  }
  return d;
}

double kernel_eval(const KernelSpec& spec, double x, double y) {
  switch (spec.kind) {
    case KernelKind::AiryLimit:
      return airy_kernel(x, y);
    case KernelKind::CorrectionGUE:
      return correction_kernel(CorrectionVariant::GUE, x, y);
    case KernelKind::CorrectionLUE:
      return correction_kernel(CorrectionVariant::LUE, x, y);
    case KernelKind::CorrectionLUEAlpha:
      return correction_kernel_alpha(spec.alpha, x, y);
    case KernelKind::FiniteGUE:
    case KernelKind::FiniteLUE:
      return finite_kernel_scaled(spec, canonical_scaling(spec), x, y);
  }
  return 0.0;
}

KernelEvaluator::KernelEvaluator(const KernelSpec& spec) : spec_(spec) {
  if (spec_.finite()) scaling_ = canonical_scaling(spec_);
}

void KernelEvaluator::prime(const std::vector<double>& pts) {
  pts_ = pts;
  const int m = static_cast<int>(pts.size());
  if (spec_.finite()) {
    s_.resize(m);
    fn_.resize(m);
    fnm1_.resize(m);
    e2_.resize(m);
    for (int i = 0; i < m; ++i) {
      s_[i] = scaling_.s(pts[i]);
      const WeightedPair p = eval_pair(spec_, s_[i]);
      fn_[i] = p.phi_n_m;
      fnm1_[i] = p.phi_nm1_m;
      e2_[i] = p.exp2;
    }
  } else {
    ai_.resize(m);
    aip_.resize(m);
    for (int i = 0; i < m; ++i) {
      const AiryPair p = airy(pts[i]);
      ai_[i] = p.ai;
      aip_[i] = p.ai_prime;
    }
  }
}

double KernelEvaluator::at(int i, int j) const {
  const double x = pts_[i], y = pts_[j];
  if (spec_.finite()) {
    if (i == j) return finite_kernel_scaled(spec_, scaling_, x, y);
    const double num = fn_[i] * fnm1_[j] - fnm1_[i] * fn_[j];
    return scaling_.jacobian() * sqrt_bN(spec_) *
           std::ldexp(num, e2_[i] + e2_[j]) / (s_[i] - s_[j]);
  }
  const double aa = ai_[i] * ai_[j];
  const double pp = aip_[i] * aip_[j];
  const double cross = aip_[i] * ai_[j] + ai_[i] * aip_[j];
  switch (spec_.kind) {
    case KernelKind::AiryLimit:
      if (i == j) return pp - x * aa;
      return (ai_[i] * aip_[j] - aip_[i] * ai_[j]) / (x - y);
    case KernelKind::CorrectionGUE:
      return ((x + y) * pp - (x * x + x * y + y * y) * aa + 1.5 * cross) / 20.0;
    case KernelKind::CorrectionLUE:
      return kCbrt2 / 10.0 *
             ((x * x + x * y + y * y) * aa - (x + y) * pp + cross);
    case KernelKind::CorrectionLUEAlpha: {
      const AlphaCoefs c = alpha_coefs(spec_.alpha);
      const double q = (x * x + y * y) * (x * x + y * y);
      const double kair = (i == j) ? pp - x * aa
                                   : (ai_[i] * aip_[j] - aip_[i] * ai_[j]) / (x - y);
      const double bq = -8.0 * c.beta * (x * x + x * y + y * y) * aa +
                        4.0 * c.gamma * cross + 5.0 * c.delta * q * kair +
                        8.0 * c.beta * (x + y) * pp;
      return -c.c1 * q * kair + c.pre * bq;
    }
    default:
      break;
  }
  return 0.0;
}

}  // namespace softedge::kernels
