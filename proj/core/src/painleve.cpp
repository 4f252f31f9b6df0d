#include "softedge/painleve.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <cstdio>
#include <limits>
#include <stdexcept>
#include <string>

#include "softedge/airy.hpp"
#include "softedge/kernels.hpp"
#include "softedge/quadrature.hpp"

namespace softedge::painleve {
namespace {

using specfun::airy;
using specfun::AiryPair;

[[noreturn]] void fail_at(const char* what, double y) {
  char buf[160];
  std::snprintf(buf, sizeof buf, "%s near y=%.6f", what, y);
  throw std::runtime_error(buf);
}

// ---------------------------------------------------------------------------
// Closed forms in A = Ai(y), P = Ai'(y). All derivatives use Ai'' = y Ai.

struct Rho0Jet {
  double v, d1, d2;
};

Rho0Jet rho0_jet(double y) {
  AiryPair ap = airy(y);
  double A = ap.ai, P = ap.ai_prime;
  return {P * P - y * A * A, -A * A, -2.0 * A * P};
}

// Integral_y^inf rho0: differentiating gives -rho0 exactly.
double rho0_tail_closed(double y) {
  AiryPair ap = airy(y);
  double A = ap.ai, P = ap.ai_prime;
  return (2.0 / 3.0) * (y * y * A * A - y * P * P) - A * P / 3.0;
}

struct Rho1Jet {
  double v, d1;
};

// Correction-density diagonal and its derivative for the proportional
// Laguerre regime. Same constants as the off-diagonal correction kernel; the
// unit tests pin the value against the kernels module.
Rho1Jet alpha_rho1_jet(double alpha, double y) {
  double sq = std::sqrt(1.0 + alpha);
  double c1 = alpha * alpha * std::cbrt(1.0 + alpha + sq) /
              (32.0 * std::pow(1.0 + alpha, 5.0 / 6.0) * (1.0 + sq) * (1.0 + sq) * (1.0 + sq));
  double c2 = std::cbrt((1.0 + alpha) * (1.0 + alpha)) * std::cbrt((1.0 + sq) * (1.0 + sq));
  double beta = 2.0 + alpha - 6.0 * sq;
  double gamma = 6.0 + 2.0 * sq + 3.0 * alpha;
  double delta = (sq - 1.0) * (sq - 1.0);

  AiryPair ap = airy(y);
  double A = ap.ai, P = ap.ai_prime;
  double A2 = A * A, P2 = P * P, AP = A * P;
  double y2 = y * y, y3 = y2 * y, y4 = y2 * y2;
  double K0 = P2 - y * A2;       // Airy kernel diagonal
  double dK0y4 = 4.0 * y3 * K0 - y4 * A2;  // d/dy of y^4 K0

  double v = -4.0 * c1 * y4 * K0 +
             (1.0 / (160.0 * c2)) *
                 (-24.0 * beta * y2 * A2 + 8.0 * gamma * AP + 20.0 * delta * y4 * K0 +
                  16.0 * beta * y * P2);
  double d1 = -4.0 * c1 * dK0y4 +
              (1.0 / (160.0 * c2)) *
                  (-24.0 * beta * (2.0 * y * A2 + 2.0 * y2 * AP) + 8.0 * gamma * (P2 + y * A2) +
                   20.0 * delta * dK0y4 + 16.0 * beta * (P2 + 2.0 * y2 * AP));
  return {v, d1};
}

Rho1Jet rho1_jet(SigmaVariant variant, double alpha, double y) {
  if (variant == SigmaVariant::LUEAlpha) return alpha_rho1_jet(alpha, y);
  AiryPair ap = airy(y);
  double A = ap.ai, P = ap.ai_prime;
  double A2 = A * A, P2 = P * P, AP = A * P;
  double y2 = y * y;
  if (variant == SigmaVariant::GUE) {
    return {-(3.0 * y2 * A2 - 2.0 * y * P2 - 3.0 * AP) / 20.0,
            -(3.0 * y * A2 + 2.0 * y2 * AP - 5.0 * P2) / 20.0};
  }
  double c = std::cbrt(2.0) / 10.0;
  return {c * (3.0 * y2 * A2 - 2.0 * y * P2 + 2.0 * AP),
          c * (8.0 * y * A2 + 2.0 * y2 * AP)};
}

// Integral_y^inf rho1 in closed form (GUE/LUE); the proportional variant has
// no comparably simple antiderivative and is integrated numerically.
double rho1_tail(SigmaVariant variant, double alpha, double y, const BoundaryConfig& cfg) {
  if (variant == SigmaVariant::LUEAlpha) {
    fredholm::QuadratureRule rule = fredholm::build_rule(y, cfg.tail_nodes, cfg.tail_span);
    double s = 0.0;
    for (std::size_t i = 0; i < rule.nodes.size(); ++i)
      s += rule.weights[i] * alpha_rho1_jet(alpha, rule.nodes[i]).v;
    return s;
  }
  AiryPair ap = airy(y);
  double A = ap.ai, P = ap.ai_prime;
  double y2 = y * y, y3 = y2 * y;
  if (variant == SigmaVariant::GUE)
    return -(y2 * P * P - y3 * A * A + 1.5 * A * A) / 20.0;
  return std::cbrt(2.0) / 10.0 * (y2 * P * P - y3 * A * A - A * A);
}

// ---------------------------------------------------------------------------
// Squared-kernel tail integrals for the extended boundary conditions.

double tail_sq_airy(double y, const BoundaryConfig& cfg) {
  fredholm::QuadratureRule rule = fredholm::build_rule(y, cfg.tail_nodes, cfg.tail_span);
  double s = 0.0;
  for (std::size_t i = 0; i < rule.nodes.size(); ++i) {
    double k = kernels::airy_kernel(y, rule.nodes[i]);
    s += rule.weights[i] * k * k;
  }
  return s;
}

double tail_sq_correction(SigmaVariant variant, double alpha, double y,
                          const BoundaryConfig& cfg) {
  fredholm::QuadratureRule rule = fredholm::build_rule(y, cfg.tail_nodes, cfg.tail_span);
  double s = 0.0;
  for (std::size_t i = 0; i < rule.nodes.size(); ++i) {
    double k = 0.0;
    switch (variant) {
      case SigmaVariant::GUE:
        k = kernels::correction_kernel(kernels::CorrectionVariant::GUE, y, rule.nodes[i]);
        break;
      case SigmaVariant::LUE:
        k = kernels::correction_kernel(kernels::CorrectionVariant::LUE, y, rule.nodes[i]);
        break;
      case SigmaVariant::LUEAlpha:
        k = kernels::correction_kernel_alpha(alpha, y, rule.nodes[i]);
        break;
    }
    s += rule.weights[i] * k * k;
  }
  return s;
}

// 5-point central stencils for the y-derivatives of the tail integrals (the
// integrals are smooth and of the same scale as the density, so a modest
// finite-difference step loses nothing at the accuracy of the asymptotics).
constexpr double kTailFdStep = 0.05;

struct Boundary0 {
  double s, sp, spp;
};

Boundary0 sigma0_boundary(double xi, const BoundaryConfig& cfg) {
  double y0 = cfg.y_start;
  Rho0Jet r = rho0_jet(y0);
  Boundary0 b{xi * r.v, xi * r.d1, xi * r.d2};
  if (cfg.order == BoundaryOrder::Extended) {
    const double h = kTailFdStep;
    double g[5];
    for (int j = -2; j <= 2; ++j) g[j + 2] = tail_sq_airy(y0 + j * h, cfg);
    double g1 = (-g[4] + 8.0 * g[3] - 8.0 * g[1] + g[0]) / (12.0 * h);
    double g2 = (-g[4] + 16.0 * g[3] - 30.0 * g[2] + 16.0 * g[1] - g[0]) / (12.0 * h * h);
    b.s -= xi * xi * g[2];
    b.sp -= xi * xi * g1;
    b.spp -= xi * xi * g2;
  }
  return b;
}

struct Boundary1 {
  double s, sp;
};

Boundary1 sigma1_boundary(SigmaVariant variant, double alpha, double xi,
                          const BoundaryConfig& cfg) {
  double y0 = cfg.y_start;
  Rho1Jet r = rho1_jet(variant, alpha, y0);
  Boundary1 b{xi * r.v, xi * r.d1};
  if (cfg.order == BoundaryOrder::Extended) {
    const double h = kTailFdStep;
    double g[5];
    for (int j = -2; j <= 2; ++j)
      g[j + 2] = tail_sq_correction(variant, alpha, y0 + j * h, cfg);
    double g1 = (-g[4] + 8.0 * g[3] - 8.0 * g[1] + g[0]) / (12.0 * h);
    b.s -= xi * xi * g[2];
    b.sp -= xi * xi * g1;
  }
  return b;
}

// ---------------------------------------------------------------------------
// Embedded Dormand-Prince 5(4) pair, integrating downward (negative steps).
//
// Two defences against the known ill-conditioning of this initial value
// problem (perturbations injected at y grow like exp((2 sqrt 2/3)|y|^{3/2})
// toward the left tail, reaching ~1e11 by y = -10):
//   * the state is carried in long double, so the error estimator keeps
//     working below double roundoff and the tolerance can be tightened to
//     1e-12;
//   * the absolute tolerance floor is scaled per component by the running
//     maximum magnitude, so the exponentially small entry region near
//     y_start is resolved relative to itself; a flat floor there would swamp
//     the solution and excite the growing modes immediately.

constexpr double kMaxStepMag = 0.2;

template <std::size_t D>
using LState = std::array<long double, D>;

template <std::size_t D, typename Rhs, typename OnAccept>
void integrate_down(double y0, double y_end, LState<D> u, const OdeOptions& opts,
                    const char* stall_msg, Rhs rhs, OnAccept on_accept) {
  LState<D> runmax{};
  for (std::size_t d = 0; d < D; ++d) runmax[d] = fabsl(u[d]);

  LState<D> k1 = rhs(y0, u);
  on_accept(y0, u, k1);

  double y = y0;
  double h = -std::abs(opts.h_init);
  int iterations = 0;
  while (y > y_end + 1e-14) {
    if (++iterations > 500000) fail_at("step count limit exceeded", y);
    if (-h < opts.h_min) fail_at(stall_msg, y);
    double hs = (y + h < y_end) ? (y_end - y) : h;

    LState<D> st, k2, k3, k4, k5, k6, k7, u5, err;
    for (std::size_t d = 0; d < D; ++d) st[d] = u[d] + hs * (1.0L / 5.0L) * k1[d];
    k2 = rhs(y + hs / 5.0, st);
    for (std::size_t d = 0; d < D; ++d)
      st[d] = u[d] + hs * (3.0L / 40.0L * k1[d] + 9.0L / 40.0L * k2[d]);
    k3 = rhs(y + 3.0 * hs / 10.0, st);
    for (std::size_t d = 0; d < D; ++d)
      st[d] = u[d] + hs * (44.0L / 45.0L * k1[d] - 56.0L / 15.0L * k2[d] +
                           32.0L / 9.0L * k3[d]);
    k4 = rhs(y + 4.0 * hs / 5.0, st);
    for (std::size_t d = 0; d < D; ++d)
      st[d] = u[d] + hs * (19372.0L / 6561.0L * k1[d] - 25360.0L / 2187.0L * k2[d] +
                           64448.0L / 6561.0L * k3[d] - 212.0L / 729.0L * k4[d]);
    k5 = rhs(y + 8.0 * hs / 9.0, st);
    for (std::size_t d = 0; d < D; ++d)
      st[d] = u[d] + hs * (9017.0L / 3168.0L * k1[d] - 355.0L / 33.0L * k2[d] +
                           46732.0L / 5247.0L * k3[d] + 49.0L / 176.0L * k4[d] -
                           5103.0L / 18656.0L * k5[d]);
    k6 = rhs(y + hs, st);
    for (std::size_t d = 0; d < D; ++d)
      u5[d] = u[d] + hs * (35.0L / 384.0L * k1[d] + 500.0L / 1113.0L * k3[d] +
                           125.0L / 192.0L * k4[d] - 2187.0L / 6784.0L * k5[d] +
                           11.0L / 84.0L * k6[d]);
    k7 = rhs(y + hs, u5);
    for (std::size_t d = 0; d < D; ++d)
      err[d] = hs * (71.0L / 57600.0L * k1[d] - 71.0L / 16695.0L * k3[d] +
                     71.0L / 1920.0L * k4[d] - 17253.0L / 339200.0L * k5[d] +
                     22.0L / 525.0L * k6[d] - 1.0L / 40.0L * k7[d]);

    long double norm = 0.0L;
    for (std::size_t d = 0; d < D; ++d) {
      // Control relative to the running maximum magnitude: tolerating errors
      // proportional to the *current* value would let the exponentially small
      // entry region inject absolute noise that the left tail amplifies by
      // ~1e13, and a flat absolute floor has the same effect. The running
      // maximum tracks the solution scale monotonically, so this is ordinary
      // relative control wherever the solution is at its largest so far and a
      // scale-based absolute control across zero crossings.
      long double scale = std::max({fabsl(u[d]), fabsl(u5[d]), runmax[d]});
      long double sc = opts.rtol * scale + opts.atol * std::min(1.0L, runmax[d]);
      norm = std::max(norm, fabsl(err[d]) / (sc + 1e-300L));
    }

    bool ok = std::isfinite(static_cast<double>(norm)) && norm <= 1.0L;
    if (ok) {
      y += hs;
      if (std::abs(y - y_end) < 1e-12) y = y_end;
      u = u5;
      k1 = k7;  // first-same-as-last
      for (std::size_t d = 0; d < D; ++d) runmax[d] = std::max(runmax[d], fabsl(u[d]));
      on_accept(y, u, k1);
    }

    double fac = 0.2;
    if (std::isfinite(static_cast<double>(norm)))
      fac = std::clamp(norm > 0.0L ? 0.9 * std::pow(static_cast<double>(norm), -0.2) : 5.0,
                       0.2, 5.0);
    h = hs * fac;
    if (-h > kMaxStepMag) h = -kMaxStepMag;
  }
}

// ---------------------------------------------------------------------------
// Piecewise cubic Hermite interpolation on a strictly decreasing grid.

double hermite_val(double y, double y1, double f1, double d1, double y2, double f2,
                   double d2) {
  double h = y2 - y1;
  double t = (y - y1) / h;
  double t2 = t * t, t3 = t2 * t;
  return f1 * (2.0 * t3 - 3.0 * t2 + 1.0) + h * d1 * (t3 - 2.0 * t2 + t) +
         f2 * (3.0 * t2 - 2.0 * t3) + h * d2 * (t3 - t2);
}

// Integral_y^{y1} of the cubic on [y1 (upper), y2 (lower)].
double hermite_partial_integral(double y, double y1, double f1, double d1, double y2,
                                double f2, double d2) {
  double h = y2 - y1;
  double t = (y - y1) / h;
  double t2 = t * t, t3 = t2 * t, t4 = t2 * t2;
  double p = f1 * (t4 / 2.0 - t3 + t) + h * d1 * (t4 / 4.0 - 2.0 * t3 / 3.0 + t2 / 2.0) +
             f2 * (t3 - t4 / 2.0) + h * d2 * (t4 / 4.0 - t3 / 3.0);
  return -h * p;
}

std::size_t locate(const std::vector<SigmaNode>& nodes, double y) {
  if (y > nodes.front().y + 1e-9 || y < nodes.back().y - 1e-9)
    throw std::domain_error("query outside the solved range");
  std::size_t lo = 0, hi = nodes.size() - 1;
  while (hi - lo > 1) {
    std::size_t mid = (lo + hi) / 2;
    if (nodes[mid].y >= y)
      lo = mid;
    else
      hi = mid;
  }
  return lo;
}

// Derivative-corrected trapezoid (the exact integral of the piecewise cubic
// Hermite interpolant) accumulated from y_start down the node grid.
template <typename F, typename Fp>
std::vector<double> cumulative_integral(const std::vector<SigmaNode>& nodes, F f, Fp fp) {
  std::vector<double> c(nodes.size(), 0.0);
  for (std::size_t k = 0; k + 1 < nodes.size(); ++k) {
    double d = nodes[k].y - nodes[k + 1].y;
    c[k + 1] = c[k] + d * 0.5 * (f(nodes[k]) + f(nodes[k + 1])) +
               d * d / 12.0 * (fp(nodes[k + 1]) - fp(nodes[k]));
  }
  return c;
}

void validate_boundary(const BoundaryConfig& cfg) {
  if (!(cfg.y_start >= 4.0)) throw std::domain_error("y_start must be at least 4");
  if (cfg.tail_nodes < 8) throw std::domain_error("tail quadrature needs at least 8 nodes");
  if (!(cfg.tail_span > 0.0)) throw std::domain_error("tail span must be positive");
}

kernels::KernelSpec correction_spec(SigmaVariant variant, double alpha) {
  switch (variant) {
    case SigmaVariant::GUE:
      return kernels::KernelSpec::correction_gue();
    case SigmaVariant::LUE:
      return kernels::KernelSpec::correction_lue();
    default:
      return kernels::KernelSpec::correction_lue_alpha(alpha);
  }
}

const char* variant_label(SigmaVariant variant) {
  switch (variant) {
    case SigmaVariant::GUE:
      return "gue";
    case SigmaVariant::LUE:
      return "lue";
    default:
      return "lue-alpha";
  }
}

}  // namespace

// ---------------------------------------------------------------------------
// PainleveSolution accessors

double PainleveSolution::sigma0(double y) const {
  if (y > nodes.front().y) return xi * rho0_jet(y).v;
  std::size_t k = locate(nodes, y);
  return hermite_val(y, nodes[k].y, nodes[k].s0, nodes[k].s0p, nodes[k + 1].y,
                     nodes[k + 1].s0, nodes[k + 1].s0p);
}

double PainleveSolution::sigma0_p(double y) const {
  if (y > nodes.front().y) return xi * rho0_jet(y).d1;
  std::size_t k = locate(nodes, y);
  return hermite_val(y, nodes[k].y, nodes[k].s0p, nodes[k].s0pp, nodes[k + 1].y,
                     nodes[k + 1].s0p, nodes[k + 1].s0pp);
}

double PainleveSolution::sigma0_pp(double y) const {
  if (y > nodes.front().y) return xi * rho0_jet(y).d2;
  std::size_t k = locate(nodes, y);
  return hermite_val(y, nodes[k].y, nodes[k].s0pp, nodes[k].s0ppp, nodes[k + 1].y,
                     nodes[k + 1].s0pp, nodes[k + 1].s0ppp);
}

double PainleveSolution::sigma1(double y) const {
  if (!has_sigma1) throw std::logic_error("sigma1 stage has not been solved");
  if (y > nodes.front().y) return xi * rho1_jet(variant, alpha, y).v;
  if (y < sigma1_y_min - 1e-9)
    throw std::domain_error("query below the sigma1 solved range");
  std::size_t k = locate(nodes, y);
  return hermite_val(y, nodes[k].y, nodes[k].s1, nodes[k].s1p, nodes[k + 1].y,
                     nodes[k + 1].s1, nodes[k + 1].s1p);
}

double PainleveSolution::sigma1_p(double y) const {
  if (!has_sigma1) throw std::logic_error("sigma1 stage has not been solved");
  if (y > nodes.front().y) return xi * rho1_jet(variant, alpha, y).d1;
  if (y < sigma1_y_min - 1e-9)
    throw std::domain_error("query below the sigma1 solved range");
  std::size_t k = locate(nodes, y);
  return hermite_val(y, nodes[k].y, nodes[k].s1p, nodes[k].s1pp, nodes[k + 1].y,
                     nodes[k + 1].s1p, nodes[k + 1].s1pp);
}

double PainleveSolution::sigma0_tail_integral(double y) const {
  if (y >= nodes.front().y) return xi * rho0_tail_closed(y);
  std::size_t k = locate(nodes, y);
  double part = hermite_partial_integral(y, nodes[k].y, nodes[k].s0, nodes[k].s0p,
                                         nodes[k + 1].y, nodes[k + 1].s0, nodes[k + 1].s0p);
  return sigma0_tail + cum0[k] + part;
}

double PainleveSolution::sigma1_tail_integral(double y) const {
  if (!has_sigma1) throw std::logic_error("sigma1 stage has not been solved");
  if (y >= nodes.front().y) return xi * rho1_tail(variant, alpha, y, boundary);
  if (y < sigma1_y_min - 1e-9)
    throw std::domain_error("query below the sigma1 solved range");
  std::size_t k = locate(nodes, y);
  double part = hermite_partial_integral(y, nodes[k].y, nodes[k].s1, nodes[k].s1p,
                                         nodes[k + 1].y, nodes[k + 1].s1, nodes[k + 1].s1p);
  return sigma1_tail + cum1[k] + part;
}

// ---------------------------------------------------------------------------

PainleveSolution solve_sigma0(double xi, const BoundaryConfig& cfg, double y_min,
                              const OdeOptions& opts) {
  if (!(xi > 0.0 && xi <= 1.0)) throw std::domain_error("xi must lie in (0, 1]");
  validate_boundary(cfg);
  if (!(y_min < cfg.y_start)) throw std::domain_error("y_min must lie below y_start");

  PainleveSolution sol;
  sol.xi = xi;
  sol.boundary = cfg;

  Boundary0 b = sigma0_boundary(xi, cfg);
  auto rhs = [](double y, const LState<3>& u) -> LState<3> {
    return {u[1], u[2], 4.0L * y * u[1] - 6.0L * u[1] * u[1] - 2.0L * u[0]};
  };
  auto accept = [&](double y, const LState<3>& u, const LState<3>& du) {
    // Quadratic sigma-form residual, relative to its largest term: the
    // integrated equation must keep holding along the differentiated flow.
    long double r = u[2] * u[2] + 4.0L * u[1] * (u[1] * u[1] - y * u[1] + u[0]);
    long double scale =
        std::max({u[2] * u[2], fabsl(4.0L * u[1] * u[1] * u[1]),
                  fabsl(4.0L * y * u[1] * u[1]), fabsl(4.0L * u[0] * u[1])});
    double rel = static_cast<double>(fabsl(r) / (scale + 1e-300L));
    if (rel > opts.residual_limit)
      fail_at("sigma-form residual monitor tripped (integration divergence)", y);
    sol.max_residual0 = std::max(sol.max_residual0, rel);
    SigmaNode n;
    n.y = y;
    n.s0 = static_cast<double>(u[0]);
    n.s0p = static_cast<double>(u[1]);
    n.s0pp = static_cast<double>(u[2]);
    n.s0ppp = static_cast<double>(du[2]);
    n.res0 = rel;
    sol.nodes.push_back(n);
  };
  integrate_down<3>(cfg.y_start, y_min, {b.s, b.sp, b.spp}, opts,
                    "sigma0 integration stalled", rhs, accept);

  sol.sigma0_tail = xi * rho0_tail_closed(cfg.y_start);
  sol.cum0 = cumulative_integral(
      sol.nodes, [](const SigmaNode& n) { return n.s0; },
      [](const SigmaNode& n) { return n.s0p; });
  sol.cum1.assign(sol.nodes.size(), 0.0);
  sol.sigma1_y_min = cfg.y_start;
  return sol;
}

PainleveSolution solve_sigma1(SigmaVariant variant, const PainleveSolution& sigma0_sol,
                              double alpha, double y_min, const OdeOptions& opts) {
  if (sigma0_sol.nodes.size() < 2)
    throw std::domain_error("sigma0 must be solved before the sigma1 stage");
  if (variant == SigmaVariant::LUEAlpha) {
    if (!(alpha > 0.0))
      throw std::domain_error("alpha must be positive for the proportional variant");
  } else {
    alpha = 0.0;
  }
  double lo = sigma0_sol.y_min();
  if (!std::isfinite(y_min)) y_min = lo;
  if (y_min < lo - 1e-12)
    throw std::domain_error("sigma1 range exceeds the sigma0 solution");
  if (!(y_min < sigma0_sol.y_start()))
    throw std::domain_error("y_min must lie below y_start");
  y_min = std::max(y_min, lo);

  PainleveSolution sol = sigma0_sol;
  sol.variant = variant;
  sol.alpha = alpha;
  sol.sigma1_singular = false;
  sol.sigma1_singular_y = 0.0;
  double xi = sol.xi;

  double one_a = 1.0 + alpha;
  double sq = std::sqrt(one_a);
  bool is_alpha = variant == SigmaVariant::LUEAlpha;
  double pref = is_alpha ? std::cbrt(1.0 + 1.0 / sq) : 0.0;
  double lue_c = std::cbrt(2.0) * 2.0;  // 2^{4/3}

  struct Coef {
    double A, B, C, D;
  };
  auto coef_from = [&](double y, double s, double sp, double spp) -> Coef {
    Coef c;
    if (!is_alpha) {
      c.A = 2.0 * spp;
      c.B = 12.0 * sp * sp - 8.0 * y * sp + 4.0 * s;
      c.C = 4.0 * sp;
      if (variant == SigmaVariant::GUE) {
        double t = s - y * sp;
        c.D = t * t;  // = s^2 - 2 y s sp + y^2 sp^2
      } else {
        c.D = -lue_c * (2.0 * y * s * sp - 3.0 * y * y * sp * sp + 2.0 * s * sp * sp +
                        4.0 * y * sp * sp * sp + sp * spp + y * spp * spp);
      }
    } else {
      c.A = 2.0 * one_a * spp;
      c.B = 4.0 * one_a * (3.0 * sp * sp - 2.0 * y * sp + s);
      c.C = 4.0 * one_a * sp;
      double q = (-8.0 + 8.0 * sq - 7.0 * alpha + alpha * alpha + 9.0 * alpha * sq) / alpha;
      c.D = pref * (alpha * alpha * sq / ((1.0 + sq) * (1.0 + sq) * (1.0 + sq)) * s * s -
                    2.0 * (one_a + sq) * y * s * sp + q * y * y * sp * sp -
                    4.0 * one_a / (1.0 + sq) *
                        (2.0 * s * sp * sp + sp * spp + y * spp * spp +
                         4.0 * y * sp * sp * sp));
    }
    return c;
  };

  // The equation divides by A = 2(1+alpha) sigma0''; if that collapses (the
  // hallmark of the downward integration drifting onto a wrong sigma0 branch
  // at xi < 1) the divisor is floored and the curvature capped so the solve
  // survives to be flagged, rather than silently producing garbage.
  double sign_prev = sigma0_sol.nodes.front().s0pp >= 0.0 ? 1.0 : -1.0;
  auto guarded_spp = [&](double y, double s1v, double s1pv, const Coef& c) {
    // The floor is relative to the local coefficient scale: in the right tail
    // every coefficient is exponentially small together (their ratios stay
    // O(1), so the division is well conditioned) and an absolute floor would
    // wreck the equation there.
    double floor_mag = 1e-13 * (std::abs(c.B) + std::abs(c.C) + 1e-300);
    double A = c.A;
    if (std::abs(A) < floor_mag) {
      if (!sol.sigma1_singular) {
        sol.sigma1_singular = true;
        sol.sigma1_singular_y = y;
      }
      A = sign_prev * floor_mag;
    } else {
      sign_prev = A > 0.0 ? 1.0 : -1.0;
    }
    double v = (c.D - c.B * s1pv - c.C * s1v) / A;
    double cap = 1e6 * (1.0 + std::abs(s1v) + std::abs(s1pv));
    if (std::abs(v) > cap) {
      if (!sol.sigma1_singular) {
        sol.sigma1_singular = true;
        sol.sigma1_singular_y = y;
      }
      v = std::copysign(cap, v);
    }
    return v;
  };

  auto rhs = [&](double y, const LState<2>& v) -> LState<2> {
    Coef c = coef_from(y, sol.sigma0(y), sol.sigma0_p(y), sol.sigma0_pp(y));
    return {v[1], guarded_spp(y, static_cast<double>(v[0]), static_cast<double>(v[1]), c)};
  };

  struct TrajNode {
    double y, v0, v1, v2;
  };
  std::vector<TrajNode> traj;
  Boundary1 b = sigma1_boundary(variant, alpha, xi, sol.boundary);
  auto accept = [&](double y, const LState<2>& v, const LState<2>& dv) {
    traj.push_back({y, static_cast<double>(v[0]), static_cast<double>(v[1]),
                    static_cast<double>(dv[1])});
  };
  integrate_down<2>(sol.y_start(), y_min, {b.s, b.sp}, opts,
                    "sigma1 integration stalled", rhs, accept);

  sol.has_sigma1 = true;
  sol.sigma1_y_min = y_min;

  // Transfer the sigma1 trajectory onto the sigma0 node grid. Values and
  // slopes interpolate from the trajectory; the curvature at a node then
  // follows from the equation itself evaluated with exact node data.
  auto traj_locate = [&](double y) {
    std::size_t lo2 = 0, hi2 = traj.size() - 1;
    while (hi2 - lo2 > 1) {
      std::size_t mid = (lo2 + hi2) / 2;
      if (traj[mid].y >= y)
        lo2 = mid;
      else
        hi2 = mid;
    }
    return lo2;
  };
  for (SigmaNode& n : sol.nodes) {
    if (n.y < y_min - 1e-12) break;
    double yq = std::min(n.y, traj.front().y);
    yq = std::max(yq, traj.back().y);
    std::size_t k = traj_locate(yq);
    const TrajNode& t1 = traj[k];
    const TrajNode& t2 = traj[k + 1];
    n.s1 = hermite_val(yq, t1.y, t1.v0, t1.v1, t2.y, t2.v0, t2.v1);
    n.s1p = hermite_val(yq, t1.y, t1.v1, t1.v2, t2.y, t2.v1, t2.v2);
    Coef c = coef_from(n.y, n.s0, n.s0p, n.s0pp);
    n.s1pp = guarded_spp(n.y, n.s1, n.s1p, c);
  }

  sol.sigma1_tail = xi * rho1_tail(variant, alpha, sol.y_start(), sol.boundary);
  sol.cum1 = cumulative_integral(
      sol.nodes, [](const SigmaNode& n) { return n.s1; },
      [](const SigmaNode& n) { return n.s1p; });
  return sol;
}

fredholm::DistributionCurve assemble_pdf(const PainleveSolution& sol,
                                         const std::vector<double>& ts) {
  if (sol.nodes.size() < 2) throw std::domain_error("unsolved Painleve solution");
  if (ts.empty()) throw std::domain_error("empty evaluation grid");
  double lo = sol.has_sigma1 ? std::max(sol.y_min(), sol.sigma1_y_min) : sol.y_min();
  for (double t : ts)
    if (t < lo - 1e-9) throw std::domain_error("solution does not cover the grid");

  fredholm::DistributionCurve curve;
  curve.meta.family = sol.has_sigma1 ? "correction" : "limit";
  curve.meta.variant = sol.has_sigma1 ? variant_label(sol.variant) : "airy";
  curve.meta.route = "ode";
  curve.meta.xi = sol.xi;
  curve.meta.alpha = sol.variant == SigmaVariant::LUEAlpha ? sol.alpha : 0.0;
  curve.meta.order = sol.boundary.tail_nodes;
  curve.meta.h = 0.0;
  curve.meta.tail = sol.boundary.tail_span;
  curve.meta.y_start = sol.boundary.y_start;
  curve.meta.notes = sol.has_sigma1
                         ? "sigma1 tail beyond y_start uses the boundary asymptote"
                         : "";
  if (sol.sigma1_singular) {
    char buf[96];
    std::snprintf(buf, sizeof buf, "; sigma1 coefficient 2*sigma0'' collapsed near y=%.4f",
                  sol.sigma1_singular_y);
    curve.meta.notes += buf;
  }

  curve.ts = ts;
  curve.F.resize(ts.size());
  curve.p0.resize(ts.size());
  if (sol.has_sigma1) curve.p1.resize(ts.size());
  for (std::size_t i = 0; i < ts.size(); ++i) {
    double t = ts[i];
    double E = std::exp(-sol.sigma0_tail_integral(t));
    curve.F[i] = E;
    curve.p0[i] = sol.sigma0(t) * E;
    if (sol.has_sigma1)
      curve.p1[i] = (sol.sigma1(t) - sol.sigma0(t) * sol.sigma1_tail_integral(t)) * E;
  }
  return curve;
}

fredholm::DistributionCurve ode_curve(SigmaVariant variant, double alpha, double xi,
                                      const std::vector<double>& ts,
                                      const OdeCurveOptions& opts) {
  if (ts.empty()) throw std::domain_error("empty evaluation grid");
  if (xi == 0.0) {
    // Deterministically empty point process: F = 1, densities vanish.
    fredholm::DistributionCurve curve;
    curve.meta.family = opts.limit_only ? "limit" : "correction";
    curve.meta.variant = opts.limit_only ? "airy" : variant_label(variant);
    curve.meta.route = "ode";
    curve.meta.xi = 0.0;
    curve.meta.alpha = variant == SigmaVariant::LUEAlpha ? alpha : 0.0;
    curve.meta.y_start = opts.boundary.y_start;
    curve.meta.notes = "xi=0: curve is exact";
    curve.ts = ts;
    curve.F.assign(ts.size(), 1.0);
    curve.p0.assign(ts.size(), 0.0);
    if (!opts.limit_only) curve.p1.assign(ts.size(), 0.0);
    curve.untrusted.assign(ts.size(), 0);
    return curve;
  }

  double y_min =
      std::min(*std::min_element(ts.begin(), ts.end()), opts.boundary.y_start - 2.0);

  PainleveSolution sol = solve_sigma0(xi, opts.boundary, y_min, opts.ode);
  if (!opts.limit_only)
    sol = solve_sigma1(variant, sol, alpha,
                       std::numeric_limits<double>::infinity(), opts.ode);
  fredholm::DistributionCurve curve = assemble_pdf(sol, ts);

  // Verify against the operator route at five checkpoints spread over the
  // requested window; the downward integration is known to drift onto wrong
  // solution branches for thinned (xi < 1) laws.
  std::vector<double> sorted_ts(ts);
  std::sort(sorted_ts.begin(), sorted_ts.end());
  std::vector<double> cts;
  for (int j = 0; j < 5; ++j) {
    double t = sorted_ts[(sorted_ts.size() - 1) * static_cast<std::size_t>(j) / 4];
    if (cts.empty() || t > cts.back() + 1e-12) cts.push_back(t);
  }
  fredholm::CurveOptions copts;
  copts.order = opts.operator_order;
  copts.threads = opts.threads;
  fredholm::DistributionCurve op =
      opts.limit_only
          ? fredholm::limit_curve(xi, cts, copts)
          : fredholm::correction_curve(correction_spec(variant, alpha), xi, cts, copts);
  fredholm::DistributionCurve ode_at = assemble_pdf(sol, cts);

  double fail_y = -std::numeric_limits<double>::infinity();
  for (std::size_t j = 0; j < cts.size(); ++j) {
    double mismatch = std::max(std::abs(op.F[j] - ode_at.F[j]),
                               std::abs(op.p0[j] - ode_at.p0[j]));
    if (!opts.limit_only)
      mismatch = std::max(mismatch, std::abs(op.p1[j] - ode_at.p1[j]));
    if (!(mismatch <= opts.checkpoint_tol)) fail_y = std::max(fail_y, cts[j]);
  }
  curve.untrusted.assign(ts.size(), 0);
  if (std::isfinite(fail_y)) {
    for (std::size_t i = 0; i < ts.size(); ++i)
      if (ts[i] <= fail_y + 1e-12) curve.untrusted[i] = 1;
    char buf[96];
    std::snprintf(buf, sizeof buf,
                  "; operator-route checkpoint mismatch: untrusted at and below y=%.4f",
                  fail_y);
    curve.meta.notes += buf;
  }
  return curve;
}

// ---------------------------------------------------------------------------

std::vector<double> density_residual(DensityOde ode, const std::vector<double>& rho,
                                     double x0, double h, const DensityOdeParams& params) {
  if (rho.size() < 7)
    throw std::domain_error("density grid too small: need at least 7 points");
  if (!(h > 0.0) || !std::isfinite(x0)) throw std::domain_error("bad density grid");
  switch (ode) {
    case DensityOde::GUEFinite:
      if (params.N < 1) throw std::domain_error("N must be at least 1");
      break;
    case DensityOde::LUEFinite:
      if (params.N < 1 || params.a < 0.0)
        throw std::domain_error("need N >= 1 and a >= 0");
      break;
    case DensityOde::AlphaLimit:
      if (!(params.alpha > 0.0)) throw std::domain_error("alpha must be positive");
      break;
  }

  std::size_t n = rho.size();
  std::vector<double> res(n - 6), lead(n - 6);
  double sq = std::sqrt(1.0 + params.alpha);
  double pref = std::cbrt((1.0 / sq + 1.0) * (1.0 / sq + 1.0)) * (1.0 + params.alpha);
  for (std::size_t i = 3; i + 3 < n; ++i) {
    double d1 = (-rho[i + 2] + 8.0 * rho[i + 1] - 8.0 * rho[i - 1] + rho[i - 2]) / (12.0 * h);
    double d2 = (-rho[i + 2] + 16.0 * rho[i + 1] - 30.0 * rho[i] + 16.0 * rho[i - 1] -
                 rho[i - 2]) /
                (12.0 * h * h);
    double d3 = (-rho[i + 3] + 8.0 * rho[i + 2] - 13.0 * rho[i + 1] + 13.0 * rho[i - 1] -
                 8.0 * rho[i - 2] + rho[i - 3]) /
                (8.0 * h * h * h);
    double x = x0 + static_cast<double>(i) * h;
    double r = 0.0, l = 0.0;
    switch (ode) {
      case DensityOde::GUEFinite:
        r = d3 - 4.0 * x * (x * d1 - rho[i]) + 8.0 * params.N * d1;
        l = std::abs(d3);
        break;
      case DensityOde::LUEFinite: {
        double na = 2.0 * params.N + params.a;
        r = x * x * x * d3 + 4.0 * x * x * d2 -
            x * (x * x - 2.0 * na * x + params.a * params.a - 2.0) * d1 +
            (na * x - params.a * params.a) * rho[i];
        l = std::abs(x * x * x * d3);
        break;
      }
      case DensityOde::AlphaLimit: {
        AiryPair ap = airy(x);
        double A = ap.ai, P = ap.ai_prime;
        double rhs = 6.0 * sq * x * P * P + 8.0 * sq * A * P -
                     (2.0 + params.alpha) * x * P * P;
        r = pref * (d3 - 4.0 * x * d1 + 2.0 * rho[i]) - rhs;
        l = std::abs(pref * d3);
        break;
      }
    }
    res[i - 3] = r;
    lead[i - 3] = l;
  }
  double scale = *std::max_element(lead.begin(), lead.end()) + 1e-300;
  for (double& r : res) r /= scale;
  return res;
}

}  // namespace softedge::painleve
