#pragma once
// ODE route to the soft-edge laws: integrate the Painleve II sigma-form from
// asymptotic boundary data at large y down to the evaluation window, then a
// linear second-order equation for the finite-size correction term, and
// assemble the density p0 and correction p1 from tail integrals.
//
// sigma0 solves the nonlinear sigma-form ODE shared by all ensembles here;
// sigma1 solves a linear ODE whose coefficients are built from the sigma0
// trajectory and whose source term depends on the ensemble.

#include <cstddef>
#include <limits>
#include <vector>

#include "softedge/curves.hpp"

namespace softedge::painleve {

enum class BoundaryOrder { Leading, Extended };

// Where and how the downward integration is matched to the large-y
// asymptotics sigma0 ~ xi*rho0 - xi^2*Integral[K(y,x)^2] (and the analogue
// with the correction kernel L for sigma1).
struct BoundaryConfig {
  double y_start = 8.0;                            // matching point, >= 4
  BoundaryOrder order = BoundaryOrder::Extended;   // keep the xi^2 tail term?
  int tail_nodes = 64;      // Gauss-Legendre nodes for the tail integrals
  double tail_span = 12.0;  // integrals taken over [y, y + tail_span]
};

struct OdeOptions {
  // Downward integration of this problem amplifies local errors injected at
  // y by roughly exp((2 sqrt 2/3)(|y_min|^{3/2})) relative to the solution
  // scale by the time the left end is reached -- about 1e13 at y_min = -10.
  // The integration state is therefore carried in extended precision and the
  // tolerance set so the accumulated error stays below the solution there:
  // rtol 1e-10 diverges near y ~ -8.9, 1e-12 near y ~ -9.8; 1e-14 clears
  // y = -10 with margin. Error control is relative to each component's
  // running maximum magnitude (not its current value), which keeps the
  // exponentially small entry region resolved against itself and rides
  // through zero crossings of the correction stage.
  double rtol = 1e-14;
  // Plain absolute floor, additionally scaled down by the running magnitude
  // when the solution is small; with the defaults it never dominates.
  double atol = 1e-16;
  double h_init = 0.05;
  double h_min = 1e-9;
  // Hard limit for the quadratic sigma-form residual monitor; beyond this the
  // integration is declared divergent.
  double residual_limit = 1e-6;
};

enum class SigmaVariant { GUE, LUE, LUEAlpha };

// One accepted integration node. The jets stored alongside the values make
// piecewise cubic Hermite interpolation and derivative-corrected trapezoid
// integration available on the native solver grid.
struct SigmaNode {
  double y = 0;
  double s0 = 0, s0p = 0, s0pp = 0, s0ppp = 0;  // sigma0, ', '', '''
  double res0 = 0;       // relative sigma-form residual at this node
  double s1 = 0, s1p = 0, s1pp = 0;  // sigma1 jet (filled by solve_sigma1)
};

struct PainleveSolution {
  double xi = 1.0;
  SigmaVariant variant = SigmaVariant::GUE;
  double alpha = 0.0;  // only meaningful for SigmaVariant::LUEAlpha
  BoundaryConfig boundary;

  std::vector<SigmaNode> nodes;  // strictly decreasing y; front() is y_start
  double max_residual0 = 0.0;    // sup of res0 along the trajectory

  bool has_sigma1 = false;
  // The sigma1 equation divides by 2*sigma0''; if that coefficient collapses
  // the solve continues with a floored divisor but is flagged here.
  bool sigma1_singular = false;
  double sigma1_singular_y = 0.0;

  // Analytic asymptotic tails Integral_{y_start}^inf of sigma0 / sigma1.
  double sigma0_tail = 0.0;
  double sigma1_tail = 0.0;

  // Cumulative derivative-corrected trapezoid integrals from y_start down to
  // each node: cum0[k] = Integral_{nodes[k].y}^{y_start} sigma0; same for cum1.
  std::vector<double> cum0, cum1;
  double sigma1_y_min = 0.0;  // lowest y the sigma1 stage covered

  double y_start() const { return nodes.front().y; }
  double y_min() const { return nodes.back().y; }

  // Cubic Hermite interpolation on the solver grid; above y_start the
  // boundary asymptote is used. Arguments must be >= y_min().
  double sigma0(double y) const;
  double sigma0_p(double y) const;
  double sigma0_pp(double y) const;
  double sigma1(double y) const;
  double sigma1_p(double y) const;

  // Integral_y^inf sigma0 (resp. sigma1): derivative-corrected trapezoid on
  // the solver grid plus the analytic tail beyond y_start.
  double sigma0_tail_integral(double y) const;
  double sigma1_tail_integral(double y) const;
};

// Integrate the third-order explicit form of the sigma-form ODE downward from
// cfg.y_start to y_min, with boundary data from the large-y asymptotics.
// Throws std::domain_error on bad arguments and std::runtime_error (naming
// the y where it happened) if the residual monitor or step control fails.
PainleveSolution solve_sigma0(double xi, const BoundaryConfig& cfg = {},
                              double y_min = -10.0, const OdeOptions& opts = {});

// Solve the linear correction equation on top of an existing sigma0 solution,
// returning a copy with the sigma1 fields filled. alpha is required for
// SigmaVariant::LUEAlpha and ignored otherwise. y_min defaults to the sigma0
// range; it may not extend below it.
PainleveSolution solve_sigma1(SigmaVariant variant, const PainleveSolution& sigma0_sol,
                              double alpha = 0.0,
                              double y_min = std::numeric_limits<double>::infinity(),
                              const OdeOptions& opts = {});

// Assemble F, p0 (and p1 when present) on t_grid from a solution:
//   p0 = sigma0 * exp(-Int_y^inf sigma0)
//   p1 = (sigma1 - sigma0 * Int_y^inf sigma1) * exp(-Int_y^inf sigma0)
// Every t must lie within [y_min(), y_start()] up to the asymptote region.
fredholm::DistributionCurve assemble_pdf(const PainleveSolution& sol,
                                         const std::vector<double>& ts);

// Full ODE-route curve: solves sigma0 (and sigma1 unless limit_only), then
// verifies the result against the operator route at five checkpoints spread
// over the grid. A checkpoint mismatch above checkpoint_tol marks every grid
// point at or below the first failing checkpoint as untrusted (the classic
// wrong-solution tracking of the downward integration at xi < 1); the values
// themselves are still the ODE-route values.
struct OdeCurveOptions {
  BoundaryConfig boundary{};
  OdeOptions ode{};
  bool limit_only = false;       // skip sigma1 / p1
  double checkpoint_tol = 1e-2;  // operator-route mismatch threshold
  int operator_order = 96;       // quadrature order for the checkpoint curves
  int threads = 1;
};
fredholm::DistributionCurve ode_curve(SigmaVariant variant, double alpha, double xi,
                                      const std::vector<double>& ts,
                                      const OdeCurveOptions& opts = {});

// Finite-N / limiting density validators: residuals of the linear ODEs the
// densities satisfy, from 4th-order central finite differences on a uniform
// grid rho[i] = rho(x0 + i*h), n >= 7. The returned vector holds the
// residual at the interior points i = 3 .. n-4, normalised by the largest
// magnitude of the leading (third-derivative) term over those points.
enum class DensityOde {
  GUEFinite,   // raw-variable GUE density, needs N
  LUEFinite,   // raw-variable LUE density, needs N and a
  AlphaLimit,  // limiting correction density at the soft edge, needs alpha;
               // the source side is evaluated analytically from Airy values
};
struct DensityOdeParams {
  int N = 0;
  double a = 0.0;
  double alpha = 0.0;
};
std::vector<double> density_residual(DensityOde ode, const std::vector<double>& rho,
                                     double x0, double h, const DensityOdeParams& params);

}  // namespace softedge::painleve
