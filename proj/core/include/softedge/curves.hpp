#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "softedge/kernels.hpp"
#include "softedge/nystrom.hpp"

namespace softedge::fredholm {

struct CurveOptions {
  int order = 96;     // quadrature nodes
  double h = 1e-3;    // central-difference step for p0/p1
  double tail = 16.0; // truncation: upper = max(t,0) + tail
  int threads = 1;
};

struct CurveMeta {
  std::string family;   // "limit" | "correction" | "finite" | "scaled-difference"
  std::string variant;  // "airy" | "gue" | "lue" | "lue-alpha"
  std::string route;    // "operator" | "ode" | "finite-N"
  double xi = 1.0;
  double alpha = 0.0;
  int N = 0;
  double a = 0.0;
  int order = 96;
  double h = 1e-3;
  double tail = 16.0;
  double y_start = 0.0;     // ODE route only
  int clipped_points = 0;   // grid points dropped to keep the LUE window valid
  bool underflow = false;   // any determinant underflowed to zero
  std::string notes;
};

struct DistributionCurve {
  CurveMeta meta;
  std::vector<double> ts;
  std::vector<double> F;
  std::vector<double> p0;
  std::vector<double> p1;                // empty when not computed
  std::vector<std::uint8_t> untrusted;   // per-point flags (ODE route); empty otherwise
};

// F and p0 of the thinned limit law det(I - xi K_Airy) on (t, infinity).
DistributionCurve limit_curve(double xi, const std::vector<double>& ts,
                              const CurveOptions& opts = {});

// Limit law plus first-order correction: F, p0, and p1 as the central
// difference of the correction functional. `correction` selects the
// correction kernel (GUE / LUE / LUE-alpha).
DistributionCurve correction_curve(const kernels::KernelSpec& correction,
                                   double xi, const std::vector<double>& ts,
                                   const CurveOptions& opts = {});

// Finite-N law under the ensemble's canonical edge scaling. For the Laguerre
// ensemble the grid is clipped (and the clip recorded) so every determinant
// stays inside the half-line window.
DistributionCurve finite_curve(const kernels::KernelSpec& finite, double xi,
                               const std::vector<double>& ts,
                               const CurveOptions& opts = {});

// Same grid and finite-N law, with p1 = N^{2/3} (p_N - p0_limit): the dot
// series that converges to the correction density as N grows.
DistributionCurve scaled_difference(const kernels::KernelSpec& finite, double xi,
                                    const std::vector<double>& ts,
                                    const CurveOptions& opts = {});

}  // namespace softedge::fredholm
