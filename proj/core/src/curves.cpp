#include "softedge/curves.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "softedge/threads.hpp"

namespace softedge::fredholm {
namespace {

using kernels::KernelKind;
using kernels::KernelSpec;

// Effective tail argument so that upper = max(t, 0) + opts.tail.
inline double tail_for(double t, const CurveOptions& o) {
  return std::fmax(t, 0.0) + o.tail - t;
}

DetResult det_at(const KernelSpec& spec, double xi, double t,
                 const CurveOptions& o) {
  return fredholm_det(spec, xi, t, build_rule(t, o.order, tail_for(t, o)));
}

double omega_at(const KernelSpec& limit, const KernelSpec& corr, double xi,
                double t, const CurveOptions& o) {
  return omega(limit, corr, xi, t, build_rule(t, o.order, tail_for(t, o)));
}

std::string variant_name(const KernelSpec& s) {
  switch (s.kind) {
    case KernelKind::AiryLimit:
      return "airy";
    case KernelKind::CorrectionGUE:
    case KernelKind::FiniteGUE:
      return "gue";
    case KernelKind::CorrectionLUE:
      return "lue";
    case KernelKind::CorrectionLUEAlpha:
      return "lue-alpha";
    case KernelKind::FiniteLUE:
      return s.proportional ? "lue-alpha" : "lue";
  }
  return "?";
}

void fill_meta(CurveMeta& m, const KernelSpec& s, double xi,
               const CurveOptions& o) {
  m.variant = variant_name(s);
  m.xi = xi;
  m.alpha = s.alpha;
  m.N = s.N;
  m.a = s.proportional ? s.alpha * s.N : s.a;
  m.order = o.order;
  m.h = o.h;
  m.tail = o.tail;
}

}  // namespace

DistributionCurve limit_curve(double xi, const std::vector<double>& ts,
                              const CurveOptions& opts) {
  const KernelSpec spec = KernelSpec::airy();
  DistributionCurve c;
  c.meta.family = "limit";
  c.meta.route = "operator";
  fill_meta(c.meta, spec, xi, opts);
  c.ts = ts;
  const int n = static_cast<int>(ts.size());
  c.F.resize(n);
  c.p0.resize(n);
  std::vector<std::uint8_t> uf(n, 0);
  parallel_for(n, opts.threads, [&](int i) {
    const double t = ts[i];
    const DetResult f = det_at(spec, xi, t, opts);
    const DetResult fp = det_at(spec, xi, t + opts.h, opts);
    const DetResult fm = det_at(spec, xi, t - opts.h, opts);
    c.F[i] = f.value;
    c.p0[i] = (fp.value - fm.value) / (2.0 * opts.h);
    uf[i] = f.underflow || fp.underflow || fm.underflow;
  });
  for (int i = 0; i < n; ++i) c.meta.underflow |= (uf[i] != 0);
  return c;
}

DistributionCurve correction_curve(const kernels::KernelSpec& correction,
                                   double xi, const std::vector<double>& ts,
                                   const CurveOptions& opts) {
  if (!correction.correction())
    throw std::domain_error("correction_curve: spec is not a correction kernel");
  const KernelSpec limit = KernelSpec::airy();
  DistributionCurve c = limit_curve(xi, ts, opts);
  c.meta.family = "correction";
  fill_meta(c.meta, correction, xi, opts);
  const int n = static_cast<int>(ts.size());
  c.p1.resize(n);
  parallel_for(n, opts.threads, [&](int i) {
    const double t = ts[i];
    const double op = omega_at(limit, correction, xi, t + opts.h, opts);
    const double om = omega_at(limit, correction, xi, t - opts.h, opts);
    c.p1[i] = (op - om) / (2.0 * opts.h);
  });
  return c;
}

DistributionCurve finite_curve(const kernels::KernelSpec& finite, double xi,
                               const std::vector<double>& ts,
                               const CurveOptions& opts) {
  if (!finite.finite())
    throw std::domain_error("finite_curve: spec is not a finite kernel");
  DistributionCurve c;
  c.meta.family = "finite";
  c.meta.route = "finite-N";
  fill_meta(c.meta, finite, xi, opts);
  // Keep every determinant (including the t +- h stencil points) inside the
  // Laguerre half line: s(t) > 0.
  c.ts = ts;
  if (finite.kind == KernelKind::FiniteLUE) {
    const kernels::EdgeScaling sc = kernels::canonical_scaling(finite);
    const double t_min = -sc.s(0.0) / sc.jacobian();
    std::vector<double> kept;
    for (double t : ts)
      if (t - opts.h > t_min) kept.push_back(t);
    c.meta.clipped_points = static_cast<int>(ts.size() - kept.size());
    if (c.meta.clipped_points > 0)
      c.meta.notes = "grid clipped to keep the scaled argument on the half line";
    c.ts = std::move(kept);
  }
  const int n = static_cast<int>(c.ts.size());
  c.F.resize(n);
  c.p0.resize(n);
  std::vector<std::uint8_t> uf(n, 0);
  parallel_for(n, opts.threads, [&](int i) {
    const double t = c.ts[i];
    const DetResult f = det_at(finite, xi, t, opts);
    const DetResult fp = det_at(finite, xi, t + opts.h, opts);
    const DetResult fm = det_at(finite, xi, t - opts.h, opts);
    c.F[i] = f.value;
    c.p0[i] = (fp.value - fm.value) / (2.0 * opts.h);
    uf[i] = f.underflow || fp.underflow || fm.underflow;
  });
  for (int i = 0; i < n; ++i) c.meta.underflow |= (uf[i] != 0);
  return c;
}

DistributionCurve scaled_difference(const kernels::KernelSpec& finite, double xi,
                                    const std::vector<double>& ts,
                                    const CurveOptions& opts) {
  DistributionCurve c = finite_curve(finite, xi, ts, opts);
  const DistributionCurve lim = limit_curve(xi, c.ts, opts);
  c.meta.family = "scaled-difference";
  c.meta.notes = "p1 column holds N^(2/3) * (pN - p0_limit)" +
                 (c.meta.notes.empty() ? "" : "; " + c.meta.notes);
  const double scale = std::pow(static_cast<double>(finite.N), 2.0 / 3.0);
  const int n = static_cast<int>(c.ts.size());
  c.p1.resize(n);
  for (int i = 0; i < n; ++i) c.p1[i] = scale * (c.p0[i] - lim.p0[i]);
  return c;
}

}  // namespace softedge::fredholm
