#include "softedge/verify.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <sstream>
#include <stdexcept>

#include "softedge/curves.hpp"
#include "softedge/histogram.hpp"
#include "softedge/kernels.hpp"
#include "softedge/lpp.hpp"
#include "softedge/painleve.hpp"
#include "softedge/samplers.hpp"
#include "softedge/threads.hpp"

namespace softedge::verify {

namespace {

using kernels::KernelSpec;

std::string fmt(double x) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.4g", x);
  return buf;
}

std::vector<double> make_grid(double lo, double hi, double step) {
  std::vector<double> ts;
  for (double t = lo; t <= hi + 1e-9; t += step) ts.push_back(t);
  return ts;
}

double simpson(const std::vector<double>& f, double h) {
  double s = f.front() + f.back();
  for (std::size_t i = 1; i + 1 < f.size(); ++i)
    s += f[i] * (i % 2 == 1 ? 4.0 : 2.0);
  return s * h / 3.0;
}

bool all_trusted(const fredholm::DistributionCurve& c) {
  for (auto u : c.untrusted)
    if (u) return false;
  return true;
}

// Criterion 1: the ODE and operator routes produce the same correction
// density to 5e-3 across all kernel variants at full retention.
CriterionResult c_route_equivalence(int threads) {
  CriterionResult r;
  const auto ts = make_grid(-6.0, 2.0, 0.1);
  struct Row {
    const char* label;
    KernelSpec spec;
    painleve::SigmaVariant variant;
    double alpha;
  };
  const Row rows[] = {
      {"gue", KernelSpec::correction_gue(), painleve::SigmaVariant::GUE, 0.0},
      {"lue", KernelSpec::correction_lue(), painleve::SigmaVariant::LUE, 0.0},
      {"lue-alpha(0.5)", KernelSpec::correction_lue_alpha(0.5),
       painleve::SigmaVariant::LUEAlpha, 0.5},
      {"lue-alpha(5)", KernelSpec::correction_lue_alpha(5.0),
       painleve::SigmaVariant::LUEAlpha, 5.0},
  };
  fredholm::CurveOptions copts;
  copts.threads = threads;
  painleve::OdeCurveOptions oopts;
  oopts.threads = threads;
  std::ostringstream d;
  r.pass = true;
  for (const Row& row : rows) {
    const auto op = fredholm::correction_curve(row.spec, 1.0, ts, copts);
    const auto ode =
        painleve::ode_curve(row.variant, row.alpha, 1.0, ts, oopts);
    double sup = 0.0;
    for (std::size_t i = 0; i < ts.size(); ++i)
      sup = std::max(sup, std::abs(op.p1[i] - ode.p1[i]));
    if (sup > 5e-3 || !all_trusted(ode)) r.pass = false;
    d << row.label << " sup=" << fmt(sup) << " ";
  }
  d << "(tol 5e-3)";
  r.detail = d.str();
  return r;
}

// Criterion 2: the scaled finite-size difference converges to the
// correction density: its sup distance decreases strictly along
// N = 50, 100, 200, 400.
CriterionResult c_finite_size_convergence(int threads) {
  CriterionResult r;
  const auto ts = make_grid(-6.0, 2.0, 0.1);
  fredholm::CurveOptions copts;
  copts.threads = threads;
  std::ostringstream d;
  r.pass = true;
  for (double xi : {0.6, 1.0}) {
    const auto corr =
        fredholm::correction_curve(KernelSpec::correction_gue(), xi, ts, copts);
    d << "xi=" << fmt(xi) << ":";
    double prev = 0.0;
    bool first = true;
    for (int N : {50, 100, 200, 400}) {
      const auto sd =
          fredholm::scaled_difference(KernelSpec::finite_gue(N), xi, ts, copts);
      double sup = 0.0;
      for (std::size_t i = 0; i < ts.size(); ++i)
        sup = std::max(sup, std::abs(sd.p1[i] - corr.p1[i]));
      if (!first && sup >= prev) r.pass = false;
      first = false;
      prev = sup;
      d << " D(" << N << ")=" << fmt(sup);
    }
    d << "; ";
  }
  r.detail = d.str();
  return r;
}

// Criterion 3: the proportional-parameter correction kernel degenerates to
// the fixed-parameter Laguerre one as the parameter vanishes.
CriterionResult c_alpha_limit(int) {
  CriterionResult r;
  double sup = 0.0;
  for (int i = 0; i <= 20; ++i) {
    const double x = -4.0 + 0.4 * i;
    for (int j = 0; j <= 20; ++j) {
      const double y = -4.0 + 0.4 * j;
      const double la = kernels::correction_kernel_alpha(1e-8, x, y);
      const double lf =
          kernels::correction_kernel(kernels::CorrectionVariant::LUE, x, y);
      sup = std::max(sup, std::abs(la - lf));
    }
  }
  r.pass = sup <= 1e-5;
  r.detail = "sup|L_alpha(1e-8) - L_lue| = " + fmt(sup) + " on 21x21 [-4,4]^2 (tol 1e-5)";
  return r;
}

// Criterion 4: kernel diagonals satisfy their characterizing ODEs.
CriterionResult c_density_ode(int) {
  CriterionResult r;
  std::ostringstream d;
  r.pass = true;

  for (double alpha : {0.5, 5.0}) {
    const auto spec = KernelSpec::correction_lue_alpha(alpha);
    const double x0 = -4.0, h = 0.01;
    const int n = 801;
    std::vector<double> rho(n);
    for (int i = 0; i < n; ++i)
      rho[i] = kernels::density_correction(spec, x0 + i * h).rho1;
    painleve::DensityOdeParams p;
    p.alpha = alpha;
    const auto res =
        painleve::density_residual(painleve::DensityOde::AlphaLimit, rho, x0, h, p);
    const double m = *std::max_element(res.begin(), res.end());
    if (m > 1e-6) r.pass = false;
    d << "alpha=" << fmt(alpha) << " res=" << fmt(m) << " ";
  }

  {
    const auto spec = KernelSpec::finite_gue(10);
    const double x0 = -3.0, h = 0.01;
    const int n = 601;
    std::vector<double> rho(n);
    for (int i = 0; i < n; ++i)
      rho[i] = kernels::finite_kernel_raw_diag(spec, x0 + i * h);
    painleve::DensityOdeParams p;
    p.N = 10;
    const auto res =
        painleve::density_residual(painleve::DensityOde::GUEFinite, rho, x0, h, p);
    const double m = *std::max_element(res.begin(), res.end());
    if (m > 1e-5) r.pass = false;
    d << "gue(N=10) res=" << fmt(m) << " ";
  }

  {
    const auto spec = KernelSpec::finite_lue(10, 1.0);
    const double x0 = 0.2, h = 0.01;
    const int n = 1201;
    std::vector<double> rho(n);
    for (int i = 0; i < n; ++i)
      rho[i] = kernels::finite_kernel_raw_diag(spec, x0 + i * h);
    painleve::DensityOdeParams p;
    p.N = 10;
    p.a = 1.0;
    const auto res =
        painleve::density_residual(painleve::DensityOde::LUEFinite, rho, x0, h, p);
    const double m = *std::max_element(res.begin(), res.end());
    if (m > 1e-5) r.pass = false;
    d << "lue(N=10,a=1) res=" << fmt(m);
  }

  r.detail = d.str() + " (tols 1e-6/1e-5/1e-5)";
  return r;
}

// Criterion 5: halving the quadrature order moves the determinant by less
// than 1e-9 (spectral convergence of the Nystrom discretization).
CriterionResult c_quadrature_convergence(int threads) {
  CriterionResult r;
  fredholm::CurveOptions hi, lo;
  hi.order = 96;
  lo.order = 48;
  hi.threads = lo.threads = threads;
  double sup = 0.0;
  for (double xi : {0.3, 1.0}) {
    for (double t : {-8.0, -4.0, 0.0, 4.0}) {
      const std::vector<double> ts{t};
      const double f96 = fredholm::limit_curve(xi, ts, hi).F[0];
      const double f48 = fredholm::limit_curve(xi, ts, lo).F[0];
      sup = std::max(sup, std::abs(f96 - f48));
    }
  }
  r.pass = sup <= 1e-9;
  r.detail = "max|F_96 - F_48| = " + fmt(sup) +
             " over t in {-8,-4,0,4}, xi in {0.3,1} (tol 1e-9)";
  return r;
}

// Criterion 6: scaled passage times on the 4x6 grid follow the finite-N
// Laguerre determinant law within the 99% DKW band at 1e5 samples.
CriterionResult c_lpp_identity(int threads) {
  CriterionResult r;
  const std::size_t count = 100000;
  auto batch =
      simulate::lpp_sample({4, 6}, count, 604, simulate::Scaling::Edge, threads);
  std::sort(batch.values.begin(), batch.values.end());

  const auto ts = make_grid(-4.0, 6.5, 0.05);
  fredholm::CurveOptions copts;
  copts.threads = threads;
  const auto curve =
      fredholm::finite_curve(KernelSpec::finite_lue(4, 2.0), 1.0, ts, copts);

  double sup = 0.0;
  for (std::size_t i = 0; i < curve.ts.size(); ++i) {
    const auto it = std::upper_bound(batch.values.begin(), batch.values.end(),
                                     curve.ts[i]);
    const double emp = double(it - batch.values.begin()) / double(count);
    sup = std::max(sup, std::abs(emp - curve.F[i]));
  }
  r.pass = sup <= 0.0052;
  r.detail = "sup|empirical - F_4| = " + fmt(sup) +
             " at 1e5 samples (99% DKW band 0.0052)";
  return r;
}

// Criterion 7: the N=1 samplers and the 1x2 passage time reproduce their
// closed-form laws within four standard errors at 1e6 samples.
CriterionResult c_trivial_laws(int threads) {
  CriterionResult r;
  const std::size_t n = 1000000;
  std::ostringstream d;
  r.pass = true;

  const auto g =
      simulate::sample_gue_max(1, n, 701, 1.0, simulate::Scaling::Raw, threads);
  double mean = 0.0;
  for (double x : g.values) mean += x;
  mean /= double(n);
  double var = 0.0;
  for (double x : g.values) var += (x - mean) * (x - mean);
  var /= double(n);
  const double mean_tol = 4.0 * std::sqrt(0.5 / double(n));
  const double var_tol = 4.0 * 0.5 * std::sqrt(2.0 / double(n));
  if (std::abs(mean) > mean_tol || std::abs(var - 0.5) > var_tol)
    r.pass = false;
  d << "gue1 mean=" << fmt(mean) << "(tol " << fmt(mean_tol) << ") var-1/2="
    << fmt(var - 0.5) << "(tol " << fmt(var_tol) << ") ";

  const auto l = simulate::sample_lue_max(1, 0.0, n, 702, 1.0,
                                          simulate::Scaling::Raw, threads);
  double lmean = 0.0;
  for (double x : l.values) lmean += x;
  lmean /= double(n);
  const double ltol = 4.0 / std::sqrt(double(n));
  if (std::abs(lmean - 1.0) > ltol) r.pass = false;
  d << "lue1 mean-1=" << fmt(lmean - 1.0) << "(tol " << fmt(ltol) << ") ";

  const auto p =
      simulate::lpp_sample({1, 2}, n, 703, simulate::Scaling::Raw, threads);
  std::size_t below = 0;
  for (double x : p.values)
    if (x <= 2.0) ++below;
  const double emp = double(below) / double(n);
  const double want = 1.0 - std::exp(-2.0) * 3.0;
  const double ptol = 4.0 * std::sqrt(want * (1.0 - want) / double(n));
  if (std::abs(emp - want) > ptol) r.pass = false;
  d << "lpp12 cdf(2)-" << fmt(want) << "=" << fmt(emp - want) << "(tol "
    << fmt(ptol) << ")";

  r.detail = d.str();
  return r;
}

// Criterion 8: the four-point ensemble's leading finite-size deviation from
// the limit density is c * (d/dt)p0 with c close to 1/2, and the shifted
// centring keeps the next-order residual bounded as N grows.
CriterionResult c_wigner_coefficient(int threads) {
  CriterionResult r;
  const std::size_t big = 1000000, small = 100000;
  const int N50 = 50, N60 = 60;

  auto b50 = simulate::sample_wigner4_max(N50, big, 801,
                                          simulate::Scaling::CC, threads);

  // Limit density reference spanning every histogram the batches produce.
  const auto ref_ts = make_grid(-9.8, 4.3, 0.05);
  painleve::OdeCurveOptions lim;
  lim.limit_only = true;
  lim.threads = threads;
  const auto ref =
      painleve::ode_curve(painleve::SigmaVariant::GUE, 0.0, 1.0, ref_ts, lim);

  // Rare tail excursions below the reference grid are clipped; the handful
  // of clipped samples stays in the density normaliser via the atom count.
  const auto clip = [](const simulate::SampleBatch& b, double lo, double hi) {
    simulate::SampleBatch c = b;
    c.values.clear();
    for (double v : b.values)
      if (v >= lo && v <= hi) c.values.push_back(v);
    c.atom_count = b.atom_count + (b.values.size() - c.values.size());
    return c;
  };

  const auto ex50 =
      simulate::correction_extract(clip(b50, -9.5, 4.0), ref, 1.0 / 3.0);
  const double c = ex50.c;

  // The shifted centring adds a constant to every draw, so the 1e5-sample
  // shifted batches reuse the same substreams (prefix of the big batch).
  simulate::SampleBatch b50s;
  b50s.ensemble = b50.ensemble;
  b50s.N = N50;
  b50s.xi = 1.0;
  b50s.seed = b50.seed;
  b50s.scaling = simulate::Scaling::CC2;
  b50s.values.assign(b50.values.begin(), b50.values.begin() + small);
  const double shift50 = 0.5 / std::cbrt(double(N50));
  for (double& v : b50s.values) v += shift50;

  auto b60 = simulate::sample_wigner4_max(N60, small, 802,
                                          simulate::Scaling::CC2, threads);

  const auto ex50b =
      simulate::correction_extract(clip(b50s, -9.5, 4.0), ref, 2.0 / 3.0);
  const auto ex60 =
      simulate::correction_extract(clip(b60, -9.5, 4.0), ref, 2.0 / 3.0);
  double r50 = 0.0, r60 = 0.0;
  for (double x : ex50b.diff) r50 = std::max(r50, std::abs(x));
  for (double x : ex60.diff) r60 = std::max(r60, std::abs(x));

  r.pass = std::abs(c - 0.5) <= 0.1 && r60 <= 2.0 * r50;
  r.detail = "c = " + fmt(c) + " (want 0.5 +- 0.1); shifted-centring residual " +
             fmt(r60) + " at N=60 vs " + fmt(r50) + " at N=50 (bound 2x)";
  return r;
}

// Criterion 9: the emitted limit densities normalize (p0 to one, the
// correction to zero) and every distribution function is nondecreasing.
CriterionResult c_normalization(int threads) {
  CriterionResult r;
  const auto ts = make_grid(-10.0, 4.0, 0.01);
  painleve::OdeCurveOptions o;
  o.threads = threads;
  const auto g =
      painleve::ode_curve(painleve::SigmaVariant::GUE, 0.0, 1.0, ts, o);
  const auto l =
      painleve::ode_curve(painleve::SigmaVariant::LUE, 0.0, 1.0, ts, o);

  const double ip0 = simpson(g.p0, 0.01);
  const double ip1g = simpson(g.p1, 0.01);
  const double ip1l = simpson(l.p1, 0.01);
  bool monotone = true;
  for (const auto* curve : {&g, &l})
    for (std::size_t i = 0; i + 1 < curve->F.size(); ++i)
      if (curve->F[i + 1] + 1e-12 < curve->F[i]) monotone = false;

  r.pass = std::abs(ip0 - 1.0) <= 1e-5 && std::abs(ip1g) <= 1e-5 &&
           std::abs(ip1l) <= 1e-5 && monotone;
  r.detail = "int p0 - 1 = " + fmt(ip0 - 1.0) + ", int p1(gue) = " + fmt(ip1g) +
             ", int p1(lue) = " + fmt(ip1l) + " (tol 1e-5); F " +
             (monotone ? "monotone" : "NOT monotone");
  return r;
}

}  // namespace

const std::vector<std::string>& criterion_names() {
  static const std::vector<std::string> names = {
      "route-equivalence",   "finite-size-convergence",
      "alpha-limit",         "density-ode",
      "quadrature-convergence", "lpp-identity",
      "trivial-laws",        "wigner-coefficient",
      "normalization",
  };
  return names;
}

int criterion_index(const std::string& name) {
  const auto& names = criterion_names();
  for (std::size_t i = 0; i < names.size(); ++i)
    if (names[i] == name) return int(i) + 1;
  return 0;
}

CriterionResult run_criterion(int index, int threads) {
  if (index < 1 || index > 9)
    throw std::domain_error("criterion index must lie in 1..9");
  const int workers = resolve_threads(threads);
  const auto start = std::chrono::steady_clock::now();
  CriterionResult r;
  switch (index) {
    case 1: r = c_route_equivalence(workers); break;
    case 2: r = c_finite_size_convergence(workers); break;
    case 3: r = c_alpha_limit(workers); break;
    case 4: r = c_density_ode(workers); break;
    case 5: r = c_quadrature_convergence(workers); break;
    case 6: r = c_lpp_identity(workers); break;
    case 7: r = c_trivial_laws(workers); break;
    case 8: r = c_wigner_coefficient(workers); break;
    default: r = c_normalization(workers); break;
  }
  const auto stop = std::chrono::steady_clock::now();
  r.index = index;
  r.name = criterion_names()[std::size_t(index) - 1];
  r.seconds = std::chrono::duration<double>(stop - start).count();
  return r;
}

}  // namespace softedge::verify
