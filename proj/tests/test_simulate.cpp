#include <algorithm>
#include <cmath>
#include <complex>
#include <cstdint>
#include <stdexcept>
#include <vector>

#include "doctest.h"
#include "softedge/curves.hpp"
#include "softedge/histogram.hpp"
#include "softedge/kernels.hpp"
#include "softedge/lpp.hpp"
#include "softedge/painleve.hpp"
#include "softedge/rng.hpp"
#include "softedge/samplers.hpp"

#if defined(SOFTEDGE_HAVE_EIGEN)
#include <Eigen/Dense>
#endif

namespace {

using namespace softedge;
using namespace softedge::simulate;

double mean_of(const std::vector<double>& v) {
  double m = 0.0;
  for (double x : v) m += x;
  return m / double(v.size());
}

double var_of(const std::vector<double>& v) {
  const double m = mean_of(v);
  double s = 0.0;
  for (double x : v) s += (x - m) * (x - m);
  return s / double(v.size());
}

double empirical_cdf(const std::vector<double>& v, double t) {
  std::size_t c = 0;
  for (double x : v)
    if (x <= t) ++c;
  return double(c) / double(v.size());
}

// Inverse-CDF draws from a tabulated monotone distribution function.
std::vector<double> inverse_cdf_draws(const std::vector<double>& ts,
                                      const std::vector<double>& F,
                                      std::size_t count, std::uint64_t seed) {
  std::vector<double> out(count);
  rng::Stream stream(seed, 0);
  for (std::size_t i = 0; i < count; ++i) {
    const double u = stream.uniform_pos();
    auto it = std::lower_bound(F.begin(), F.end(), u);
    if (it == F.begin()) {
      out[i] = ts.front();
      continue;
    }
    if (it == F.end()) {
      out[i] = ts.back();
      continue;
    }
    const std::size_t k = std::size_t(it - F.begin());
    const double f0 = F[k - 1], f1 = F[k];
    const double w = f1 > f0 ? (u - f0) / (f1 - f0) : 0.5;
    out[i] = ts[k - 1] + w * (ts[k] - ts[k - 1]);
  }
  return out;
}

}  // namespace

TEST_SUITE("simulate") {

TEST_CASE("single-site Gaussian batch has the e^{-x^2} law moments") {
  const std::size_t n = 100000;
  auto b = sample_gue_max(1, n, 42, 1.0, Scaling::Raw, 2);
  REQUIRE(b.count() == n);
  CHECK(b.atom_count == 0);
  // N(0, 1/2): mean within 4 SE, variance within 4 SE of its estimator.
  CHECK(std::abs(mean_of(b.values)) < 4.0 * std::sqrt(0.5 / double(n)));
  CHECK(std::abs(var_of(b.values) - 0.5) <
        4.0 * 0.5 * std::sqrt(2.0 / double(n)));
  for (double x : b.values) REQUIRE(std::isfinite(x));
}

TEST_CASE("single-site Laguerre batches follow Exp(1) and Gamma(2,1)") {
  const std::size_t n = 100000;
  auto b0 = sample_lue_max(1, 0.0, n, 7, 1.0, Scaling::Raw, 2);
  CHECK(std::abs(mean_of(b0.values) - 1.0) < 4.0 / std::sqrt(double(n)));
  auto b1 = sample_lue_max(1, 1.0, n, 8, 1.0, Scaling::Raw, 2);
  CHECK(std::abs(mean_of(b1.values) - 2.0) <
        4.0 * std::sqrt(2.0 / double(n)));
}

#if defined(SOFTEDGE_HAVE_EIGEN)
TEST_CASE("Sturm bisection matches a dense eigensolver at N=12") {
  const int N = 12;
  // 80 Gaussian tridiagonal draws plus 20 four-point dense draws = 100.
  for (int rep = 0; rep < 80; ++rep) {
    rng::Stream st(1000 + rep, 0);
    auto T = gue_tridiagonal(N, st);
    Eigen::MatrixXd dense = Eigen::MatrixXd::Zero(N, N);
    for (int i = 0; i < N; ++i) dense(i, i) = T.diag[std::size_t(i)];
    for (int i = 0; i + 1 < N; ++i) {
      dense(i, i + 1) = T.off[std::size_t(i)];
      dense(i + 1, i) = T.off[std::size_t(i)];
    }
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(dense);
    CHECK(std::abs(tridiag_kth_largest(T, 1) - es.eigenvalues()(N - 1)) <
          1e-10);
    CHECK(std::abs(tridiag_kth_largest(T, 3) - es.eigenvalues()(N - 3)) <
          1e-10);
  }
  for (int rep = 0; rep < 20; ++rep) {
    rng::Stream st(2000 + rep, 0);
    auto A = wigner4_dense(N, st);
    Eigen::MatrixXcd dense(N, N);
    for (int i = 0; i < N; ++i)
      for (int j = 0; j < N; ++j)
        dense(i, j) = A[std::size_t(i) * N + j];
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(dense);
    auto T = hermitian_tridiagonalize(A, N);
    CHECK(std::abs(tridiag_kth_largest(T, 1) - es.eigenvalues()(N - 1)) <
          1e-10);
  }
}
#endif

TEST_CASE("batches are bit-for-bit identical across thread counts") {
  auto g1 = sample_gue_max(8, 500, 99, 0.7, Scaling::Edge, 1);
  auto g3 = sample_gue_max(8, 500, 99, 0.7, Scaling::Edge, 3);
  CHECK(g1.values == g3.values);
  CHECK(g1.atom_count == g3.atom_count);

  auto l1 = sample_lue_max(6, 1.5, 400, 17, 0.8, Scaling::Edge, 1);
  auto l4 = sample_lue_max(6, 1.5, 400, 17, 0.8, Scaling::Edge, 4);
  CHECK(l1.values == l4.values);
  CHECK(l1.atom_count == l4.atom_count);

  auto w1 = sample_wigner4_max(10, 200, 5, Scaling::CC, 1);
  auto w2 = sample_wigner4_max(10, 200, 5, Scaling::CC, 2);
  CHECK(w1.values == w2.values);

  auto p1 = lpp_sample({4, 6}, 400, 9, Scaling::Edge, 1);
  auto p3 = lpp_sample({4, 6}, 400, 9, Scaling::Edge, 3);
  CHECK(p1.values == p3.values);
}

TEST_CASE("full retention reproduces the base sampler exactly") {
  auto base = sample_gue_max(8, 300, 5, 1.0, Scaling::Edge, 1);
  auto again = sample_gue_max(8, 300, 5, 1.0, Scaling::Edge, 2);
  CHECK(base.values == again.values);
  CHECK(base.atom_count == 0);
}

TEST_CASE("thinning atom mass matches (1-xi)^N") {
  const std::size_t n = 20000;
  const int N = 3;
  const double xi = 0.4;
  auto b = sample_gue_max(N, n, 31, xi, Scaling::Raw, 2);
  const double p = std::pow(1.0 - xi, N);
  const double se = std::sqrt(p * (1.0 - p) / double(n));
  CHECK(std::abs(double(b.atom_count) / double(n) - p) < 3.0 * se);
  CHECK(b.count() + b.atom_count == n);
}

TEST_CASE("single-eigenvalue thinning leaves the conditional law unchanged") {
  const std::size_t n = 100000;
  auto b = sample_gue_max(1, n, 13, 0.5, Scaling::Raw, 2);
  const double frac = double(b.atom_count) / double(n);
  CHECK(std::abs(frac - 0.5) < 3.0 * std::sqrt(0.25 / double(n)));
  // Survivors are plain N(0, 1/2) draws.
  const double m = double(b.count());
  CHECK(std::abs(mean_of(b.values)) < 4.0 * std::sqrt(0.5 / m));
  CHECK(std::abs(var_of(b.values) - 0.5) < 4.0 * 0.5 * std::sqrt(2.0 / m));
}

TEST_CASE("four-point draws have the stated entry statistics") {
  const double inv_sqrt2 = 1.0 / std::sqrt(2.0);
  double sum_sq = 0.0;
  std::size_t off_entries = 0;
  for (int rep = 0; rep < 20; ++rep) {
    rng::Stream st(300 + rep, 0);
    const int N = 100;
    auto A = wigner4_dense(N, st);
    for (int i = 0; i < N; ++i) {
      // Diagonal entries are exactly +-1/sqrt(2) and real.
      REQUIRE(std::abs(std::abs(A[std::size_t(i) * N + i].real()) -
                       inv_sqrt2) < 1e-14);
      REQUIRE(A[std::size_t(i) * N + i].imag() == 0.0);
      for (int j = i + 1; j < N; ++j) {
        sum_sq += std::norm(A[std::size_t(i) * N + j]);
        ++off_entries;
      }
    }
  }
  // Off-diagonal variance 1/2 within 0.01 over ~1e5 sampled entries.
  CHECK(off_entries > 90000);
  CHECK(std::abs(sum_sq / double(off_entries) - 0.5) < 0.01);
}

TEST_CASE("the shifted centring moves every draw by exactly 1/(2 N^{1/3})") {
  const int N = 10;
  auto cc = sample_wigner4_max(N, 100, 21, Scaling::CC, 1);
  auto cc2 = sample_wigner4_max(N, 100, 21, Scaling::CC2, 1);
  const double shift = 0.5 / std::cbrt(double(N));
  for (std::size_t i = 0; i < cc.values.size(); ++i)
    CHECK(cc2.values[i] == doctest::Approx(cc.values[i] + shift).epsilon(1e-13));
}

TEST_CASE("scaled Gaussian batches match the finite-size distribution curve") {
  const int N = 8;
  const std::size_t count = 20000;
  auto b = sample_gue_max(N, count, 77, 1.0, Scaling::Edge, 2);
  std::vector<double> ts{-3.0, -2.0, -1.0, 0.0, 1.0};
  kernels::KernelSpec spec = kernels::KernelSpec::finite_gue(N);
  auto curve = fredholm::finite_curve(spec, 1.0, ts, {});
  const double band = std::sqrt(std::log(2.0 / 0.01) / (2.0 * double(count)));
  for (std::size_t i = 0; i < ts.size(); ++i)
    CHECK(std::abs(empirical_cdf(b.values, ts[i]) - curve.F[i]) < band);
}

TEST_CASE("thinned batches match the thinned finite-size determinant") {
  const int N = 6;
  const double xi = 0.6;
  const std::size_t count = 20000;
  auto b = sample_gue_max(N, count, 101, xi, Scaling::Edge, 2);
  std::vector<double> ts{-2.0, -1.0, 0.0, 1.0};
  kernels::KernelSpec spec = kernels::KernelSpec::finite_gue(N);
  auto curve = fredholm::finite_curve(spec, xi, ts, {});
  const double band = std::sqrt(std::log(2.0 / 0.01) / (2.0 * double(count)));
  for (std::size_t i = 0; i < ts.size(); ++i) {
    // The determinant gives Pr(no retained eigenvalue above t): surviving
    // draws at or below t plus fully-deleted samples.
    std::size_t c = b.atom_count;
    for (double x : b.values)
      if (x <= ts[i]) ++c;
    CHECK(std::abs(double(c) / double(count) - curve.F[i]) < band);
  }
}

TEST_CASE("passage times obey the small-grid closed forms") {
  const std::size_t n = 100000;
  const double band = std::sqrt(std::log(2.0 / 0.01) / (2.0 * double(n)));
  auto b11 = lpp_sample({1, 1}, n, 3, Scaling::Raw, 2);
  CHECK(std::abs(empirical_cdf(b11.values, 1.0) - (1.0 - std::exp(-1.0))) <
        band);
  auto b12 = lpp_sample({1, 2}, n, 4, Scaling::Raw, 2);
  CHECK(std::abs(empirical_cdf(b12.values, 2.0) -
                 (1.0 - std::exp(-2.0) * 3.0)) < band);
}

TEST_CASE("grid extension never shortens a shared-weight passage time") {
  const int N = 3, n = 5;
  for (int rep = 0; rep < 500; ++rep) {
    rng::Stream st(77, std::uint64_t(rep));
    std::vector<double> wide(std::size_t(N) * (n + 1));
    for (double& x : wide) x = st.exponential();
    std::vector<double> narrow(std::size_t(N) * n);
    for (int i = 0; i < N; ++i)
      for (int j = 0; j < n; ++j)
        narrow[std::size_t(i) * n + j] = wide[std::size_t(i) * (n + 1) + j];
    REQUIRE(lpp_value(narrow, N, n) <= lpp_value(wide, N, n + 1));
  }
}

TEST_CASE("passage-time scaling maps agree with the eigenvalue edge maps") {
  auto f = lpp_scaling(100, 102, LppRegime::FixedA);
  CHECK(f.center == doctest::Approx(404.0).epsilon(1e-14));
  CHECK(f.scale == doctest::Approx(2.0 * std::cbrt(200.0)).epsilon(1e-14));
  auto g = lpp_scaling(100, 102, LppRegime::Alpha);
  const double r = std::sqrt(1.02);
  CHECK(g.center == doctest::Approx(100.0 * (r + 1) * (r + 1)).epsilon(1e-14));
  CHECK(g.scale ==
        doctest::Approx(std::cbrt(100.0) * (r + 1) * std::cbrt(1.0 / r + 1.0))
            .epsilon(1e-14));
  // At a = alpha = 0 both families give the same affine map.
  auto za = kernels::EdgeScaling::lue_alpha(50, 0.0);
  auto zf = kernels::EdgeScaling::lue_fixed(50, 0.0);
  CHECK(za.s(0.0) == doctest::Approx(zf.s(0.0)).epsilon(1e-14));
  CHECK(za.jacobian() == doctest::Approx(zf.jacobian()).epsilon(1e-14));
}

TEST_CASE("asymptotic passage-time law hits its anchors") {
  auto far = lpp_asymptotic_cdf(100, 102, 40.0, LppRegime::FixedA);
  CHECK(far.leading == doctest::Approx(1.0).epsilon(1e-14));
  CHECK(far.corrected == doctest::Approx(1.0).epsilon(1e-14));

  auto mid = lpp_asymptotic_cdf(100, 102, -2.0, LppRegime::FixedA);
  CHECK(mid.leading == doctest::Approx(0.4132241425050049).epsilon(1e-10));
  // The correction shifts the CDF by N^{-2/3} * (-F int sigma1) at t = -2.
  const double shift = -0.2314945462791122 / std::pow(100.0, 2.0 / 3.0);
  CHECK(mid.corrected - mid.leading == doctest::Approx(shift).epsilon(1e-6));

  auto deep = lpp_asymptotic_cdf(100, 102, -30.0, LppRegime::FixedA);
  CHECK(deep.leading == 0.0);
  CHECK(deep.corrected == 0.0);

  auto vec = lpp_asymptotic_cdf(100, 102, std::vector<double>{-2.0, 40.0},
                                LppRegime::Alpha);
  CHECK(vec[0].leading == doctest::Approx(0.4132241425050049).epsilon(1e-10));
  CHECK(vec[1].corrected == doctest::Approx(1.0).epsilon(1e-14));
}

TEST_CASE("histogram mass equals the surviving fraction") {
  auto b = sample_gue_max(3, 20000, 31, 0.5, Scaling::Raw, 2);
  auto h = build_histogram(b);
  REQUIRE(h.total == 20000);
  double mass = 0.0;
  for (std::size_t k = 0; k < h.counts.size(); ++k)
    mass += h.density[k] * (h.edges[k + 1] - h.edges[k]);
  const double survivors = double(b.count()) / 20000.0;
  CHECK(mass == doctest::Approx(survivors).epsilon(1e-12));
  CHECK(h.in_range == b.count());
  std::uint64_t csum = 0;
  for (auto c : h.counts) csum += c;
  CHECK(csum == h.in_range);
  for (std::size_t k = 0; k + 1 < h.edges.size(); ++k)
    REQUIRE(h.edges[k] < h.edges[k + 1]);
}

TEST_CASE("histogram bin selection behaves") {
  auto b = lpp_sample({4, 6}, 5000, 11, Scaling::Edge, 2);
  auto fd = build_histogram(b);
  CHECK(fd.counts.size() >= 10);
  CHECK(fd.counts.size() <= 4096);
  auto fixed = build_histogram(b, 25);
  CHECK(fixed.counts.size() == 25);

  std::vector<double> flat(100, 3.5);
  auto one = build_histogram(flat, 100);
  CHECK(one.counts.size() == 1);
  CHECK(one.counts[0] == 100);
  CHECK(one.density[0] == doctest::Approx(1.0).epsilon(1e-14));

  CHECK_THROWS_AS(build_histogram(std::vector<double>{}, 0),
                  std::domain_error);
  CHECK_THROWS_AS(build_histogram(std::vector<double>{1.0}, 0),
                  std::domain_error);
}

TEST_CASE("density residual of limit-law draws fits a null coefficient") {
  // Draw from the limiting density itself by inverting its CDF, then check
  // the fitted derivative coefficient is statistically zero.
  auto sol = painleve::solve_sigma0(1.0);
  std::vector<double> ts, F;
  for (double t = -8.0; t <= 3.0 + 1e-12; t += 0.005) {
    ts.push_back(t);
    F.push_back(std::exp(-sol.sigma0_tail_integral(t)));
  }
  auto draws = inverse_cdf_draws(ts, F, 400000, 555);

  SampleBatch batch;
  batch.ensemble = "synthetic";
  batch.N = 1000;
  batch.xi = 1.0;
  batch.seed = 555;
  batch.scaling = Scaling::Edge;
  batch.values = std::move(draws);

  std::vector<double> grid;
  for (double t = -8.5; t <= 3.5 + 1e-12; t += 0.05) grid.push_back(t);
  painleve::OdeCurveOptions opts;
  opts.limit_only = true;
  auto reference = painleve::ode_curve(painleve::SigmaVariant::GUE, 0.0, 1.0,
                                       grid, opts);

  auto ex = correction_extract(batch, reference, 1.0 / 3.0);
  REQUIRE(ex.has_c);
  CHECK(std::abs(ex.c) < 0.05);
  CHECK(ex.power == doctest::Approx(1.0 / 3.0));
  REQUIRE(ex.centers.size() == ex.diff.size());
  // Residuals themselves stay small: the histogram tracks the density.
  for (double d : ex.diff) REQUIRE(std::abs(d) < 2.0);
}

TEST_CASE("corrected density fits thinned draws better than the limit alone") {
  const int N = 50;
  const double xi = 0.6;
  const std::size_t count = 40000;
  auto b = sample_gue_max(N, count, 202, xi, Scaling::Edge, 2);

  std::vector<double> grid;
  for (double t = -7.5; t <= 4.5 + 1e-12; t += 0.05) grid.push_back(t);
  auto curve =
      painleve::ode_curve(painleve::SigmaVariant::GUE, 0.0, xi, grid, {});
  REQUIRE(curve.p1.size() == grid.size());

  // Thinning lets the retained maximum fall far below the soft edge, so
  // compare densities over a window the reference grid covers; clipped
  // samples still count in the normaliser.
  std::vector<double> clipped;
  for (double v : b.values)
    if (v >= -7.0 && v <= 4.0) clipped.push_back(v);
  auto hist = build_histogram(clipped, b.count() + b.atom_count);
  // Interpolate p0 and p0 + N^{-2/3} p1 linearly on the fine grid.
  auto interp = [&](const std::vector<double>& ys, double x) {
    auto it = std::lower_bound(grid.begin(), grid.end(), x);
    REQUIRE(it != grid.begin());
    REQUIRE(it != grid.end());
    const std::size_t k = std::size_t(it - grid.begin());
    const double w = (x - grid[k - 1]) / (grid[k] - grid[k - 1]);
    return ys[k - 1] * (1.0 - w) + ys[k] * w;
  };
  const double npow = std::pow(double(N), -2.0 / 3.0);
  double l2_leading = 0.0, l2_corrected = 0.0;
  for (std::size_t k = 0; k < hist.counts.size(); ++k) {
    const double c = 0.5 * (hist.edges[k] + hist.edges[k + 1]);
    const double p0 = interp(curve.p0, c);
    const double p1 = interp(curve.p1, c);
    l2_leading += (hist.density[k] - p0) * (hist.density[k] - p0);
    l2_corrected += (hist.density[k] - p0 - npow * p1) *
                    (hist.density[k] - p0 - npow * p1);
  }
  CHECK(l2_corrected < l2_leading);
}

TEST_CASE("sampler argument validation") {
  CHECK_THROWS_AS(sample_gue_max(0, 10, 1), std::domain_error);
  CHECK_THROWS_AS(sample_gue_max(4, 10, 1, 0.0), std::domain_error);
  CHECK_THROWS_AS(sample_gue_max(4, 10, 1, 1.5), std::domain_error);
  CHECK_THROWS_AS(sample_gue_max(4, 10, 1, 1.0, Scaling::EdgeAlpha),
                  std::domain_error);
  CHECK_THROWS_AS(sample_lue_max(4, -1.0, 10, 1), std::domain_error);
  CHECK_THROWS_AS(sample_lue_max(4, 1.0, 10, 1, 1.0, Scaling::CC),
                  std::domain_error);
  CHECK_THROWS_AS(sample_wigner4_max(1, 10, 1), std::domain_error);
  CHECK_THROWS_AS(sample_wigner4_max(10, 10, 1, Scaling::Edge),
                  std::domain_error);
  CHECK_THROWS_AS(lpp_sample({0, 1}, 10, 1), std::domain_error);
  CHECK_THROWS_AS(lpp_sample({3, 2}, 10, 1), std::domain_error);
  CHECK_THROWS_AS(lpp_sample({3, 3}, 10, 1, Scaling::EdgeAlpha),
                  std::domain_error);
  CHECK_THROWS_AS(lpp_sample({3, 4}, 10, 1, Scaling::CC), std::domain_error);
  CHECK_THROWS_AS(lpp_value(std::vector<double>(5, 1.0), 2, 3),
                  std::domain_error);
  CHECK_THROWS_AS(lpp_asymptotic_cdf(4, 4, 0.0, LppRegime::Alpha),
                  std::domain_error);
  CHECK_THROWS_AS(lpp_asymptotic_cdf(4, 2, 0.0, LppRegime::FixedA),
                  std::domain_error);

  auto b = sample_gue_max(2, 50, 1, 1.0, Scaling::Edge, 1);
  std::vector<double> tiny_ts{-1.0, 0.0};
  painleve::OdeCurveOptions lim;
  lim.limit_only = true;
  auto narrow = painleve::ode_curve(painleve::SigmaVariant::GUE, 0.0, 1.0,
                                    tiny_ts, lim);
  CHECK_THROWS_AS(correction_extract(b, narrow, 1.0 / 3.0),
                  std::domain_error);
  CHECK_THROWS_AS(correction_extract(b, narrow, 0.5), std::domain_error);
}

}  // TEST_SUITE
