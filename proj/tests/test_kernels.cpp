#include <cmath>
#include <stdexcept>
#include <vector>

#include "doctest.h"
#include "softedge/airy.hpp"
#include "softedge/kernels.hpp"

using namespace softedge::kernels;
using softedge::specfun::airy;

TEST_SUITE_BEGIN("kernels");

TEST_CASE("airy kernel: symmetry, diagonal, and removable singularity") {
  const std::vector<double> pts = {-5.5, -3.0, -1.2, 0.0, 0.7, 2.5, 4.0};
  for (double x : pts)
    for (double y : pts) {
      CHECK(airy_kernel(x, y) == doctest::Approx(airy_kernel(y, x)).epsilon(1e-14));
    }
  for (double x : pts) {
    const auto p = airy(x);
    const double diag = p.ai_prime * p.ai_prime - x * p.ai * p.ai;
    CHECK(airy_kernel(x, x) == doctest::Approx(diag).epsilon(1e-13));
  }
  // K(0,0) = Ai'(0)^2
  CHECK(airy_kernel(0.0, 0.0) ==
        doctest::Approx(0.2588194037928068 * 0.2588194037928068).epsilon(1e-13));
  // Continuity across the Taylor/literal switch at |x-y| = 1e-4.
  for (double m : {-4.0, -1.0, 0.5, 3.0}) {
    const double a = airy_kernel(m + 4.9e-5, m - 4.9e-5);
    const double b = airy_kernel(m + 5.1e-5, m - 5.1e-5);
    CHECK(std::fabs(a - b) <= 1e-9 * std::fmax(1.0, std::fabs(a)));
  }
}

TEST_CASE("correction kernels: diagonals match the density corrections") {
  for (double y : {-3.5, -1.0, 0.0, 1.5}) {
    CAPTURE(y);
    const auto dg = density_correction(KernelSpec::correction_gue(), y);
    CHECK(correction_kernel(CorrectionVariant::GUE, y, y) ==
          doctest::Approx(dg.rho1).epsilon(1e-12));
    const auto dl = density_correction(KernelSpec::correction_lue(), y);
    CHECK(correction_kernel(CorrectionVariant::LUE, y, y) ==
          doctest::Approx(dl.rho1).epsilon(1e-12));
    const auto da = density_correction(KernelSpec::correction_lue_alpha(0.8), y);
    CHECK(correction_kernel_alpha(0.8, y, y) ==
          doctest::Approx(da.rho1).epsilon(1e-12));
    // rho0 is the Airy kernel diagonal for every variant.
    CHECK(dg.rho0 == doctest::Approx(airy_kernel(y, y)).epsilon(1e-13));
    CHECK(dl.rho0 == dg.rho0);
  }
  // Known spot value: rho1 for the Gaussian variant at y = 0 is
  // (3/20) Ai(0) Ai'(0).
  const double expect = 0.15 * 0.3550280538878172 * -0.2588194037928068;
  CHECK(density_correction(KernelSpec::correction_gue(), 0.0).rho1 ==
        doctest::Approx(expect).epsilon(1e-12));
}

TEST_CASE("alpha correction kernel: literal and refactored branches agree") {
  const std::vector<double> pts = {-4.0, -2.3, -1.0, 0.0, 0.9, 2.2, 3.8};
  for (double alpha : {0.5, 2.0, 5.0}) {
    for (double x : pts)
      for (double y : pts) {
        if (x == y) continue;
        const double lit = detail::correction_alpha_literal(alpha, x, y);
        const double dec = detail::correction_alpha_decomposed(alpha, x, y);
        CAPTURE(alpha);
        CAPTURE(x);
        CAPTURE(y);
        CHECK(std::fabs(lit - dec) <= 1e-10 * std::fmax(1.0, std::fabs(lit)));
      }
    // Symmetry of the production entry point.
    CHECK(correction_kernel_alpha(alpha, -1.3, 2.1) ==
          doctest::Approx(correction_kernel_alpha(alpha, 2.1, -1.3)).epsilon(1e-12));
  }
}

TEST_CASE("alpha family limit selects the production LUE correction kernel") {
  // The two fixed-parameter LUE candidates differ; the alpha -> 0 limit of
  // the alpha family singles out the production one. Record that here.
  const std::vector<double> pts = {-3.0, -1.5, 0.0, 1.0, 2.5};
  double max_match = 0.0, max_alt = 0.0;
  for (double x : pts)
    for (double y : pts) {
      const double lim = correction_kernel_alpha(1e-8, x, y);
      const double prod = correction_kernel(CorrectionVariant::LUE, x, y);
      const double alt = correction_kernel_lue_alt(x, y);
      max_match = std::fmax(max_match, std::fabs(lim - prod));
      max_alt = std::fmax(max_alt, std::fabs(lim - alt));
    }
  CHECK(max_match <= 1e-6);
  CHECK(max_alt > 1e-3);  // the alternate candidate is NOT the limit
}

TEST_CASE("edge scalings: Jacobians and the alpha->0 consistency identity") {
  const int N = 37;
  const EdgeScaling g = EdgeScaling::gue(N);
  CHECK(g.jacobian() ==
        doctest::Approx(1.0 / (std::sqrt(2.0) * std::pow(N, 1.0 / 6.0))));
  CHECK(g.s(0.0) == doctest::Approx(std::sqrt(2.0 * N)));
  const EdgeScaling lf = EdgeScaling::lue_fixed(N, 2.0);
  CHECK(lf.s(0.0) == doctest::Approx(4.0 * N + 4.0));
  CHECK(lf.jacobian() == doctest::Approx(2.0 * std::cbrt(2.0 * N)));
  // As alpha -> 0 the proportional-regime scaling degenerates to the
  // fixed-parameter one: centre -> 4N, scale -> 2 (2N)^{1/3}.
  const EdgeScaling la = EdgeScaling::lue_alpha(N, 1e-12);
  CHECK(la.s(0.0) == doctest::Approx(4.0 * N).epsilon(1e-9));
  CHECK(la.jacobian() == doctest::Approx(2.0 * std::cbrt(2.0 * N)).epsilon(1e-9));
}

TEST_CASE("finite kernel: N = 1 closed forms") {
  // Gaussian, N = 1: K_1(u,v) = phi_0(u) phi_0(v) = exp(-(u^2+v^2)/2)/sqrt(pi).
  const KernelSpec spec = KernelSpec::finite_gue(1);
  const EdgeScaling sc = canonical_scaling(spec);
  for (double x : {-1.0, 0.0, 0.8})
    for (double y : {-0.7, 0.0, 1.1}) {
      const double su = sc.s(x), sv = sc.s(y);
      const double ref =
          sc.jacobian() * std::exp(-0.5 * (su * su + sv * sv)) / std::sqrt(M_PI);
      CHECK(finite_kernel_scaled(spec, sc, x, y) ==
            doctest::Approx(ref).epsilon(1e-11));
    }
  CHECK(finite_kernel_raw_diag(spec, 0.4) ==
        doctest::Approx(std::exp(-0.16) / std::sqrt(M_PI)).epsilon(1e-12));
}

TEST_CASE("finite kernel: continuity at the confluent switch and convergence") {
  const KernelSpec spec = KernelSpec::finite_gue(80);
  const EdgeScaling sc = canonical_scaling(spec);
  for (double m : {-2.0, 0.0, 1.5}) {
    const double a = finite_kernel_scaled(spec, sc, m + 4.9e-5, m - 4.9e-5);
    const double b = finite_kernel_scaled(spec, sc, m + 5.1e-5, m - 5.1e-5);
    CHECK(std::fabs(a - b) <= 1e-7 * std::fmax(1.0, std::fabs(a)));
  }
  // The scaled finite kernel approaches the Airy kernel as N grows.
  for (double x : {-2.0, 0.0, 1.0}) {
    const double kn = finite_kernel_scaled(spec, sc, x, x);
    CHECK(std::fabs(kn - airy_kernel(x, x)) <= 2e-2);
  }
  const KernelSpec big = KernelSpec::finite_gue(800);
  const EdgeScaling scb = canonical_scaling(big);
  CHECK(std::fabs(finite_kernel_scaled(big, scb, 0.0, 0.0) - airy_kernel(0.0, 0.0)) <=
        3e-3);
}

TEST_CASE("finite LUE kernel: domain guard and Laguerre spot check") {
  const KernelSpec spec = KernelSpec::finite_lue(5, 1.0);
  const EdgeScaling sc = canonical_scaling(spec);
  // Far enough left that s(t) < 0: must refuse, not clamp.
  const double t_bad = -(4.0 * 5 + 2.0) / (2.0 * std::cbrt(10.0)) - 1.0;
  CHECK_THROWS_AS(finite_kernel_scaled(spec, sc, t_bad, 0.0), std::domain_error);
  CHECK_THROWS_AS(finite_kernel_raw_diag(spec, -1.0), std::domain_error);
  // N = 1, a = 0: K_1(u,v) = phi_0(u) phi_0(v) = exp(-(u+v)/2).
  const KernelSpec l1 = KernelSpec::finite_lue(1, 0.0);
  CHECK(finite_kernel_raw_diag(l1, 0.9) == doctest::Approx(std::exp(-0.9)).epsilon(1e-12));
}

TEST_CASE("kernel evaluator cache agrees with direct evaluation") {
  const std::vector<double> pts = {-4.0, -2.5, -1.0, -0.9999, 0.3, 1.8, 3.3};
  for (const KernelSpec spec :
       {KernelSpec::airy(), KernelSpec::correction_gue(), KernelSpec::correction_lue(),
        KernelSpec::correction_lue_alpha(1.7), KernelSpec::finite_gue(40)}) {
    KernelEvaluator ev(spec);
    ev.prime(pts);
    for (size_t i = 0; i < pts.size(); ++i)
      for (size_t j = 0; j < pts.size(); ++j) {
        const double direct = kernel_eval(spec, pts[i], pts[j]);
        CAPTURE(static_cast<int>(spec.kind));
        CAPTURE(pts[i]);
        CAPTURE(pts[j]);
        CHECK(ev.at(i, j) == doctest::Approx(direct).epsilon(1e-11));
      }
  }
}

TEST_SUITE_END();
