#include <cmath>
#include <stdexcept>
#include <vector>

#include "doctest.h"
#include "oracle_values.hpp"
#include "softedge/gamma.hpp"
#include "softedge/weighted.hpp"

using namespace softedge::specfun;

namespace {

// Direct evaluation for small n: physicists' Hermite via H recurrence.
double hermite_direct(int n, double x) {
  double hm1 = 0.0, h = 1.0;  // H_0
  for (int k = 0; k < n; ++k) {
    const double next = 2.0 * x * h - 2.0 * k * hm1;
    hm1 = h;
    h = next;
  }
  // phi_n = H_n exp(-x^2/2) / sqrt(sqrt(pi) 2^n n!)
  double lognorm = 0.25 * std::log(M_PI) + 0.5 * n * std::log(2.0) +
                   0.5 * std::lgamma(n + 1.0);
  return h * std::exp(-0.5 * x * x - lognorm);
}

// Direct evaluation for small n: generalized Laguerre recurrence.
double laguerre_direct(int n, double a, double x) {
  double lm1 = 0.0, l = 1.0;  // L_0
  for (int k = 0; k < n; ++k) {
    const double next = ((2.0 * k + a + 1.0 - x) * l - (k + a) * lm1) / (k + 1.0);
    lm1 = l;
    l = next;
  }
  // phi_n = (-1)^n sqrt(n!/Gamma(a+n+1)) L_n^a x^{a/2} exp(-x/2)
  const double sign = (n % 2 == 0) ? 1.0 : -1.0;
  const double logc = 0.5 * (std::lgamma(n + 1.0) - std::lgamma(a + n + 1.0));
  return sign * l * std::exp(logc + 0.5 * a * std::log(x) - 0.5 * x);
}

}  // namespace

TEST_SUITE_BEGIN("specfun");

TEST_CASE("weighted Hermite matches the direct formula for small n") {
  for (int n : {0, 1, 2, 5, 10}) {
    for (double x : {-2.1, -0.4, 0.3, 1.7, 4.0}) {
      const double ref = hermite_direct(n, x);
      const WeightedPolyValue v = hermite_weighted(n, x);
      CAPTURE(n);
      CAPTURE(x);
      CHECK(std::fabs(v.phi - ref) <= 1e-12 * std::fmax(1.0, std::fabs(ref)));
    }
  }
  CHECK(hermite_weighted(0, 0.0).phi ==
        doctest::Approx(0.7511255444649425).epsilon(1e-13));  // pi^{-1/4}
}

TEST_CASE("weighted Laguerre matches the direct formula for small n") {
  for (int n : {0, 1, 3, 7, 10}) {
    for (double a : {0.0, 0.5, 3.2}) {
      for (double x : {0.4, 2.5, 19.0}) {
        const double ref = laguerre_direct(n, a, x);
        const WeightedPolyValue v = laguerre_weighted(n, a, x);
        CAPTURE(n);
        CAPTURE(a);
        CAPTURE(x);
        CHECK(std::fabs(v.phi - ref) <= 1e-12 * std::fmax(1.0, std::fabs(ref)));
      }
    }
  }
}

TEST_CASE("weighted polynomials match frozen high-n references") {
  for (const auto& row : oracle::kHermitePhi) {
    const WeightedPolyValue v = hermite_weighted(row.n, row.x);
    CAPTURE(row.n);
    CAPTURE(row.x);
    CHECK(std::fabs(v.phi - row.phi) <= 5e-12 * std::fabs(row.phi));
  }
  for (const auto& row : oracle::kLaguerrePhi) {
    const WeightedPolyValue v = laguerre_weighted(row.n, row.a, row.x);
    CAPTURE(row.n);
    CAPTURE(row.x);
    CHECK(std::fabs(v.phi - row.phi) <= 5e-12 * std::fabs(row.phi));
  }
}

TEST_CASE("pair evaluation is consistent across n") {
  // phi_{n-1} of the n-pair equals phi_n of the (n-1)-pair.
  for (int n : {1, 7, 40}) {
    const WeightedPair p = hermite_pair(n, 1.234);
    const WeightedPair q = hermite_pair(n - 1, 1.234);
    const double lhs = std::ldexp(p.phi_nm1_m, p.exp2);
    const double rhs = std::ldexp(q.phi_n_m, q.exp2);
    CHECK(lhs == doctest::Approx(rhs).epsilon(1e-13));
    const WeightedPair pl = laguerre_pair(n, 0.7, 3.21);
    const WeightedPair ql = laguerre_pair(n - 1, 0.7, 3.21);
    CHECK(std::ldexp(pl.phi_nm1_m, pl.exp2) ==
          doctest::Approx(std::ldexp(ql.phi_n_m, ql.exp2)).epsilon(1e-13));
  }
}

TEST_CASE("ladder derivatives agree with finite differences") {
  const double h = 1e-3;
  auto fd5 = [](auto f, double x, double h2) {
    return (-f(x + 2 * h2) + 8 * f(x + h2) - 8 * f(x - h2) + f(x - 2 * h2)) /
           (12 * h2);
  };
  for (int n : {1, 6, 25}) {
    for (double x : {-1.7, 0.9, 5.5}) {
      const WeightedPair p = hermite_pair(n, x);
      const PairDerivs d = hermite_pair_derivs(p);
      const double ref_n =
          fd5([&](double u) { return hermite_weighted(n, u).phi; }, x, h);
      const double ref_m =
          fd5([&](double u) { return hermite_weighted(n - 1, u).phi; }, x, h);
      CHECK(std::ldexp(d.dphi_n_m, p.exp2) == doctest::Approx(ref_n).epsilon(1e-7));
      CHECK(std::ldexp(d.dphi_nm1_m, p.exp2) == doctest::Approx(ref_m).epsilon(1e-7));
    }
    for (double x : {0.8, 4.2, 17.0}) {
      const double a = 1.3;
      const WeightedPair p = laguerre_pair(n, a, x);
      const PairDerivs d = laguerre_pair_derivs(p);
      const double ref_n =
          fd5([&](double u) { return laguerre_weighted(n, a, u).phi; }, x, h);
      const double ref_m =
          fd5([&](double u) { return laguerre_weighted(n - 1, a, u).phi; }, x, h);
      CHECK(std::ldexp(d.dphi_n_m, p.exp2) == doctest::Approx(ref_n).epsilon(1e-7));
      CHECK(std::ldexp(d.dphi_nm1_m, p.exp2) == doctest::Approx(ref_m).epsilon(1e-7));
    }
  }
}

TEST_CASE("weighted evaluation stays finite deep in the tail") {
  // exp(-x^2/2) alone would underflow; the scaled pair must not.
  const WeightedPair p = hermite_pair(2000, 63.4);
  CHECK(std::isfinite(p.phi_n_m));
  CHECK(p.phi_n_m != 0.0);
  const WeightedPair deep = hermite_pair(10, 40.0);  // far outside the bulk
  CHECK(std::isfinite(deep.phi_n_m));
  CHECK(deep.exp2 < -800);  // genuinely sub-double-range magnitude
  CHECK(std::isfinite(hermite_weighted(10, 40.0).phi));
}

TEST_CASE("weighted evaluation rejects bad arguments") {
  CHECK_THROWS_AS(hermite_pair(-1, 0.0), std::domain_error);
  CHECK_THROWS_AS(laguerre_pair(3, 1.0, -0.5), std::domain_error);
  CHECK_THROWS_AS(laguerre_pair(3, -1.5, 0.5), std::domain_error);
  CHECK_THROWS_AS(hermite_pair(2, std::nan("")), std::domain_error);
  // x = 0 is a valid Laguerre boundary point for the value itself.
  CHECK(laguerre_weighted(0, 0.0, 0.0).phi == doctest::Approx(1.0));
  CHECK(laguerre_weighted(2, 1.5, 0.0).phi == 0.0);
}

TEST_SUITE_END();
