#pragma once

namespace softedge::specfun {

// Airy function Ai and its derivative evaluated at the same point.
struct AiryPair {
  double x;
  double ai;
  double ai_prime;
};

// Evaluate Ai(x) and Ai'(x) in double precision.
//
// Strategy (all internal arithmetic in long double):
//   - |x| <= 6.5        : Maclaurin series (DLMF 9.4.1/9.4.2).
//   - x > 6.5           : exponential asymptotic expansion (DLMF 9.7.5/9.7.6),
//                         truncated at the smallest term; underflows smoothly
//                         to zero for very large x.
//   - x < -12           : oscillatory asymptotic expansion (DLMF 9.7.9/9.7.10).
//   - -12 <= x < -6.5   : Taylor-series integration of y'' = x y started from
//                         the series value at -6.5 (the raw Maclaurin series
//                         loses too many digits to cancellation out here, and
//                         the oscillatory expansion is not yet accurate).
//
// Absolute error is below 1e-13 for |x| <= 20 (tighter near the origin).
// Throws std::domain_error if x is NaN or infinite.
AiryPair airy(double x);

}  // namespace softedge::specfun
