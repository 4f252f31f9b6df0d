#pragma once

namespace softedge::specfun {

// log Gamma(x) for x > 0 via a Lanczos approximation (g = 7, 9 terms),
// relative error of Gamma below 1e-13 across the range used here.
// Internal plumbing for orthonormal-polynomial norms; throws
// std::domain_error for x <= 0 or non-finite x.
double log_gamma(double x);

}  // namespace softedge::specfun
