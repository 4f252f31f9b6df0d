#include "softedge/gamma.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace softedge::specfun {
namespace {

// Lanczos coefficients for g = 7, n = 9 (Godfrey's classic table; see e.g.
// the Wikipedia article "Lanczos approximation").
constexpr long double kG = 7.0L;
constexpr long double kCoef[9] = {
    0.99999999999980993227684700473478L,
    676.520368121885098567009190444019L,
    -1259.13921672240287047156078755283L,
    771.3234287776530788486528258894L,
    -176.61502916214059906584551354L,
    12.507343278686904814458936853L,
    -0.13857109526572011689554707L,
    9.984369578019570859563e-6L,
    1.50563273514931155834e-7L};
constexpr long double kLogSqrtTwoPi = 0.918938533204672741780329736406L;

}  // namespace

double log_gamma(double x) {
  if (!(x > 0.0) || !std::isfinite(x))
    throw std::domain_error("log_gamma: argument must be positive and finite, got " +
                            std::to_string(x));
  // Gamma(z) = sqrt(2 pi) t^{z-1/2} e^{-t} A(z), t = z + g - 1/2.
  const long double z = static_cast<long double>(x) - 1.0L;
  long double a = kCoef[0];
  for (int i = 1; i < 9; ++i) a += kCoef[i] / (z + i);
  const long double t = z + kG + 0.5L;
  const long double r = kLogSqrtTwoPi + (z + 0.5L) * logl(t) - t + logl(a);
  return static_cast<double>(r);
}

}  // namespace softedge::specfun
