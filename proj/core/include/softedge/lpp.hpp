#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

#include "softedge/samplers.hpp"

namespace softedge::simulate {

// Rectangular grid for the directed last-passage model: sites (i, j) with
// 1 <= i <= N (rows), 1 <= j <= n (cols) and n >= N, each carrying an
// independent rate-1 exponential weight.  The passage time is the maximal
// total weight collected along monotone up/right lattice paths from (1, 1)
// to (N, n).  Its law coincides with that of the largest eigenvalue of the
// Laguerre unitary ensemble with exponent a = n - N, which is what the Edge
// scaling and the asymptotic CDF below rely on.
struct LppGrid {
  int N = 1;  // rows
  int n = 1;  // cols, n >= N
};

// Maximal up/right path sum over a row-major weight matrix.  Exposed as a
// standalone entry point so tests can couple grids of different shapes by
// slicing one shared weight matrix.
double lpp_value(const std::vector<double>& weights, int rows, int cols);

// Draws `count` independent passage times.  Weights are consumed row-major
// from the per-sample substream (seed, sample index), so batches are
// bit-for-bit reproducible for any thread count.  Scaling choices:
//   Raw       - the passage time itself;
//   Edge      - (l - 4N - 2(n-N)) / (2 (2N)^{1/3}), the fixed-exponent
//               Laguerre soft-edge map with a = n - N;
//   EdgeAlpha - the proportional-regime map with alpha = (n-N)/N
//               (requires n > N).
// The Wigner centrings CC/CC2 do not apply here and are rejected.
SampleBatch lpp_sample(const LppGrid& grid, std::size_t count,
                       std::uint64_t seed, Scaling scaling = Scaling::Raw,
                       int threads = 1);

// Limit regime for the rectangle shape as N grows.
enum class LppRegime {
  FixedA,  // a = n - N held fixed
  Alpha,   // alpha = (n - N)/N held fixed; needs n > N
};

// Affine map from the raw passage time to the scaled edge variable
// t = (l - center) / scale for the requested regime.
struct LppScaling {
  double center = 0.0;
  double scale = 1.0;
};

LppScaling lpp_scaling(int N, int n, LppRegime regime);

// Asymptotic law of the scaled passage time at scaled position s:
//   leading   = exp(-int_s^inf sigma0)                    (Tracy-Widom CDF)
//   corrected = leading * (1 - N^{-2/3} int_s^inf sigma1)
// where sigma1 is the Laguerre correction profile matching the regime
// (fixed exponent, or proportional with alpha = (n-N)/N), both at full
// retention.  Positions below the solved ODE range clamp to zero, where the
// law is zero to double precision anyway.
struct LppCdf {
  double leading = 0.0;
  double corrected = 0.0;
};

LppCdf lpp_asymptotic_cdf(int N, int n, double s, LppRegime regime);
std::vector<LppCdf> lpp_asymptotic_cdf(int N, int n,
                                       const std::vector<double>& s,
                                       LppRegime regime);

}  // namespace softedge::simulate
