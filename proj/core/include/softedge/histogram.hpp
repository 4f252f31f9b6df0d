#pragma once

#include <cstdint>
#include <vector>

#include "softedge/curves.hpp"
#include "softedge/samplers.hpp"

namespace softedge::simulate {

// Equal-width binning of scalar samples.  `density` divides each count by
// (total * width); when `total` exceeds the number of binned values (atoms
// from thinning, out-of-range samples) the densities integrate to the
// in-range fraction, never above one.
struct Histogram {
  std::vector<double> edges;          // bins + 1 ascending bin boundaries
  std::vector<std::uint64_t> counts;  // per-bin sample counts
  std::vector<double> density;        // counts / (total * bin width)
  std::uint64_t total = 0;            // normalising count (values + atoms)
  std::uint64_t in_range = 0;         // values that landed inside the edges
};

// Bins `values` over their own range.  `total` is the density normaliser and
// must be at least values.size().  bins == 0 selects the Freedman-Diaconis
// rule (width = 2 IQR n^{-1/3}), clamped to a sane bin count.
Histogram build_histogram(const std::vector<double>& values,
                          std::uint64_t total, int bins = 0);

// Same, with total = batch values plus the thinning atom count, so the
// densities integrate to the surviving-sample fraction.
Histogram build_histogram(const SampleBatch& batch, int bins = 0);

// Finite-size residual of an empirical density against a reference curve:
//   diff = N^{power} * (histogram density - p0 interpolated at bin centers)
// with p0 read from `reference` by cubic Hermite interpolation.  power must
// be 1/3 or 2/3; with power = 1/3 the least-squares coefficient c of
// d p0 / dt fitted to the residual is reported (has_c = true).  Every bin
// center must lie inside the reference grid.
struct CorrectionExtract {
  Histogram hist;
  std::vector<double> centers;  // bin midpoints
  std::vector<double> diff;     // scaled density residual per bin
  double power = 0.0;
  double c = 0.0;               // fitted coefficient of d p0 / dt
  bool has_c = false;
};

CorrectionExtract correction_extract(const SampleBatch& batch,
                                     const fredholm::DistributionCurve& reference,
                                     double power, int bins = 0);

}  // namespace softedge::simulate
