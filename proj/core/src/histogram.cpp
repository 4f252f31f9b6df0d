#include "softedge/histogram.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace softedge::simulate {

namespace {

constexpr int kMaxBins = 4096;

// Linear-interpolation quantile of a sorted sample (the classic type-7 rule:
// index p * (n - 1) interpolated between neighbours).
double sorted_quantile(const std::vector<double>& sorted, double p) {
  if (sorted.empty()) return 0.0;
  const double pos = p * double(sorted.size() - 1);
  const std::size_t lo = std::size_t(pos);
  if (lo + 1 >= sorted.size()) return sorted.back();
  const double frac = pos - double(lo);
  return sorted[lo] * (1.0 - frac) + sorted[lo + 1] * frac;
}

int freedman_diaconis_bins(const std::vector<double>& values, double lo,
                           double hi) {
  std::vector<double> sorted(values);
  std::sort(sorted.begin(), sorted.end());
  const double iqr = sorted_quantile(sorted, 0.75) - sorted_quantile(sorted, 0.25);
  const double width =
      2.0 * iqr * std::pow(double(values.size()), -1.0 / 3.0);
  if (!(width > 0.0)) return 1;
  const double raw = std::ceil((hi - lo) / width);
  if (!(raw >= 1.0)) return 1;
  if (raw > double(kMaxBins)) return kMaxBins;
  return int(raw);
}

// Cubic Hermite interpolant over a strictly increasing grid with
// central-difference slopes (one-sided at the ends).
struct HermiteInterp {
  const std::vector<double>& xs;
  const std::vector<double>& ys;
  std::vector<double> slopes;

  HermiteInterp(const std::vector<double>& x, const std::vector<double>& y)
      : xs(x), ys(y), slopes(x.size(), 0.0) {
    const std::size_t n = xs.size();
    if (n < 2) throw std::domain_error("reference curve needs at least two points");
    slopes[0] = (ys[1] - ys[0]) / (xs[1] - xs[0]);
    slopes[n - 1] = (ys[n - 1] - ys[n - 2]) / (xs[n - 1] - xs[n - 2]);
    for (std::size_t i = 1; i + 1 < n; ++i)
      slopes[i] = (ys[i + 1] - ys[i - 1]) / (xs[i + 1] - xs[i - 1]);
  }

  std::size_t segment(double x) const {
    if (x < xs.front() || x > xs.back())
      throw std::domain_error("reference curve does not cover the histogram range");
    std::size_t lo = 0, hi = xs.size() - 1;
    while (hi - lo > 1) {
      const std::size_t mid = (lo + hi) / 2;
      if (xs[mid] <= x)
        lo = mid;
      else
        hi = mid;
    }
    return lo;
  }

  double value(double x) const {
    const std::size_t k = segment(x);
    const double h = xs[k + 1] - xs[k];
    const double u = (x - xs[k]) / h;
    const double u2 = u * u, u3 = u2 * u;
    return ys[k] * (2.0 * u3 - 3.0 * u2 + 1.0) +
           slopes[k] * h * (u3 - 2.0 * u2 + u) +
           ys[k + 1] * (-2.0 * u3 + 3.0 * u2) + slopes[k + 1] * h * (u3 - u2);
  }

  double derivative(double x) const {
    const std::size_t k = segment(x);
    const double h = xs[k + 1] - xs[k];
    const double u = (x - xs[k]) / h;
    const double u2 = u * u;
    return (ys[k] * (6.0 * u2 - 6.0 * u) +
            slopes[k] * h * (3.0 * u2 - 4.0 * u + 1.0) +
            ys[k + 1] * (-6.0 * u2 + 6.0 * u) +
            slopes[k + 1] * h * (3.0 * u2 - 2.0 * u)) /
           h;
  }
};

}  // namespace

Histogram build_histogram(const std::vector<double>& values,
                          std::uint64_t total, int bins) {
  if (values.empty())
    throw std::domain_error("histogram needs at least one value");
  if (total < values.size())
    throw std::domain_error("histogram total must cover the binned values");
  if (bins < 0) throw std::domain_error("histogram bin count must be positive");

  auto [lo_it, hi_it] = std::minmax_element(values.begin(), values.end());
  double lo = *lo_it, hi = *hi_it;
  if (lo == hi) {
    // All samples coincide; widen to a unit-width single bin around them.
    lo -= 0.5;
    hi += 0.5;
    bins = 1;
  }
  if (bins == 0) bins = freedman_diaconis_bins(values, lo, hi);
  if (bins > kMaxBins) bins = kMaxBins;

  Histogram h;
  h.total = total;
  h.edges.resize(std::size_t(bins) + 1);
  for (int k = 0; k <= bins; ++k)
    h.edges[std::size_t(k)] = lo + (hi - lo) * double(k) / double(bins);
  h.edges.back() = hi;
  h.counts.assign(std::size_t(bins), 0);

  const double span = hi - lo;
  for (double v : values) {
    if (v < lo || v > hi) continue;
    int k = int((v - lo) / span * double(bins));
    k = std::clamp(k, 0, bins - 1);
    ++h.counts[std::size_t(k)];
    ++h.in_range;
  }

  h.density.resize(std::size_t(bins));
  for (int k = 0; k < bins; ++k) {
    const double width = h.edges[std::size_t(k) + 1] - h.edges[std::size_t(k)];
    h.density[std::size_t(k)] =
        double(h.counts[std::size_t(k)]) / (double(total) * width);
  }
  return h;
}

Histogram build_histogram(const SampleBatch& batch, int bins) {
  return build_histogram(batch.values, batch.values.size() + batch.atom_count,
                         bins);
}

CorrectionExtract correction_extract(const SampleBatch& batch,
                                     const fredholm::DistributionCurve& reference,
                                     double power, int bins) {
  const bool third = std::abs(power - 1.0 / 3.0) < 1e-12;
  const bool two_thirds = std::abs(power - 2.0 / 3.0) < 1e-12;
  if (!third && !two_thirds)
    throw std::domain_error("correction power must be 1/3 or 2/3");
  if (batch.N < 1)
    throw std::domain_error("correction extraction needs the batch size N");
  if (reference.p0.size() != reference.ts.size())
    throw std::domain_error("reference curve lacks a density column");

  CorrectionExtract out;
  out.power = power;
  out.hist = build_histogram(batch, bins);

  const HermiteInterp p0(reference.ts, reference.p0);
  const double npow = std::pow(double(batch.N), power);
  const std::size_t nb = out.hist.counts.size();
  out.centers.resize(nb);
  out.diff.resize(nb);
  for (std::size_t k = 0; k < nb; ++k) {
    out.centers[k] = 0.5 * (out.hist.edges[k] + out.hist.edges[k + 1]);
    out.diff[k] = npow * (out.hist.density[k] - p0.value(out.centers[k]));
  }

  if (third) {
    // Least-squares coefficient of d p0 / dt against the residual.
    double num = 0.0, den = 0.0;
    for (std::size_t k = 0; k < nb; ++k) {
      const double g = p0.derivative(out.centers[k]);
      num += out.diff[k] * g;
      den += g * g;
    }
    if (den > 0.0) {
      out.c = num / den;
      out.has_c = true;
    }
  }
  return out;
}

}  // namespace softedge::simulate
