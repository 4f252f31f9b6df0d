#include "softedge/lpp.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>
#include <utility>

#include "softedge/kernels.hpp"
#include "softedge/painleve.hpp"
#include "softedge/rng.hpp"
#include "softedge/threads.hpp"

namespace softedge::simulate {

namespace {

void validate_grid(int rows, int cols) {
  if (rows < 1) throw std::domain_error("lpp grid needs at least one row");
  if (cols < rows)
    throw std::domain_error("lpp grid needs at least as many cols as rows");
}

kernels::EdgeScaling regime_map(int N, int n, LppRegime regime) {
  validate_grid(N, n);
  if (regime == LppRegime::FixedA)
    return kernels::EdgeScaling::lue_fixed(N, double(n - N));
  if (n <= N)
    throw std::domain_error("the proportional lpp regime needs cols > rows");
  return kernels::EdgeScaling::lue_alpha(N, double(n - N) / double(N));
}

}  // namespace

double lpp_value(const std::vector<double>& weights, int rows, int cols) {
  if (rows < 1 || cols < 1)
    throw std::domain_error("lpp weights need at least one row and one column");
  if (weights.size() != std::size_t(rows) * std::size_t(cols))
    throw std::domain_error("lpp weight matrix does not match rows * cols");
  const double kNegInf = -std::numeric_limits<double>::infinity();
  // Rolling-row dynamic program: when column j of row i is processed,
  // ell[j] still holds the row-(i-1) value (the up neighbour) while
  // ell[j-1] already holds the row-i value (the left neighbour).
  std::vector<double> ell(std::size_t(cols), 0.0);
  for (int i = 0; i < rows; ++i) {
    for (int j = 0; j < cols; ++j) {
      double up = i > 0 ? ell[std::size_t(j)] : kNegInf;
      double left = j > 0 ? ell[std::size_t(j) - 1] : kNegInf;
      double best = std::max(up, left);
      if (i == 0 && j == 0) best = 0.0;
      ell[std::size_t(j)] = weights[std::size_t(i) * cols + j] + best;
    }
  }
  return ell[std::size_t(cols) - 1];
}

SampleBatch lpp_sample(const LppGrid& grid, std::size_t count,
                       std::uint64_t seed, Scaling scaling, int threads) {
  validate_grid(grid.N, grid.n);
  if (scaling == Scaling::CC || scaling == Scaling::CC2)
    throw std::domain_error("the Wigner centrings do not apply to the lpp model");
  const int rows = grid.N;
  const int cols = grid.n;
  const double a = double(cols - rows);

  double center = 0.0;
  double scale = 1.0;
  if (scaling == Scaling::Edge) {
    const auto m = regime_map(rows, cols, LppRegime::FixedA);
    center = m.s(0.0);
    scale = m.jacobian();
  } else if (scaling == Scaling::EdgeAlpha) {
    const auto m = regime_map(rows, cols, LppRegime::Alpha);
    center = m.s(0.0);
    scale = m.jacobian();
  }

  std::vector<double> values(count);
  const int nthreads = resolve_threads(threads);
  parallel_for(int(count), nthreads, [&](int i) {
    rng::Stream stream(seed, std::uint64_t(i));
    std::vector<double> w(std::size_t(rows) * std::size_t(cols));
    for (double& x : w) x = stream.exponential();
    values[std::size_t(i)] = (lpp_value(w, rows, cols) - center) / scale;
  });

  SampleBatch batch;
  batch.ensemble = "lpp";
  batch.N = rows;
  batch.a = a;
  batch.alpha = scaling == Scaling::EdgeAlpha ? a / double(rows) : 0.0;
  batch.xi = 1.0;
  batch.seed = seed;
  batch.scaling = scaling;
  batch.values = std::move(values);
  batch.atom_count = 0;
  return batch;
}

LppScaling lpp_scaling(int N, int n, LppRegime regime) {
  const auto m = regime_map(N, n, regime);
  return {m.s(0.0), m.jacobian()};
}

std::vector<LppCdf> lpp_asymptotic_cdf(int N, int n,
                                       const std::vector<double>& s,
                                       LppRegime regime) {
  regime_map(N, n, regime);  // validates the shape for the regime
  painleve::SigmaVariant variant = painleve::SigmaVariant::LUE;
  double alpha = 0.0;
  if (regime == LppRegime::Alpha) {
    variant = painleve::SigmaVariant::LUEAlpha;
    alpha = double(n - N) / double(N);
  }

  const auto sigma0 = painleve::solve_sigma0(1.0);
  const auto sol = painleve::solve_sigma1(variant, sigma0, alpha);
  const double floor_y = std::max(sol.y_min(), sol.sigma1_y_min);
  const double npow = std::pow(double(N), -2.0 / 3.0);

  std::vector<LppCdf> out(s.size());
  for (std::size_t i = 0; i < s.size(); ++i) {
    if (s[i] < floor_y) {
      out[i] = {0.0, 0.0};
      continue;
    }
    const double leading = std::exp(-sol.sigma0_tail_integral(s[i]));
    const double corr = sol.sigma1_tail_integral(s[i]);
    out[i] = {leading, leading * (1.0 - npow * corr)};
  }
  return out;
}

LppCdf lpp_asymptotic_cdf(int N, int n, double s, LppRegime regime) {
  return lpp_asymptotic_cdf(N, n, std::vector<double>{s}, regime).front();
}

}  // namespace softedge::simulate
