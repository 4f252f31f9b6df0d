#include "softedge/samplers.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "softedge/kernels.hpp"
#include "softedge/threads.hpp"

namespace softedge::simulate {

namespace {

constexpr double kInvSqrt2 = 0.70710678118654752440;

// Smallest m with (1-xi)^m <= 1e-9, capped at N. At m = N the thinning is
// exact; otherwise the neglected event (all examined eigenvalues deleted but
// a lower one surviving) has probability below 1e-9 per draw.
int thinning_depth(int N, double xi) {
  if (xi >= 1.0) return 1;
  double q = 1.0 - xi;
  int m = static_cast<int>(std::ceil(std::log(1e-9) / std::log(q)));
  return std::clamp(m, 1, N);
}

// Map a raw largest eigenvalue to the requested scaled variable.
double apply_scaling(double lam, kernels::Ensemble ens, int N, double a, Scaling sc) {
  using kernels::EdgeScaling;
  switch (sc) {
    case Scaling::Raw:
      return lam;
    case Scaling::Edge:
    case Scaling::CC: {
      EdgeScaling m = ens == kernels::Ensemble::GUE ? EdgeScaling::gue(N)
                                                    : EdgeScaling::lue_fixed(N, a);
      return (lam - m.s(0.0)) / m.jacobian();
    }
    case Scaling::CC2: {
      EdgeScaling m = EdgeScaling::gue(N);
      return (lam - m.s(0.0)) / m.jacobian() + 0.5 / std::cbrt(static_cast<double>(N));
    }
    case Scaling::EdgeAlpha: {
      EdgeScaling m = EdgeScaling::lue_alpha(N, a / N);
      return (lam - m.s(0.0)) / m.jacobian();
    }
  }
  throw std::domain_error("unknown scaling");
}

// One thinned draw from a tridiagonal model: the largest surviving
// eigenvalue, or no value (atom) when every eigenvalue is deleted.
template <typename Model>
bool thinned_max(const Model& model, int N, double xi, rng::Stream& g, double& out) {
  TridiagonalMatrix T = model(g);
  if (xi >= 1.0) {
    out = tridiag_kth_largest(T, 1);
    return true;
  }
  int m = thinning_depth(N, xi);
  for (int k = 1; k <= m; ++k) {
    double lam = tridiag_kth_largest(T, k);
    if (g.bernoulli(xi)) {
      out = lam;
      return true;
    }
  }
  return false;
}

template <typename Model>
SampleBatch run_batch(const char* ensemble, kernels::Ensemble ens, int N, double a,
                      double xi, Scaling scaling, std::size_t count,
                      std::uint64_t seed, int threads, const Model& model) {
  if (N < 1) throw std::domain_error("N must be at least 1");
  if (!(xi > 0.0 && xi <= 1.0)) throw std::domain_error("xi must lie in (0, 1]");
  if (ens == kernels::Ensemble::GUE && scaling == Scaling::EdgeAlpha)
    throw std::domain_error("EdgeAlpha scaling applies to the Laguerre family");
  if (ens == kernels::Ensemble::LUEFixedA &&
      (scaling == Scaling::CC || scaling == Scaling::CC2))
    throw std::domain_error("CC centrings apply to the Gaussian family");
  if (scaling == Scaling::EdgeAlpha && !(a > 0.0))
    throw std::domain_error("EdgeAlpha scaling needs a > 0");

  std::vector<double> raw(count);
  std::vector<std::uint8_t> alive(count);
  parallel_for(static_cast<int>(count), threads, [&](int i) {
    rng::Stream g(seed, static_cast<std::uint64_t>(i));
    double lam = 0.0;
    alive[i] = thinned_max(model, N, xi, g, lam) ? 1 : 0;
    raw[i] = lam;
  });

  SampleBatch batch;
  batch.ensemble = ensemble;
  batch.N = N;
  batch.a = a;
  if (scaling == Scaling::EdgeAlpha) batch.alpha = a / N;
  batch.xi = xi;
  batch.seed = seed;
  batch.scaling = scaling;
  batch.values.reserve(count);
  for (std::size_t i = 0; i < count; ++i) {
    if (alive[i])
      batch.values.push_back(apply_scaling(raw[i], ens, N, a, scaling));
    else
      ++batch.atom_count;
  }
  return batch;
}

}  // namespace

const char* scaling_label(Scaling s) {
  switch (s) {
    case Scaling::Raw: return "raw";
    case Scaling::Edge: return "edge";
    case Scaling::EdgeAlpha: return "edge-alpha";
    case Scaling::CC: return "cc";
    case Scaling::CC2: return "cc2";
  }
  return "?";
}

TridiagonalMatrix gue_tridiagonal(int N, rng::Stream& g) {
  TridiagonalMatrix T;
  T.diag.resize(N);
  T.off.resize(N > 0 ? N - 1 : 0);
  for (int i = 0; i < N; ++i) T.diag[i] = g.normal() * kInvSqrt2;
  for (int k = 1; k < N; ++k)
    T.off[k - 1] = std::sqrt(0.5 * g.gamma(static_cast<double>(N - k)));
  return T;
}

TridiagonalMatrix lue_tridiagonal(int N, double a, rng::Stream& g) {
  // B B^T of the lower bidiagonal B with b_i^2 ~ Gamma(a+N-i+1, 1) and
  // subdiagonal c_i^2 ~ Gamma(N-i, 1), i = 1..N.
  std::vector<double> b(N), c(N > 0 ? N - 1 : 0);
  for (int i = 1; i <= N; ++i) b[i - 1] = std::sqrt(g.gamma(a + (N - i + 1)));
  for (int i = 1; i < N; ++i) c[i - 1] = std::sqrt(g.gamma(static_cast<double>(N - i)));
  TridiagonalMatrix T;
  T.diag.resize(N);
  T.off.resize(N > 0 ? N - 1 : 0);
  for (int i = 0; i < N; ++i) {
    double prev = i > 0 ? c[i - 1] : 0.0;
    T.diag[i] = b[i] * b[i] + prev * prev;
    if (i + 1 < N) T.off[i] = b[i] * c[i];
  }
  return T;
}

std::vector<std::complex<double>> wigner4_dense(int N, rng::Stream& g) {
  // X entries i.i.d. uniform over {(+-1 +- i)/sqrt(2)}; Y = (X + X^dagger)/2.
  std::vector<std::complex<double>> Y(static_cast<std::size_t>(N) * N);
  auto draw = [&]() -> std::complex<double> {
    std::uint64_t bits = g.next_u64();
    return {bits & 1 ? kInvSqrt2 : -kInvSqrt2, bits & 2 ? kInvSqrt2 : -kInvSqrt2};
  };
  for (int i = 0; i < N; ++i) {
    for (int j = 0; j < N; ++j) {
      std::complex<double> x = draw();
      if (j > i) {
        Y[i * N + j] += 0.5 * x;        // X_ij / 2
        Y[j * N + i] += 0.5 * std::conj(x);
      } else if (j < i) {
        Y[i * N + j] += 0.5 * x;
        Y[j * N + i] += 0.5 * std::conj(x);
      } else {
        Y[i * N + i] = x.real();  // (X_ii + conj(X_ii))/2
      }
    }
  }
  return Y;
}

TridiagonalMatrix hermitian_tridiagonalize(std::vector<std::complex<double>> A, int N) {
  TridiagonalMatrix T;
  T.diag.resize(N);
  T.off.assign(N > 0 ? N - 1 : 0, 0.0);
  if (N == 1) {
    T.diag[0] = A[0].real();
    return T;
  }
  std::vector<std::complex<double>> v(N), p(N);
  for (int k = 0; k < N - 2; ++k) {
    // Reflect column k below the diagonal onto a single real entry.
    double nrm2 = 0.0;
    for (int i = k + 1; i < N; ++i) nrm2 += std::norm(A[i * N + k]);
    double nrm = std::sqrt(nrm2);
    T.diag[k] = A[k * N + k].real();
    if (nrm == 0.0) {
      T.off[k] = 0.0;
      continue;
    }
    std::complex<double> head = A[(k + 1) * N + k];
    double habs = std::abs(head);
    std::complex<double> phase = habs > 0.0 ? head / habs : std::complex<double>(1.0, 0.0);
    // v = x + phase * |x| * e_1 avoids cancellation in the leading entry.
    double vv = 0.0;
    for (int i = k + 1; i < N; ++i) {
      v[i] = A[i * N + k];
      if (i == k + 1) v[i] += phase * nrm;
      vv += std::norm(v[i]);
    }
    double tau = 2.0 / vv;
    // p = tau * A v over the trailing block; K = tau/2 * v^H p; w = p - K v;
    // A <- A - v w^H - w v^H keeps the block Hermitian.
    std::complex<double> K(0.0, 0.0);
    for (int i = k + 1; i < N; ++i) {
      std::complex<double> s(0.0, 0.0);
      for (int j = k + 1; j < N; ++j) s += A[i * N + j] * v[j];
      p[i] = tau * s;
      K += std::conj(v[i]) * p[i];
    }
    K *= 0.5 * tau;
    for (int i = k + 1; i < N; ++i) p[i] -= K * v[i];
    for (int i = k + 1; i < N; ++i) {
      for (int j = k + 1; j <= i; ++j) {
        std::complex<double> upd =
            A[i * N + j] - v[i] * std::conj(p[j]) - p[i] * std::conj(v[j]);
        A[i * N + j] = upd;
        A[j * N + i] = std::conj(upd);
      }
    }
    // The reflected column is (-phase * nrm) e_1; only its magnitude matters
    // for the Sturm counts (a diagonal phase similarity makes it real).
    T.off[k] = nrm;
    A[(k + 1) * N + k] = -phase * nrm;
  }
  T.diag[N - 2] = A[(N - 2) * N + (N - 2)].real();
  T.diag[N - 1] = A[(N - 1) * N + (N - 1)].real();
  T.off[N - 2] = std::abs(A[(N - 1) * N + (N - 2)]);
  return T;
}

double tridiag_kth_largest(const TridiagonalMatrix& T, int k) {
  const int n = static_cast<int>(T.diag.size());
  if (n == 0) throw std::domain_error("empty matrix");
  if (k < 1 || k > n) throw std::domain_error("eigenvalue index out of range");
  if (n == 1) return T.diag[0];

  // Gershgorin bounds.
  double lo = T.diag[0], hi = T.diag[0];
  for (int i = 0; i < n; ++i) {
    double r = (i > 0 ? std::abs(T.off[i - 1]) : 0.0) +
               (i + 1 < n ? std::abs(T.off[i]) : 0.0);
    lo = std::min(lo, T.diag[i] - r);
    hi = std::max(hi, T.diag[i] + r);
  }

  // Sturm count: number of eigenvalues strictly below x.
  auto count_below = [&](double x) {
    int cnt = 0;
    double q = T.diag[0] - x;
    if (q < 0.0) ++cnt;
    for (int i = 1; i < n; ++i) {
      double denom = q;
      if (std::abs(denom) < 1e-300) denom = denom < 0.0 ? -1e-300 : 1e-300;
      q = T.diag[i] - x - T.off[i - 1] * T.off[i - 1] / denom;
      if (q < 0.0) ++cnt;
    }
    return cnt;
  };

  const int m = n - k + 1;  // ascending index (1-based) of the k-th largest
  const double scale = std::max({1.0, std::abs(lo), std::abs(hi)});
  while (hi - lo > 1e-13 * scale) {
    double mid = 0.5 * (lo + hi);
    if (count_below(mid) >= m)
      hi = mid;
    else
      lo = mid;
  }
  return 0.5 * (lo + hi);
}

SampleBatch sample_gue_max(int N, std::size_t count, std::uint64_t seed, double xi,
                           Scaling scaling, int threads) {
  auto model = [N](rng::Stream& g) { return gue_tridiagonal(N, g); };
  return run_batch("gue", kernels::Ensemble::GUE, N, 0.0, xi, scaling, count, seed,
                   threads, model);
}

SampleBatch sample_lue_max(int N, double a, std::size_t count, std::uint64_t seed,
                           double xi, Scaling scaling, int threads) {
  if (a < 0.0) throw std::domain_error("a must be nonnegative");
  auto model = [N, a](rng::Stream& g) { return lue_tridiagonal(N, a, g); };
  return run_batch("lue", kernels::Ensemble::LUEFixedA, N, a, xi, scaling, count, seed,
                   threads, model);
}

SampleBatch sample_wigner4_max(int N, std::size_t count, std::uint64_t seed,
                               Scaling centring, int threads) {
  if (N < 2) throw std::domain_error("the four-point ensemble needs N >= 2");
  if (centring != Scaling::Raw && centring != Scaling::CC && centring != Scaling::CC2)
    throw std::domain_error("four-point centring must be raw, cc or cc2");
  auto model = [N](rng::Stream& g) {
    return hermitian_tridiagonalize(wigner4_dense(N, g), N);
  };
  auto batch = run_batch("wigner4", kernels::Ensemble::GUE, N, 0.0, 1.0, centring,
                         count, seed, threads, model);
  return batch;
}

}  // namespace softedge::simulate
