#pragma once
// Monte Carlo largest-eigenvalue samplers.
//
// GUE and LUE draws use the beta = 2 tridiagonal / bidiagonal matrix models
// (O(N^2) per sample), with the conventions fixed so the eigenvalue weights
// are e^{-x^2} and x^a e^{-x} respectively; the four-point ensemble has no
// such shortcut and reduces the dense Hermitian matrix by Householder
// reflections. The largest eigenvalues come from Sturm-sequence bisection.

#include <complex>
#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "softedge/rng.hpp"

namespace softedge::simulate {

// How raw draws are mapped before they are stored:
//   Raw       - no transformation
//   Edge      - the ensemble's soft-edge map: t = sqrt(2) N^{1/6} (l - sqrt(2N))
//               for the Gaussian family, t = (l - 4N - 2a) / (2 (2N)^{1/3})
//               for the Laguerre family
//   EdgeAlpha - Laguerre map in the proportional regime alpha = a/N:
//               centre N (sqrt(1+alpha)+1)^2, scale
//               N^{1/3} (sqrt(1+alpha)+1) (1/sqrt(1+alpha)+1)^{1/3}
//   CC        - the Gaussian Edge map (kept as a distinct tag for the
//               four-point ensemble's centring studies)
//   CC2       - CC shifted by +1/(2 N^{1/3}), which cancels the leading
//               finite-size offset of the four-point ensemble
enum class Scaling { Raw, Edge, EdgeAlpha, CC, CC2 };

const char* scaling_label(Scaling s);

struct SampleBatch {
  std::string ensemble;  // "gue" | "lue" | "wigner4" | "lpp"
  int N = 0;
  double a = 0.0;      // Laguerre exponent (= n - N for the percolation model)
  double alpha = 0.0;  // a / N, recorded when the EdgeAlpha map is used
  double xi = 1.0;     // thinning retention probability
  std::uint64_t seed = 0;
  Scaling scaling = Scaling::Raw;
  std::vector<double> values;     // one scaled draw per surviving sample
  std::uint64_t atom_count = 0;   // thinned draws in which no eigenvalue survived
  std::size_t count() const { return values.size(); }
};

// --- building blocks (exposed so tests can cross-check them) ---

struct TridiagonalMatrix {
  std::vector<double> diag;
  std::vector<double> off;  // diag.size() - 1 entries
};

// beta = 2 Gaussian model: eigenvalue density prop. to
// prod e^{-x_i^2} prod_{i<j} (x_i - x_j)^2. Diagonal N(0, 1/2), off-diagonal
// sqrt(Gamma(N-k, 1)/2) (i.e. chi with 2(N-k) degrees of freedom, halved).
TridiagonalMatrix gue_tridiagonal(int N, rng::Stream& g);

// beta = 2 Laguerre model: density prop. to prod x_i^a e^{-x_i} prod (x_i-x_j)^2.
// Formed as B B^T of the bidiagonal with b_i^2 ~ Gamma(a+N-i+1, 1),
// c_i^2 ~ Gamma(N-i, 1).
TridiagonalMatrix lue_tridiagonal(int N, double a, rng::Stream& g);

// Dense N x N Hermitian Y = (X + X^dagger)/2 with X entries i.i.d. uniform on
// the four points (+-1 +- i)/sqrt(2). Row-major.
std::vector<std::complex<double>> wigner4_dense(int N, rng::Stream& g);

// Householder reduction of a Hermitian matrix (row-major, destroyed) to a
// real symmetric tridiagonal with nonnegative off-diagonal.
TridiagonalMatrix hermitian_tridiagonalize(std::vector<std::complex<double>> A, int N);

// k-th largest eigenvalue (k = 1 is the maximum) by Sturm bisection, to
// within ~1e-12 relative to the spectral scale.
double tridiag_kth_largest(const TridiagonalMatrix& T, int k);

// --- samplers ---
// Every sample i of a batch draws from rng::Stream(seed, i), so batches are
// bit-for-bit identical for a given (parameters, seed) regardless of the
// thread count. xi < 1 deletes each eigenvalue independently with probability
// 1 - xi and records the largest survivor; draws losing every eigenvalue are
// counted in atom_count instead of values. Only the top m eigenvalues are
// examined, with m the smallest integer such that (1-xi)^m <= 1e-9 (capped
// at N; exact whenever m = N).

SampleBatch sample_gue_max(int N, std::size_t count, std::uint64_t seed,
                           double xi = 1.0, Scaling scaling = Scaling::Edge,
                           int threads = 1);

SampleBatch sample_lue_max(int N, double a, std::size_t count, std::uint64_t seed,
                           double xi = 1.0, Scaling scaling = Scaling::Edge,
                           int threads = 1);

// centring must be Raw, CC or CC2.
SampleBatch sample_wigner4_max(int N, std::size_t count, std::uint64_t seed,
                               Scaling centring = Scaling::CC, int threads = 1);

}  // namespace softedge::simulate
