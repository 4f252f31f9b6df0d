#pragma once

#include <vector>

namespace softedge::kernels {

// Which integral-operator kernel a computation refers to.
//
//   AiryLimit          : K(x,y) = (Ai(x)Ai'(y) - Ai'(x)Ai(y)) / (x-y)
//   CorrectionGUE      : first-order edge correction kernel, Gaussian ensemble
//   CorrectionLUE      : first-order edge correction kernel, Laguerre ensemble,
//                        fixed parameter
//   CorrectionLUEAlpha : correction kernel for parameter growing as alpha*N
//   FiniteGUE          : Christoffel-Darboux kernel of the Gaussian ensemble,
//                        pushed through the edge scaling
//   FiniteLUE          : same for the Laguerre ensemble
enum class KernelKind {
  AiryLimit,
  CorrectionGUE,
  CorrectionLUE,
  CorrectionLUEAlpha,
  FiniteGUE,
  FiniteLUE,
};

struct KernelSpec {
  KernelKind kind = KernelKind::AiryLimit;
  int N = 0;           // matrix size (finite kinds)
  double a = 0.0;      // Laguerre parameter held fixed (FiniteLUE)
  double alpha = 0.0;  // proportional parameter a = alpha*N (alpha kinds)
  bool proportional = false;  // FiniteLUE: a grows as alpha*N

  static KernelSpec airy();
  static KernelSpec correction_gue();
  static KernelSpec correction_lue();
  static KernelSpec correction_lue_alpha(double alpha);
  static KernelSpec finite_gue(int N);
  static KernelSpec finite_lue(int N, double a);
  static KernelSpec finite_lue_alpha(int N, double alpha);

  bool finite() const {
    return kind == KernelKind::FiniteGUE || kind == KernelKind::FiniteLUE;
  }
  bool correction() const {
    return kind == KernelKind::CorrectionGUE || kind == KernelKind::CorrectionLUE ||
           kind == KernelKind::CorrectionLUEAlpha;
  }
};

enum class Ensemble { GUE, LUEFixedA, LUEAlpha };

// Affine map s(t) from edge-scaled coordinate t to the raw matrix variable,
// together with its (constant) Jacobian ds/dt.
//   GUE        : s = sqrt(2N) + t / (sqrt(2) N^{1/6})
//   LUE fixed a: s = 4N + 2a + 2 (2N)^{1/3} t
//   LUE alpha  : s = N (sqrt(1+alpha)+1)^2
//                  + N^{1/3} (sqrt(1+alpha)+1) (1/sqrt(1+alpha)+1)^{1/3} t
struct EdgeScaling {
  Ensemble ensemble = Ensemble::GUE;
  int N = 0;
  double a = 0.0;
  double alpha = 0.0;

  double s(double t) const;
  double jacobian() const;

  static EdgeScaling gue(int N);
  static EdgeScaling lue_fixed(int N, double a);
  static EdgeScaling lue_alpha(int N, double alpha);
};

// The edge scaling a finite KernelSpec implies.
EdgeScaling canonical_scaling(const KernelSpec& spec);

// Airy kernel; removable singularity on the diagonal is handled by a
// third-order Taylor expansion in u = (x-y)/2 once |x-y| < 1e-4.
double airy_kernel(double x, double y);

// First-order correction kernels (smooth closed forms in Ai, Ai').
enum class CorrectionVariant { GUE, LUE };
double correction_kernel(CorrectionVariant v, double x, double y);

// Alternate LUE correction candidate that differs from correction_kernel(LUE)
// in the coefficient pattern; kept so tests can compare the two candidates
// against the alpha->0 limit of the alpha family and record which one is
// consistent. Not used by any production path.
double correction_kernel_lue_alt(double x, double y);

// Correction kernel for the proportional regime (parameter = alpha*N).
// Evaluates a literal quotient form away from the diagonal and an exact
// algebraic refactoring of the same expression near it.
double correction_kernel_alpha(double alpha, double x, double y);

namespace detail {
// Both branches of correction_kernel_alpha, exposed for cross-checks:
// literal requires x != y, decomposed is valid everywhere.
double correction_alpha_literal(double alpha, double x, double y);
double correction_alpha_decomposed(double alpha, double x, double y);
}  // namespace detail

// Finite-N kernel pushed through an edge scaling:
//   jacobian * K_N(s(x), s(y))
// For the Laguerre ensemble, s(t) <= 0 raises std::domain_error (the
// caller decides how to clip grids; no silent clamping here).
double finite_kernel_scaled(const KernelSpec& spec, const EdgeScaling& sc,
                            double x, double y);

// Diagonal K_N(s, s) in the raw (unscaled) matrix variable; used by the
// density ODE validators. s > 0 required for the Laguerre ensemble.
double finite_kernel_raw_diag(const KernelSpec& spec, double s);

// Limit density and first-order density correction at y:
//   rho0 = Ai'(y)^2 - y Ai(y)^2 (all variants)
//   rho1 = diagonal of the matching correction kernel
struct DensityCorrection {
  double rho0;
  double rho1;
};
DensityCorrection density_correction(const KernelSpec& spec, double y);

// Uniform entry point used by the quadrature layer. Finite kinds take (x,y)
// in edge-scaled coordinates under their canonical scaling.
double kernel_eval(const KernelSpec& spec, double x, double y);

// Per-node cache so a Gram matrix over m nodes costs m special-function
// evaluations instead of m^2. prime() fixes the node set (kernel
// coordinates); at(i,j) then assembles entries from cached data, using the
// confluent (diagonal) forms when i == j.
class KernelEvaluator {
 public:
  explicit KernelEvaluator(const KernelSpec& spec);
  void prime(const std::vector<double>& pts);
  double at(int i, int j) const;
  const KernelSpec& spec() const { return spec_; }

 private:
  KernelSpec spec_;
  EdgeScaling scaling_;  // finite kinds only
  std::vector<double> pts_;
  // cached ingredients per node
  std::vector<double> ai_, aip_;          // limit/correction kinds
  std::vector<double> s_, fn_, fnm1_;     // finite kinds (mantissas)
  std::vector<int> e2_;
};

}  // namespace softedge::kernels
