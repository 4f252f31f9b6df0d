#pragma once

#include <vector>

#include "softedge/kernels.hpp"
#include "softedge/quadrature.hpp"

namespace softedge::fredholm {

struct DetResult {
  double value = 1.0;
  bool underflow = false;  // determinant below the double range; value is 0
};

// det(I - xi K) on (t, infinity), approximated by the determinant of the
// symmetrized Nystrom matrix I - xi D^{1/2} K D^{1/2} over the rule's nodes.
// Requires 0 <= xi <= 1.
DetResult fredholm_det(const kernels::KernelSpec& spec, double xi, double t,
                       const QuadratureRule& rule);

// Correction functional: -det(I - xi Kw) * Tr((I - xi Kw)^{-1} xi Lw).
// specL must be a correction kernel; specK is the matching limit (or the
// kernel the perturbation applies to). Throws std::runtime_error if
// I - xi Kw is numerically singular (signals a bad rule).
double omega(const kernels::KernelSpec& specK, const kernels::KernelSpec& specL,
             double xi, double t, const QuadratureRule& rule);

namespace detail {

// Row-major m x m symmetrized matrix xi * D^{1/2} K D^{1/2} (no identity).
std::vector<double> weighted_kernel_matrix(const kernels::KernelSpec& spec,
                                           double xi, const QuadratureRule& rule);

// In-place LU with partial pivoting. Returns false if a pivot collapses to
// the denormal range. det = sign * mant * 2^e2 with mant in [1,2) tracked
// exactly through frexp, so determinants far below 1e-308 keep their
// exponent information.
struct LuDet {
  double mant = 1.0;
  int e2 = 0;
  int sign = 1;
  bool ok = true;
  double value() const;
};
LuDet lu_factor(std::vector<double>& M, int m, std::vector<int>& piv);

// Solve L U x = b given the factorization (pivot order applied to b).
void lu_solve(const std::vector<double>& M, int m, const std::vector<int>& piv,
              std::vector<double>& b);

}  // namespace detail

}  // namespace softedge::fredholm
