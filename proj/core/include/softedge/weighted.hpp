#pragma once

namespace softedge::specfun {

// phi_n(x) = p_n(x) sqrt(w(x)) / sqrt(h_n): orthonormal polynomial times the
// square root of its weight, so that {phi_n} is orthonormal on the line
// (Hermite, w = exp(-x^2)) or half line (Laguerre, w = x^a exp(-x)).
struct WeightedPolyValue {
  int n;
  double a;  // Laguerre parameter (0 for Hermite)
  double x;
  double phi;
};

// Two consecutive weighted values held as (mantissa, power-of-two exponent):
//   phi_n = phi_n_m * 2^exp2,  phi_{n-1} = phi_nm1_m * 2^exp2.
// Keeping the shared exponent symbolic lets kernel assembly form cross
// products of two pairs without ever materialising values that would
// overflow or underflow a double (relevant once n is a few hundred).
struct WeightedPair {
  int n;
  double a;
  double x;
  double phi_n_m;
  double phi_nm1_m;
  int exp2;
};

// Evaluate the pair (phi_n, phi_{n-1}) by the three-term recurrence with
// periodic renormalisation. Hermite: any real x. Laguerre: x >= 0, a > -1
// (x < 0 raises std::domain_error). n >= 0; n = 0 sets phi_{-1} = 0.
WeightedPair hermite_pair(int n, double x);
WeightedPair laguerre_pair(int n, double a, double x);

// Mantissas (at the pair's exp2) of the first derivatives phi_n' and
// phi_{n-1}', from the ladder relations:
//   Hermite : phi_n'     = sqrt(2n) phi_{n-1} - x phi_n
//             phi_{n-1}' = x phi_{n-1} - sqrt(2n) phi_n
//   Laguerre: phi_n'     = (n/x + a/(2x) - 1/2) phi_n + sqrt(n(n+a))/x phi_{n-1}
//             phi_{n-1}' = (1/2 - (n + a/2)/x) phi_{n-1} - sqrt(n(n+a))/x phi_n
// Laguerre requires x > 0.
struct PairDerivs {
  double dphi_n_m;
  double dphi_nm1_m;
};
PairDerivs hermite_pair_derivs(const WeightedPair& p);
PairDerivs laguerre_pair_derivs(const WeightedPair& p);

// Convenience single-value evaluations (may quietly under/overflow the
// double range when |exp2| is extreme; the pair form never does).
WeightedPolyValue hermite_weighted(int n, double x);
WeightedPolyValue laguerre_weighted(int n, double a, double x);

}  // namespace softedge::specfun
