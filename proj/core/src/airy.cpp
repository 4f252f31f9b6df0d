#include "softedge/airy.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace softedge::specfun {
namespace {

// Ai(0) = 3^{-2/3}/Gamma(2/3) and -Ai'(0) = 3^{-1/3}/Gamma(1/3).
constexpr long double kC1 = 0.355028053887817239260063186004L;
constexpr long double kC2 = 0.258819403792806798405183560189L;
constexpr long double kInvTwoSqrtPi = 0.282094791773878143474039725780L;  // 1/(2 sqrt(pi))
constexpr long double kInvSqrtPi = 0.564189583547756286948079451561L;     // 1/sqrt(pi)
constexpr long double kQuarterPi = 0.785398163397448309615660845820L;

struct PairL {
  long double ai, aip;
};

// Maclaurin series, DLMF 9.4.1-9.4.4: Ai = c1 f - c2 g.
// Accurate (in absolute terms) up to |x| ~ 6.5 in long double; beyond that the
// intermediate terms grow large enough that cancellation eats the budget.
PairL maclaurin(long double x) {
  const long double x3 = x * x * x;
  long double u = 1.0L;            // terms of f
  long double v = x;               // terms of g
  long double w = 0.5L * x * x;    // terms of f'
  long double t = 1.0L;            // terms of g'
  long double f = u, g = v, fp = w, gp = t;
  for (int k = 0; k < 200; ++k) {
    u *= x3 / ((3.0L * k + 2) * (3.0L * k + 3));
    v *= x3 / ((3.0L * k + 3) * (3.0L * k + 4));
    t *= x3 / ((3.0L * k + 1) * (3.0L * k + 3));
    w *= x3 / ((3.0L * (k + 1)) * (3.0L * (k + 1) + 2));
    f += u;
    g += v;
    fp += w;
    gp += t;
    const long double resid = fabsl(u) + fabsl(v) + fabsl(w) + fabsl(t);
    const long double scale = fabsl(f) + fabsl(g) + fabsl(fp) + fabsl(gp) + 1.0L;
    if (resid < 1e-24L * scale) break;
  }
  return {kC1 * f - kC2 * g, kC1 * fp - kC2 * gp};
}

// Coefficients u_k (and v_k = u_k (6k+1)/(1-6k)) of the asymptotic expansions,
// DLMF 9.7.2. Generated on the fly; |terms| are truncated at their minimum.
struct AsymptoticSums {
  long double su, sv;  // alternating sums for Ai and Ai'
};

// Exponential region, DLMF 9.7.5/9.7.6:
//   Ai(x)  =  exp(-z)/(2 sqrt(pi) x^{1/4}) * sum (-1)^k u_k z^-k
//   Ai'(x) = -x^{1/4} exp(-z)/(2 sqrt(pi)) * sum (-1)^k v_k z^-k
PairL asymptotic_positive(long double x) {
  const long double z = (2.0L / 3.0L) * x * sqrtl(x);
  long double uk = 1.0L, su = 1.0L, sv = 1.0L;
  long double zi = 1.0L;
  long double prev = 1.0L;
  long double sign = -1.0L;
  for (int k = 1; k < 60; ++k) {
    uk *= (6.0L * k - 5) * (6.0L * k - 3) * (6.0L * k - 1) /
          (216.0L * k * (2.0L * k - 1));
    zi /= z;
    const long double term = uk * zi;
    if (term > prev) break;  // optimal truncation
    su += sign * term;
    sv += sign * term * (6.0L * k + 1) / (1.0L - 6.0L * k);
    prev = term;
    sign = -sign;
    if (term < 1e-24L) break;
  }
  const long double e = expl(-z);
  const long double x4 = sqrtl(sqrtl(x));
  return {kInvTwoSqrtPi * e / x4 * su, -kInvTwoSqrtPi * e * x4 * sv};
}

// Oscillatory region, DLMF 9.7.9/9.7.10, with chi = z - pi/4:
//   Ai(-t)  = (cos(chi) Sc + sin(chi) Ss) / (sqrt(pi) t^{1/4})
//   Ai'(-t) = (sin(chi) Ts - cos(chi) Tc) * t^{1/4} / sqrt(pi)
// where Sc/Ss (Ts/Tc) split the u_k (v_k) sequence into even/odd parts.
PairL asymptotic_negative(long double x) {
  const long double tpos = -x;
  const long double z = (2.0L / 3.0L) * tpos * sqrtl(tpos);
  long double sc = 0.0L, ss = 0.0L, ts = 0.0L, tc = 0.0L;
  long double uk = 1.0L, zi = 1.0L, prev = 1.0L;
  for (int k = 0; k < 60; ++k) {
    if (k > 0) {
      uk *= (6.0L * k - 5) * (6.0L * k - 3) * (6.0L * k - 1) /
            (216.0L * k * (2.0L * k - 1));
      zi /= z;
    }
    const long double term = uk * zi;
    if (k > 0 && term > prev) break;
    const long double vterm = term * (6.0L * k + 1) / (1.0L - 6.0L * k);
    // (-1)^m with m = k/2 for the even/odd subsequences.
    const long double s = (k % 4 < 2) ? 1.0L : -1.0L;
    if (k % 2 == 0) {
      sc += s * term;
      ts += s * vterm;
    } else {
      ss += s * term;
      tc += s * vterm;
    }
    prev = term;
    if (term < 1e-26L) break;
  }
  const long double chi = z - kQuarterPi;
  const long double c = cosl(chi), s = sinl(chi);
  const long double t4 = sqrtl(sqrtl(tpos));
  return {kInvSqrtPi * (c * sc + s * ss) / t4,
          kInvSqrtPi * (s * ts - c * tc) * t4};
}

// Taylor-series integration of y'' = x y from x0 with y(x0)=a0, y'(x0)=a1;
// coefficients satisfy (k+1)(k+2) a_{k+2} = x0 a_k + a_{k-1}.
void taylor_step(long double x0, long double h, long double& y, long double& yp) {
  long double a[28];
  a[0] = y;
  a[1] = yp;
  a[2] = 0.5L * x0 * a[0];
  for (int k = 1; k + 2 < 28; ++k)
    a[k + 2] = (x0 * a[k] + a[k - 1]) / ((k + 1.0L) * (k + 2.0L));
  long double v = 0.0L, vp = 0.0L;
  for (int k = 27; k >= 0; --k) {
    v = v * h + a[k];
    if (k >= 1) vp = vp * h + k * a[k];
  }
  y = v;
  yp = vp;
}

// Bridge region (-12, -6.5): march the Airy ODE from -6.5 in steps <= 0.5.
PairL ode_bridge(long double x) {
  const long double start = -6.5L;
  PairL p = maclaurin(start);
  long double y = p.ai, yp = p.aip, x0 = start;
  const long double span = x - start;  // negative
  const int nstep = static_cast<int>(ceill(fabsl(span) / 0.5L));
  const long double h = span / nstep;
  for (int i = 0; i < nstep; ++i) {
    taylor_step(x0, h, y, yp);
    x0 += h;
  }
  return {y, yp};
}

}  // namespace

AiryPair airy(double x) {
  if (!std::isfinite(x))
    throw std::domain_error("airy: non-finite argument " + std::to_string(x));
  PairL p;
  if (x > 6.5)
    p = asymptotic_positive(x);
  else if (x >= -6.5)
    p = maclaurin(x);
  else if (x > -12.0)
    p = ode_bridge(x);
  else
    p = asymptotic_negative(x);
  return {x, static_cast<double>(p.ai), static_cast<double>(p.aip)};
}

}  // namespace softedge::specfun
