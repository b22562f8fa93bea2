#pragma once

// Scalar special functions used by the norming and tail computations:
// standard normal survival/quantile (accurate in the deep tail, with a
// log-space variant that never underflows), log-gamma, and the Gumbel law.

#include <cmath>
#include <limits>
#include <stdexcept>

namespace gcl {

inline constexpr double kSqrt2     = 1.4142135623730950488;
inline constexpr double kLnTwoPi   = 1.8378770664093454836;  // ln(2*pi)
inline constexpr double kInvSqrt2Pi = 0.3989422804014326779; // (2*pi)^(-1/2)

/// A probability value, clamped to [0,1]. Gross violations (beyond floating
/// point slack) are rejected so bugs surface at the boundary they occur.
struct Probability {
  double value;
  Probability(double v) : value(v) {
    if (!(v >= -1e-12 && v <= 1.0 + 1e-12))
      throw std::domain_error("Probability out of [0,1]: " + std::to_string(v));
    if (value < 0.0) value = 0.0;
    if (value > 1.0) value = 1.0;
  }
  operator double() const { return value; }
};

namespace detail {

// Mills ratio R(u) = Phi_bar(u)/phi(u) via the Laplace continued fraction
// R(u) = 1/(u + 1/(u + 2/(u + 3/(...)))), backward recurrence.
// Depth 24 gives < 1e-17 relative error for u >= 6.
inline double mills_ratio_cf(double u) {
  double r = 0.0;
  for (int k = 24; k >= 1; --k) r = static_cast<double>(k) / (u + r);
  return 1.0 / (u + r);
}

inline double log_std_normal_pdf(double u) { return -0.5 * u * u - 0.5 * kLnTwoPi; }

}  // namespace detail

/// ln Phi_bar(u). Finite for every finite u: the deep upper tail is computed
/// from the Mills-ratio continued fraction, so there is no underflow even at
/// u ~ 1e7 where Phi_bar itself is far below the double range.
inline double std_normal_log_sf(double u) {
  if (u <= 6.0) {
    // erfc is accurate here and Phi_bar is comfortably representable
    return std::log(0.5 * std::erfc(u / kSqrt2));
  }
  return detail::log_std_normal_pdf(u) + std::log(detail::mills_ratio_cf(u));
}

/// Standard normal survival function Phi_bar(u) = P(N(0,1) > u).
/// Relative error a few ulp where the value is representable; underflows
/// gradually to 0 beyond u ~ 38.5 (use std_normal_log_sf there).
inline Probability std_normal_sf(double u) {
  if (std::isnan(u)) throw std::domain_error("std_normal_sf: NaN input");
  if (u < 0.0) return 1.0 - 0.5 * std::erfc(-u / kSqrt2);
  if (u <= 6.0) return 0.5 * std::erfc(u / kSqrt2);
  return std::exp(std_normal_log_sf(u));
}

/// Inverse survival function: the u with Phi_bar(u) = q, for q in (0,1).
/// Rational initial guess refined by Newton steps on ln Phi_bar, which keeps
/// full accuracy down to q near the smallest positive double.
inline double std_normal_isf(double q) {
  if (!(q > 0.0 && q < 1.0))
    throw std::domain_error("std_normal_isf: probability must be in (0,1)");
  if (q == 0.5) return 0.0;
  if (q > 0.5) return -std_normal_isf(1.0 - q);

  // Acklam's rational approximation (relative error < 1.2e-9)
  double x;
  if (q >= 0.02425) {
    // central region, applied to p = 1 - q in (0.5, 1)
    static constexpr double a[6] = {-3.969683028665376e+01, 2.209460984245205e+02,
                                    -2.759285104469687e+02, 1.383577518672690e+02,
                                    -3.066479806614716e+01, 2.506628277459239e+00};
    static constexpr double b[5] = {-5.447609879822406e+01, 1.615858368580409e+02,
                                    -1.556989798598866e+02, 6.680131188771972e+01,
                                    -1.328068155288572e+01};
    const double r = 0.5 - q;  // p - 0.5 with p = 1 - q
    const double s = r * r;
    x = (((((a[0] * s + a[1]) * s + a[2]) * s + a[3]) * s + a[4]) * s + a[5]) * r /
        (((((b[0] * s + b[1]) * s + b[2]) * s + b[3]) * s + b[4]) * s + 1.0);
  } else {
    static constexpr double c[6] = {-7.784894002430293e-03, -3.223964580411365e-01,
                                    -2.400758277161838e+00, -2.549732539343734e+00,
                                    4.374664141464968e+00,  2.938163982698783e+00};
    static constexpr double d[4] = {7.784695709041462e-03, 3.224671290700398e-01,
                                    2.445134137142996e+00, 3.754408661907416e+00};
    const double z = std::sqrt(-2.0 * std::log(q));
    x = -(((((c[0] * z + c[1]) * z + c[2]) * z + c[3]) * z + c[4]) * z + c[5]) /
        ((((d[0] * z + d[1]) * z + d[2]) * z + d[3]) * z + 1.0);
  }

  // Newton on f(x) = ln Phi_bar(x) - ln q; f'(x) = -phi(x)/Phi_bar(x)
  const double lq = std::log(q);
  for (int it = 0; it < 3; ++it) {
    const double lsf = std_normal_log_sf(x);
    const double mills = std::exp(lsf - detail::log_std_normal_pdf(x));
    x += (lsf - lq) * mills;
  }
  return x;
}

/// Quantile of the standard normal: Phi(result) = p.
inline double std_normal_quantile(double p) {
  if (!(p > 0.0 && p < 1.0))
    throw std::domain_error("std_normal_quantile: probability must be in (0,1)");
  return -std_normal_isf(p);
}

/// ln Gamma(x) for x > 0, Lanczos approximation (g = 7, 9 terms).
inline double log_gamma(double x) {
  if (!(x > 0.0)) throw std::domain_error("log_gamma: argument must be positive");
  static constexpr double g[9] = {0.99999999999980993,     676.5203681218851,
                                  -1259.1392167224028,     771.32342877765313,
                                  -176.61502916214059,     12.507343278686905,
                                  -0.13857109526572012,    9.9843695780195716e-6,
                                  1.5056327351493116e-7};
  if (x < 0.5) {
    // reflection: Gamma(x)Gamma(1-x) = pi/sin(pi x)
    return std::log(M_PI / std::sin(M_PI * x)) - log_gamma(1.0 - x);
  }
  const double z = x - 1.0;
  double acc = g[0];
  for (int i = 1; i < 9; ++i) acc += g[i] / (z + i);
  const double t = z + 7.5;
  return 0.5 * kLnTwoPi + (z + 0.5) * std::log(t) - t + std::log(acc);
}

/// Gumbel distribution Lambda(x) = exp(-exp(-x)).
inline Probability gumbel_cdf(double x) {
  if (std::isnan(x)) throw std::domain_error("gumbel_cdf: NaN input");
  return std::exp(-std::exp(-x));
}

/// Gumbel quantile, the inverse of gumbel_cdf on (0,1).
inline double gumbel_quantile(double p) {
  if (!(p > 0.0 && p < 1.0))
    throw std::domain_error("gumbel_quantile: probability must be in (0,1)");
  return -std::log(-std::log(p));
}

}  // namespace gcl
