#pragma once

// Reference implementations used only by tests.  None of these call into
// the library's normal or power code.

#include <cmath>
#include <cstdint>
#include <random>

namespace nprel::oracle {

using real = long double;

inline constexpr real kPi = 3.141592653589793238462643383279502884L;

inline real pdf(real x) { return std::exp(-x * x / 2) / std::sqrt(2 * kPi); }

/// Upper tail 1 - Phi(x) for x > 0 by the Laplace continued fraction
/// phi(x) / (x + 1/(x + 2/(x + 3/(x + ...)))), evaluated bottom-up.
inline real upper_tail_cf(real x) {
  real acc = x;
  for (int k = 400; k >= 1; --k) acc = x + k / acc;
  return pdf(x) / acc;
}

/// Phi(x) by the Taylor series 1/2 + phi(x) * sum x^(2k+1) / (2k+1)!!
/// for |x| <= 3, continued fraction beyond.
inline real cdf(real x) {
  if (x > 3) return 1 - upper_tail_cf(x);
  if (x < -3) return upper_tail_cf(-x);
  real term = x;
  real sum = x;
  for (int k = 1; k < 200; ++k) {
    term *= x * x / (2 * k + 1);
    sum += term;
  }
  return 0.5L + pdf(x) * sum;
}

/// Phi^{-1}(p) by bisection on the oracle CDF.
inline real quantile(real p) {
  real lo = -40;
  real hi = 40;
  for (int i = 0; i < 200; ++i) {
    const real mid = (lo + hi) / 2;
    (cdf(mid) < p ? lo : hi) = mid;
  }
  return (lo + hi) / 2;
}

/// One-sided power Phi(theta - z_{1-alpha}).
inline real one_sided_power(real alpha, real theta) { return cdf(theta - quantile(1 - alpha)); }

inline real two_sided_power(real alpha, real theta) {
  const real c = quantile(1 - alpha / 2);
  return cdf(theta - c) + cdf(-c - theta);
}

/// Linear scan for the smallest n with power >= target.
template <typename Power>
std::int64_t scan_sample_size(real target, real effect, Power&& power) {
  std::int64_t n = 1;
  while (power(effect * std::sqrt(static_cast<real>(n))) < target) ++n;
  return n;
}

/// Deterministic generator for hand-rolled property tests.
inline std::mt19937_64 property_rng(std::uint64_t salt = 0) {
  return std::mt19937_64(0x5eed5eedULL ^ salt);
}

inline double uniform(std::mt19937_64& g, double lo, double hi) {
  return std::uniform_real_distribution<double>(lo, hi)(g);
}

}  // namespace nprel::oracle
