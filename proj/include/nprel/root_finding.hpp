#pragma once

#include <cmath>
#include <concepts>
#include <stdexcept>

#include "nprel/probability.hpp"

namespace nprel {

/// Bisection on [lo, hi] for a continuous f with a sign change.  Stops when
/// the bracket is narrower than 2*tol and returns its midpoint, so the
/// result is within tol of a root.
template <std::invocable<double> F>
double bisect(F&& f, double lo, double hi, double tol) {
  if (!(lo < hi)) throw DomainError("bisect: empty bracket");
  if (!(tol > 0.0)) throw DomainError("bisect: tolerance must be positive");
  double f_lo = f(lo);
  const double f_hi = f(hi);
  if (f_lo == 0.0) return lo;
  if (f_hi == 0.0) return hi;
  if ((f_lo < 0.0) == (f_hi < 0.0)) throw DomainError("bisect: no sign change on bracket");

  // 200 halvings exhaust double precision on any finite bracket.
  for (int i = 0; i < 200 && hi - lo > 2.0 * tol; ++i) {
    const double mid = lo + 0.5 * (hi - lo);
    const double f_mid = f(mid);
    if (f_mid == 0.0) return mid;
    if ((f_mid < 0.0) == (f_lo < 0.0)) {
      lo = mid;
      f_lo = f_mid;
    } else {
      hi = mid;
    }
  }
  return lo + 0.5 * (hi - lo);
}

}  // namespace nprel
