#pragma once

// Domain types shared by every module: error profiles, pre-study odds and
// priors, plus the exception hierarchy used for validation failures.

#include <cmath>
#include <stdexcept>
#include <string>
#include <string_view>

namespace nprel {

/// Raised when an input is outside its documented domain.  The CLI maps this
/// family to exit code 2.
class DomainError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Raised when an operation requires power > alpha and the profile is
/// biased or coincident.
class AdmissibilityError : public DomainError {
 public:
  using DomainError::DomainError;
};

namespace detail {

inline bool in_open_unit(double p) { return std::isfinite(p) && p > 0.0 && p < 1.0; }

inline void require_open_unit(double p, std::string_view name) {
  if (!in_open_unit(p)) {
    throw DomainError(std::string(name) + " must lie in the open interval (0, 1), got " +
                      std::to_string(p));
  }
}

}  // namespace detail

/// Absolute tolerance on power - alpha below which a profile counts as
/// coincident (the zero-effect case).
inline constexpr double kCoincidentTolerance = 1e-12;

/// Nominal type I error and power of a test.  beta is derived as 1 - power.
class ErrorProfile {
 public:
  ErrorProfile(double alpha, double power) : alpha_(alpha), power_(power) {
    detail::require_open_unit(alpha, "alpha");
    detail::require_open_unit(power, "power");
  }

  static ErrorProfile from_alpha_beta(double alpha, double beta) {
    detail::require_open_unit(beta, "beta");
    return ErrorProfile(alpha, 1.0 - beta);
  }

  double alpha() const { return alpha_; }
  double power() const { return power_; }
  double beta() const { return 1.0 - power_; }

  friend bool operator==(const ErrorProfile&, const ErrorProfile&) = default;

 private:
  double alpha_;
  double power_;
};

/// Ratio R of true to false alternatives in the reference class, so that
/// P(H^C) = R / (R + 1).
class PreStudyOdds {
 public:
  explicit PreStudyOdds(double r) : r_(r) {
    if (!std::isfinite(r) || r <= 0.0) {
      throw DomainError("pre-study odds r must be positive and finite, got " + std::to_string(r));
    }
  }

  double value() const { return r_; }

  friend bool operator==(const PreStudyOdds&, const PreStudyOdds&) = default;

 private:
  double r_;
};

/// Pre-study probability that the tested hypothesis H is true.
class HypothesisPrior {
 public:
  explicit HypothesisPrior(double p_h) : p_h_(p_h) { detail::require_open_unit(p_h, "p_h"); }

  static HypothesisPrior from_odds(PreStudyOdds odds) {
    return HypothesisPrior(1.0 / (odds.value() + 1.0));
  }

  double p_h() const { return p_h_; }
  double p_not_h() const { return 1.0 - p_h_; }

  PreStudyOdds odds() const { return PreStudyOdds((1.0 - p_h_) / p_h_); }

  friend bool operator==(const HypothesisPrior&, const HypothesisPrior&) = default;

 private:
  double p_h_;
};

}  // namespace nprel
