#pragma once

// Predictive values and the total probability of a true assertion for an
// abstract (alpha, power, prior) configuration.
//
//   PPV = power*R / (power*R + alpha)
//   NPV = (1 - alpha) / ((1 - alpha) + beta*R)
//   P_t = (1 - alpha)*P(H) + power*P(H^C)
//
// P_t is also reachable as P(accept H)*NPV + P(accept H^C)*PPV; both routes
// are exposed so callers can cross-check them.  All functions are pure.

#include <cmath>
#include <optional>
#include <string>
#include <string_view>

#include "nprel/probability.hpp"

namespace nprel {

enum class Admissibility { Biased, Coincident, Admissible };

inline std::string_view to_string(Admissibility a) {
  switch (a) {
    case Admissibility::Biased:
      return "biased";
    case Admissibility::Coincident:
      return "coincident";
    case Admissibility::Admissible:
      return "admissible";
  }
  return "unknown";
}

/// Strict rejects biased and coincident profiles; Permissive evaluates them
/// anyway (exploratory sweeps).
enum class Enforcement { Strict, Permissive };

inline Admissibility classify(const ErrorProfile& profile) {
  const double gap = profile.power() - profile.alpha();
  if (std::abs(gap) <= kCoincidentTolerance) return Admissibility::Coincident;
  return gap > 0.0 ? Admissibility::Admissible : Admissibility::Biased;
}

inline void require_admissible(const ErrorProfile& profile,
                               Enforcement enforcement = Enforcement::Strict) {
  if (enforcement == Enforcement::Permissive) return;
  const Admissibility a = classify(profile);
  if (a != Admissibility::Admissible) {
    throw AdmissibilityError("profile (alpha=" + std::to_string(profile.alpha()) +
                             ", power=" + std::to_string(profile.power()) + ") is " +
                             std::string(to_string(a)) + "; power must exceed alpha");
  }
}

struct PredictiveValues {
  double ppv;
  double npv;
};

/// Marginal probabilities of the two possible verdicts.
struct AcceptanceProbabilities {
  double accept_h;
  double accept_not_h;
};

struct ReliabilityReport {
  Admissibility admissibility;
  double p_t;
  bool meets_minimal;
  /// Prior p* with P_t(p*) = 0.5, when it lies in (0, 1).
  std::optional<double> boundary_prior;
  PredictiveValues predictive;
};

inline double ppv(const ErrorProfile& profile, PreStudyOdds odds,
                  Enforcement enforcement = Enforcement::Strict) {
  require_admissible(profile, enforcement);
  const double hits = profile.power() * odds.value();
  return hits / (hits + profile.alpha());
}

inline double npv(const ErrorProfile& profile, PreStudyOdds odds,
                  Enforcement enforcement = Enforcement::Strict) {
  require_admissible(profile, enforcement);
  const double keep = 1.0 - profile.alpha();
  return keep / (keep + profile.beta() * odds.value());
}

inline PredictiveValues predictive_values(const ErrorProfile& profile, const HypothesisPrior& prior,
                                          Enforcement enforcement = Enforcement::Strict) {
  const PreStudyOdds odds = prior.odds();
  return {ppv(profile, odds, enforcement), npv(profile, odds, enforcement)};
}

inline AcceptanceProbabilities p_accept(const ErrorProfile& profile, const HypothesisPrior& prior,
                                        Enforcement enforcement = Enforcement::Strict) {
  require_admissible(profile, enforcement);
  const double p = prior.p_h();
  const double q = prior.p_not_h();
  return {(1.0 - profile.alpha()) * p + profile.beta() * q,
          profile.alpha() * p + profile.power() * q};
}

/// P_t from the error rates weighted by the prior.
inline double truth_probability(const ErrorProfile& profile, const HypothesisPrior& prior,
                                Enforcement enforcement = Enforcement::Strict) {
  require_admissible(profile, enforcement);
  return (1.0 - profile.alpha()) * prior.p_h() + profile.power() * prior.p_not_h();
}

/// P_t from verdict marginals weighted by the predictive values.
inline double truth_probability_from_predictive(const ErrorProfile& profile,
                                                const HypothesisPrior& prior,
                                                Enforcement enforcement = Enforcement::Strict) {
  const AcceptanceProbabilities acc = p_accept(profile, prior, enforcement);
  const PredictiveValues pv = predictive_values(profile, prior, enforcement);
  return acc.accept_h * pv.npv + acc.accept_not_h * pv.ppv;
}

/// Closed-form inversion of P_t = 0.5 in the prior:
/// p* = (beta - 0.5) / (beta - alpha).  Empty when alpha == beta or when the
/// root falls outside (0, 1).
inline std::optional<double> boundary_prior(const ErrorProfile& profile) {
  const double slope = profile.beta() - profile.alpha();
  if (std::abs(slope) <= kCoincidentTolerance) return std::nullopt;
  const double p = (profile.beta() - 0.5) / slope;
  if (!(p > 0.0 && p < 1.0)) return std::nullopt;
  return p;
}

/// Largest tolerated disagreement between the two P_t routes.
inline constexpr double kRouteTolerance = 1e-12;

inline ReliabilityReport reliability_report(const ErrorProfile& profile,
                                            const HypothesisPrior& prior,
                                            Enforcement enforcement = Enforcement::Strict) {
  const double direct = truth_probability(profile, prior, enforcement);
  const double via_predictive = truth_probability_from_predictive(profile, prior, enforcement);
  if (std::abs(direct - via_predictive) > kRouteTolerance) {
    throw std::logic_error("P_t routes disagree: " + std::to_string(direct) + " vs " +
                           std::to_string(via_predictive));
  }
  return {classify(profile), direct, direct > 0.5, boundary_prior(profile),
          predictive_values(profile, prior, enforcement)};
}

struct SwappedHypotheses {
  ErrorProfile profile;
  HypothesisPrior prior;
};

/// Exchange the roles of H and H^C: the old type II error becomes the new
/// type I error and the prior is complemented.  P_t is unchanged and
/// power' - alpha' == power - alpha.
inline SwappedHypotheses swap_hypotheses(const ErrorProfile& profile, const HypothesisPrior& prior,
                                         Enforcement enforcement = Enforcement::Strict) {
  require_admissible(profile, enforcement);
  return {ErrorProfile(profile.beta(), 1.0 - profile.alpha()), HypothesisPrior(prior.p_not_h())};
}

}  // namespace nprel
