#pragma once

// Reliability over (alpha, power, prior) step grids, and the prior at which
// a fixed profile stops being minimally reliable.

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include "nprel/format.hpp"
#include "nprel/metrics.hpp"
#include "nprel/probability.hpp"
#include "nprel/root_finding.hpp"

namespace nprel {

/// Raised by failure_boundary when alpha == beta: P_t is then constant in
/// the prior and there is no isolated crossing.
class DegenerateBoundaryError : public DomainError {
 public:
  using DomainError::DomainError;
};

/// Inclusive-start range `start:stop:step`.  stop is included when
/// stop - start is an exact multiple of step; start == stop is a single
/// point.
struct AxisRange {
  double start = 0.0;
  double stop = 0.0;
  double step = 1.0;

  static AxisRange single(double value) { return {value, value, 1.0}; }

  std::size_t count() const {
    validate();
    if (start == stop) return 1;
    const double k = (stop - start) / step;
    const double nearest = std::round(k);
    if (std::abs(k - nearest) <= 1e-9 * std::max(1.0, k)) return static_cast<std::size_t>(nearest) + 1;
    return static_cast<std::size_t>(std::floor(k)) + 1;
  }

  std::vector<double> values() const {
    const std::size_t n = count();
    std::vector<double> out;
    out.reserve(n);
    for (std::size_t i = 0; i < n; ++i) out.push_back(start + static_cast<double>(i) * step);
    // Snap an exact-multiple endpoint so the last value is stop itself.
    if (n > 1 && std::abs(out.back() - stop) <= 1e-9 * step) out.back() = stop;
    return out;
  }

  void validate() const {
    if (!std::isfinite(start) || !std::isfinite(stop) || !std::isfinite(step)) {
      throw DomainError("range bounds must be finite");
    }
    if (!(step > 0.0)) throw DomainError("range step must be positive");
    if (start > stop) throw DomainError("range start must not exceed stop");
    if ((stop - start) / step > 1e8) throw DomainError("range has too many points");
  }
};

enum class PriorAxis { ProbabilityH, Odds };

struct GridSpec {
  AxisRange alpha;
  AxisRange power;
  AxisRange prior;
  PriorAxis prior_axis = PriorAxis::ProbabilityH;
  /// Skip biased and coincident cells instead of evaluating them.
  bool admissibility_filter = true;

  std::size_t cell_count() const { return alpha.count() * power.count() * prior.count(); }

  void validate() const {
    auto check_probability_axis = [](const AxisRange& axis, const char* name) {
      for (double v : axis.values()) detail::require_open_unit(v, name);
    };
    check_probability_axis(alpha, "alpha axis value");
    check_probability_axis(power, "power axis value");
    if (prior_axis == PriorAxis::ProbabilityH) {
      check_probability_axis(prior, "p_h axis value");
    } else {
      for (double v : prior.values()) {
        const PreStudyOdds odds(v);
        HypothesisPrior::from_odds(odds);
      }
    }
    if (cell_count() == 0) throw DomainError("sweep grid is empty");
  }
};

struct SweepRow {
  double alpha;
  double power;
  double p_h;
  double r;
  double ppv;
  double npv;
  double p_t;
  bool meets_minimal;
};

struct SweepSummary {
  std::size_t total = 0;
  std::size_t emitted = 0;
  std::size_t filtered = 0;

  friend bool operator==(const SweepSummary&, const SweepSummary&) = default;
};

/// Evaluates every cell in lexicographic order (alpha outermost, prior
/// innermost) and passes each surviving row to sink.
template <typename Sink>
SweepSummary run_sweep(const GridSpec& spec, Sink&& sink) {
  spec.validate();
  const std::vector<double> alphas = spec.alpha.values();
  const std::vector<double> powers = spec.power.values();
  const std::vector<double> priors = spec.prior.values();
  const Enforcement enforcement =
      spec.admissibility_filter ? Enforcement::Strict : Enforcement::Permissive;

  SweepSummary summary;
  for (double a : alphas) {
    for (double pw : powers) {
      const ErrorProfile profile(a, pw);
      const bool admissible = classify(profile) == Admissibility::Admissible;
      for (double v : priors) {
        ++summary.total;
        if (spec.admissibility_filter && !admissible) {
          ++summary.filtered;
          continue;
        }
        const HypothesisPrior prior = spec.prior_axis == PriorAxis::ProbabilityH
                                          ? HypothesisPrior(v)
                                          : HypothesisPrior::from_odds(PreStudyOdds(v));
        const double r = spec.prior_axis == PriorAxis::ProbabilityH ? prior.odds().value() : v;
        const PredictiveValues pv = predictive_values(profile, prior, enforcement);
        const double p_t = truth_probability(profile, prior, enforcement);
        sink(SweepRow{a, pw, prior.p_h(), r, pv.ppv, pv.npv, p_t, p_t > 0.5});
        ++summary.emitted;
      }
    }
  }
  return summary;
}

inline std::vector<SweepRow> collect_sweep(const GridSpec& spec, SweepSummary* summary = nullptr) {
  std::vector<SweepRow> rows;
  const SweepSummary s = run_sweep(spec, [&](const SweepRow& row) { rows.push_back(row); });
  if (summary != nullptr) *summary = s;
  return rows;
}

inline constexpr const char* kSweepCsvHeader = "alpha,power,p_h,r,ppv,npv,p_t,meets_minimal";

inline std::string format_sweep_row(const SweepRow& row) {
  std::string out;
  for (double v : {row.alpha, row.power, row.p_h, row.r, row.ppv, row.npv, row.p_t}) {
    out += format_real(v);
    out += ',';
  }
  out += format_bool(row.meets_minimal);
  return out;
}

inline std::string format_sweep_summary(const SweepSummary& s) {
  return "#summary total=" + std::to_string(s.total) + " emitted=" + std::to_string(s.emitted) +
         " filtered=" + std::to_string(s.filtered);
}

/// Header, one line per row, then the `#summary` trailer.
inline SweepSummary write_sweep_csv(std::ostream& out, const GridSpec& spec) {
  out << kSweepCsvHeader << '\n';
  const SweepSummary summary =
      run_sweep(spec, [&](const SweepRow& row) { out << format_sweep_row(row) << '\n'; });
  out << format_sweep_summary(summary) << '\n';
  return summary;
}

inline constexpr double kBisectionTolerance = 1e-10;

namespace detail {

inline void require_nondegenerate(const ErrorProfile& profile) {
  require_admissible(profile);
  if (std::abs(profile.beta() - profile.alpha()) <= kCoincidentTolerance) {
    throw DegenerateBoundaryError(
        "alpha == beta: P_t = " + format_real(1.0 - profile.alpha()) +
        " for every prior" + (1.0 - profile.alpha() == 0.5 ? " (exactly 0.5)" : ""));
  }
}

}  // namespace detail

/// Prior crossing P_t = 0.5 located by bisection on the direct P_t formula.
inline std::optional<double> failure_boundary_bisect(const ErrorProfile& profile,
                                                     double tol = kBisectionTolerance) {
  detail::require_nondegenerate(profile);
  // P_t(p) - 0.5 is linear in p with P_t(0) = power and P_t(1) = 1 - alpha.
  auto excess = [&](double p) {
    return (1.0 - profile.alpha()) * p + profile.power() * (1.0 - p) - 0.5;
  };
  const double at_zero = excess(0.0);
  const double at_one = excess(1.0);
  if (at_zero == 0.0 || at_one == 0.0 || (at_zero < 0.0) == (at_one < 0.0)) return std::nullopt;
  return bisect(excess, 0.0, 1.0, tol);
}

/// Closed-form crossing (beta - 0.5) / (beta - alpha), cross-checked against
/// bisection.  Empty when P_t stays on one side of 0.5 for every prior.
inline std::optional<double> failure_boundary(const ErrorProfile& profile) {
  detail::require_nondegenerate(profile);
  const std::optional<double> closed = boundary_prior(profile);
  const std::optional<double> searched = failure_boundary_bisect(profile);
  if (closed.has_value() != searched.has_value() ||
      (closed && std::abs(*closed - *searched) > 10 * kBisectionTolerance)) {
    throw std::logic_error("closed-form and bisection failure boundaries disagree");
  }
  return closed;
}

}  // namespace nprel
