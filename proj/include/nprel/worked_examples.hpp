#pragma once

// Built-in reference scenarios with published two-decimal values.  Each
// expected value carries its own tolerance; a scenario flagged with a known
// discrepancy is judged on the recomputed value instead of the printed one.

#include <cmath>
#include <optional>
#include <string>
#include <vector>

#include "nprel/format.hpp"
#include "nprel/metrics.hpp"

namespace nprel {

/// Tolerance matching two-decimal reporting.
inline constexpr double kPrintedTolerance = 0.005;

struct ExpectedValue {
  std::string name;   // ppv, npv, p_t or meets_minimal (0/1)
  double expected;    // value as printed in the source
  double tolerance;
};

struct KnownDiscrepancy {
  std::string note;
  double recomputed;  // value the formulas actually give
};

struct WorkedExample {
  std::string id;
  double alpha;
  double power;
  /// Exactly one of p_h / r is set.
  std::optional<double> p_h;
  std::optional<double> r;
  std::vector<ExpectedValue> expected;
  std::string source;
  std::optional<KnownDiscrepancy> known_discrepancy;

  HypothesisPrior prior() const {
    return p_h ? HypothesisPrior(*p_h) : HypothesisPrior::from_odds(PreStudyOdds(*r));
  }
};

inline std::vector<WorkedExample> worked_examples() {
  return {
      {"even-odds-low-power", 0.05, 0.1, 0.5, std::nullopt,
       {{"p_t", 0.525, kPrintedTolerance}, {"meets_minimal", 1.0, 0.0}},
       "half of tested hypotheses false, alpha 0.05, power 0.1: 525 true findings per 1000",
       std::nullopt},
      {"fail-high-prior", 0.55, 0.99, 0.95, std::nullopt,
       {{"p_t", 0.48, kPrintedTolerance}, {"meets_minimal", 0.0, 0.0}},
       "P(H) = 0.95 with a large alpha: minimal reliability fails", std::nullopt},
      {"fail-low-prior", 0.05, 0.06, 0.33, std::nullopt,
       {{"p_t", 0.35, kPrintedTolerance}, {"meets_minimal", 0.0, 0.0}},
       "P(H) = 0.33 with an underpowered but unbiased test: minimal reliability fails",
       std::nullopt},
      {"low-odds-underpowered", 0.01, 0.02, std::nullopt, 0.02,
       {{"ppv", 0.04, kPrintedTolerance},
        {"npv", 0.98, kPrintedTolerance},
        {"p_t", 0.97, kPrintedTolerance}},
       "R = 0.02 with power 0.02: very low PPV, high NPV, overall truth fraction near 0.97",
       std::nullopt},
      {"asymmetric-baseline", 0.05, 0.9, 0.6, std::nullopt,
       {{"p_t", 0.93, kPrintedTolerance}},
       "P(H) = 0.6, alpha 0.05, beta 0.1", std::nullopt},
      {"asymmetric-swapped", 0.1, 0.95, 0.6, std::nullopt,
       {{"p_t", 0.72, kPrintedTolerance}},
       "P(H) = 0.6, alpha 0.1, beta 0.05 (error priorities exchanged)",
       KnownDiscrepancy{"printed P_t 0.72 is inconsistent with (1 - alpha)P(H) + (1 - beta)P(H^C) "
                        "= 0.9*0.6 + 0.95*0.4 = 0.92",
                        0.92}},
  };
}

struct ValueCheck {
  std::string name;
  double expected;
  double computed;
  double tolerance;
  bool passed;
};

struct ExampleCheck {
  const WorkedExample* example;
  std::vector<ValueCheck> values;
  /// Emitted for known-discrepancy scenarios.
  std::optional<std::string> discrepancy_note;
  bool passed;
};

inline double computed_value(const ReliabilityReport& report, const std::string& name) {
  if (name == "ppv") return report.predictive.ppv;
  if (name == "npv") return report.predictive.npv;
  if (name == "p_t") return report.p_t;
  if (name == "meets_minimal") return report.meets_minimal ? 1.0 : 0.0;
  throw std::invalid_argument("unknown worked-example quantity: " + name);
}

/// Evaluates one scenario.  For a known discrepancy the printed value is
/// reported but the pass decision uses the recomputed value.
inline ExampleCheck check_example(const WorkedExample& ex) {
  const ReliabilityReport report = reliability_report(ErrorProfile(ex.alpha, ex.power), ex.prior());
  ExampleCheck out{&ex, {}, std::nullopt, true};
  for (const ExpectedValue& ev : ex.expected) {
    const double got = computed_value(report, ev.name);
    const double target = ex.known_discrepancy ? ex.known_discrepancy->recomputed : ev.expected;
    const bool ok = std::abs(got - target) <= ev.tolerance;
    out.values.push_back({ev.name, ev.expected, got, ev.tolerance, ok});
    out.passed = out.passed && ok;
  }
  if (ex.known_discrepancy) out.discrepancy_note = ex.known_discrepancy->note;
  return out;
}

struct ExampleReport {
  std::vector<WorkedExample> examples;
  std::vector<ExampleCheck> checks;
  bool all_passed = true;
};

inline ExampleReport check_worked_examples() {
  ExampleReport report{worked_examples(), {}, true};
  for (const WorkedExample& ex : report.examples) {
    report.checks.push_back(check_example(ex));
    report.all_passed = report.all_passed && report.checks.back().passed;
  }
  return report;
}

inline std::string format_example_report(const ExampleReport& report) {
  std::string out;
  for (const ExampleCheck& c : report.checks) {
    out += std::string(c.passed ? "PASS " : "FAIL ") + c.example->id + "  (" + c.example->source +
           ")\n";
    for (const ValueCheck& v : c.values) {
      out += "  " + v.name + ": computed " + format_real(v.computed) + ", printed " +
             format_real(v.expected) + ", tolerance " + format_real(v.tolerance) +
             (v.passed ? "" : "  <-- mismatch") + "\n";
    }
    if (c.discrepancy_note) {
      out += "  known discrepancy: " + *c.discrepancy_note + "; recomputed " +
             format_real(c.example->known_discrepancy->recomputed) + " reproduced: " +
             format_bool(c.passed) + "\n";
    }
  }
  out += std::string(report.all_passed ? "all worked examples pass" : "worked-example check FAILED") +
         "\n";
  return out;
}

}  // namespace nprel
