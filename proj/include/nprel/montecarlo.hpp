#pragma once

// Simulated iterated use of a z-test.  Each study draws whether H is true at
// the configured prior, samples n observations under the true hypothesis,
// and records the verdict in the four-cell outcome table.  Study i always
// reads Philox substream (seed, i), so results do not depend on how the
// index range is split across threads.

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <optional>
#include <string>
#include <thread>
#include <utility>
#include <vector>

#include "nprel/format.hpp"
#include "nprel/gaussian_tests.hpp"
#include "nprel/metrics.hpp"
#include "nprel/philox.hpp"
#include "nprel/probability.hpp"

namespace nprel {

enum class Verdict { AcceptH, RejectH };

/// Draws one study's sample and applies the design's rejection region.
/// h_true selects the sampling mean: mu0 when H holds, mu0 + delta otherwise.
inline Verdict simulate_study(const ZTestDesign& design, bool h_true, NormalSampler& rng) {
  const double mean = h_true ? design.mu0() : design.mu0() + design.delta();
  double sum = 0.0;
  for (std::int64_t i = 0; i < design.n(); ++i) sum += mean + design.sigma() * rng.next();
  const double n = static_cast<double>(design.n());
  const double z = (sum / n - design.mu0()) * std::sqrt(n) / design.sigma();
  const double c = critical_value(design.alpha(), design.tail());
  bool reject = false;
  switch (design.tail()) {
    case Tail::Upper:
      reject = z > c;
      break;
    case Tail::Lower:
      reject = z < -c;
      break;
    case Tail::TwoSided:
      reject = std::abs(z) > c;
      break;
  }
  return reject ? Verdict::RejectH : Verdict::AcceptH;
}

struct OutcomeTally {
  std::uint64_t accept_h_true = 0;
  std::uint64_t accept_h_false = 0;  // type II materialized
  std::uint64_t reject_h_true = 0;   // type I materialized
  std::uint64_t reject_h_false = 0;

  std::uint64_t total() const {
    return accept_h_true + accept_h_false + reject_h_true + reject_h_false;
  }

  void record(bool h_true, Verdict verdict) {
    if (verdict == Verdict::AcceptH) {
      ++(h_true ? accept_h_true : accept_h_false);
    } else {
      ++(h_true ? reject_h_true : reject_h_false);
    }
  }

  OutcomeTally& operator+=(const OutcomeTally& o) {
    accept_h_true += o.accept_h_true;
    accept_h_false += o.accept_h_false;
    reject_h_true += o.reject_h_true;
    reject_h_false += o.reject_h_false;
    return *this;
  }

  friend bool operator==(const OutcomeTally&, const OutcomeTally&) = default;
};

struct SimulationConfig {
  ZTestDesign design;
  HypothesisPrior prior;
  std::uint64_t num_studies = 0;
  std::uint64_t seed = 0;
  unsigned shards = 1;
};

/// An empirical proportion next to its nominal value.  value, std_error and
/// z_score are empty when the denominator is zero.  The standard error is
/// the binomial one under the nominal proportion.
struct EmpiricalEstimate {
  std::uint64_t numerator = 0;
  std::uint64_t denominator = 0;
  double nominal = 0.0;
  std::optional<double> value;
  std::optional<double> std_error;
  std::optional<double> z_score;

  static EmpiricalEstimate make(std::uint64_t num, std::uint64_t den, double nominal) {
    EmpiricalEstimate e{num, den, nominal, std::nullopt, std::nullopt, std::nullopt};
    if (den == 0) return e;
    e.value = static_cast<double>(num) / static_cast<double>(den);
    e.std_error = std::sqrt(nominal * (1.0 - nominal) / static_cast<double>(den));
    if (*e.std_error > 0.0) e.z_score = (*e.value - nominal) / *e.std_error;
    return e;
  }

  friend bool operator==(const EmpiricalEstimate&, const EmpiricalEstimate&) = default;
};

struct SimulationResult {
  std::uint64_t num_studies = 0;
  OutcomeTally tally;
  ErrorProfile profile;
  ReliabilityReport nominal;
  EmpiricalEstimate ppv;
  EmpiricalEstimate npv;
  EmpiricalEstimate p_t;
  /// Conditional rejection rates: P(reject | H true) vs alpha and
  /// P(reject | H false) vs power.
  EmpiricalEstimate type_one_rate;
  EmpiricalEstimate power_rate;
};

/// Tally for studies [begin, end).
inline OutcomeTally simulate_range(const ZTestDesign& design, const HypothesisPrior& prior,
                                   std::uint64_t seed, std::uint64_t begin, std::uint64_t end) {
  OutcomeTally tally;
  for (std::uint64_t i = begin; i < end; ++i) {
    NormalSampler rng(CounterStream(seed, i));
    const bool h_true = rng.next_uniform() < prior.p_h();
    tally.record(h_true, simulate_study(design, h_true, rng));
  }
  return tally;
}

inline SimulationResult run_simulation(const SimulationConfig& config) {
  if (config.num_studies == 0) throw DomainError("num_studies must be positive");
  if (config.shards == 0) throw DomainError("shards must be positive");

  const ErrorProfile profile = power_of_design(config.design);
  const ReliabilityReport nominal = reliability_report(profile, config.prior);

  const std::uint64_t n = config.num_studies;
  const std::uint64_t shards = config.shards;
  std::vector<OutcomeTally> partial(shards);
  {
    std::vector<std::jthread> workers;
    workers.reserve(shards);
    for (std::uint64_t s = 0; s < shards; ++s) {
      const std::uint64_t begin = n / shards * s + std::min(s, n % shards);
      const std::uint64_t end = begin + n / shards + (s < n % shards ? 1 : 0);
      workers.emplace_back([&, s, begin, end] {
        partial[s] = simulate_range(config.design, config.prior, config.seed, begin, end);
      });
    }
  }
  OutcomeTally tally;
  for (const OutcomeTally& t : partial) tally += t;

  const std::uint64_t h_true = tally.accept_h_true + tally.reject_h_true;
  const std::uint64_t h_false = tally.accept_h_false + tally.reject_h_false;
  return SimulationResult{
      n,
      tally,
      profile,
      nominal,
      EmpiricalEstimate::make(tally.reject_h_false, tally.reject_h_false + tally.reject_h_true,
                              nominal.predictive.ppv),
      EmpiricalEstimate::make(tally.accept_h_true, tally.accept_h_true + tally.accept_h_false,
                              nominal.predictive.npv),
      EmpiricalEstimate::make(tally.accept_h_true + tally.reject_h_false, n, nominal.p_t),
      EmpiricalEstimate::make(tally.reject_h_true, h_true, profile.alpha()),
      EmpiricalEstimate::make(tally.reject_h_false, h_false, profile.power()),
  };
}

/// Ordered (key, value) pairs shared by the key=value and CSV renderings.
inline std::vector<std::pair<std::string, std::string>> simulation_fields(
    const SimulationResult& r) {
  auto opt = [](const std::optional<double>& v) {
    return v ? format_real(*v) : std::string("undefined");
  };
  std::vector<std::pair<std::string, std::string>> f{
      {"studies", std::to_string(r.num_studies)},
      {"accept_h_true", std::to_string(r.tally.accept_h_true)},
      {"accept_h_false", std::to_string(r.tally.accept_h_false)},
      {"reject_h_true", std::to_string(r.tally.reject_h_true)},
      {"reject_h_false", std::to_string(r.tally.reject_h_false)},
  };
  auto add = [&](const std::string& name, const EmpiricalEstimate& e) {
    f.emplace_back("empirical_" + name, opt(e.value));
    f.emplace_back(name + "_denominator", std::to_string(e.denominator));
    f.emplace_back(name + "_std_error", opt(e.std_error));
    f.emplace_back(name + "_z", opt(e.z_score));
    f.emplace_back("nominal_" + name, format_real(e.nominal));
  };
  add("ppv", r.ppv);
  add("npv", r.npv);
  add("p_t", r.p_t);
  add("type_one_rate", r.type_one_rate);
  add("power", r.power_rate);
  f.emplace_back("nominal_meets_minimal", format_bool(r.nominal.meets_minimal));
  f.emplace_back("nominal_boundary_prior", format_real(r.nominal.boundary_prior));
  return f;
}

inline std::string format_simulation_key_value(const SimulationResult& r) {
  std::string out;
  for (const auto& [k, v] : simulation_fields(r)) out += k + "=" + v + "\n";
  return out;
}

inline std::string format_simulation_csv(const SimulationResult& r) {
  std::string header;
  std::string row;
  for (const auto& [k, v] : simulation_fields(r)) {
    if (!header.empty()) {
      header += ',';
      row += ',';
    }
    header += k;
    row += v;
  }
  return header + "\n" + row + "\n";
}

}  // namespace nprel
