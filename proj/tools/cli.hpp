#pragma once

// Command-line front end.  Every subcommand is a thin adapter over the
// library; numbers are printed at 12 significant digits.
//
// Exit codes: 0 success, 1 internal failure or failed worked-example check,
// 2 usage or validation error.

#include <CLI11.hpp>

#include <cstdint>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "nprel/nprel.hpp"

namespace nprel::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitFailure = 1;
inline constexpr int kExitUsage = 2;

class UsageError : public DomainError {
 public:
  using DomainError::DomainError;
};

inline double parse_real(const std::string& text, const std::string& what) {
  const char* begin = text.c_str();
  char* end = nullptr;
  const double v = std::strtod(begin, &end);
  if (text.empty() || end != begin + text.size()) {
    throw UsageError("cannot parse " + what + " '" + text + "' as a number");
  }
  return v;
}

/// `start:stop:step`, or a single value for a one-point axis.
inline AxisRange parse_range(const std::string& text, const std::string& flag) {
  std::vector<std::string> parts;
  std::size_t from = 0;
  while (true) {
    const std::size_t colon = text.find(':', from);
    parts.push_back(text.substr(from, colon - from));
    if (colon == std::string::npos) break;
    from = colon + 1;
  }
  if (parts.size() == 1) return AxisRange::single(parse_real(parts[0], flag));
  if (parts.size() != 3) throw UsageError(flag + " expects start:stop:step, got '" + text + "'");
  AxisRange r{parse_real(parts[0], flag), parse_real(parts[1], flag), parse_real(parts[2], flag)};
  r.validate();
  return r;
}

enum class Format { Text, Csv };

struct PriorFlags {
  std::optional<double> p_h;
  std::optional<double> r;

  HypothesisPrior resolve() const {
    if (p_h.has_value() == r.has_value()) throw UsageError("exactly one of --p-h or --r is required");
    return p_h ? HypothesisPrior(*p_h) : HypothesisPrior::from_odds(PreStudyOdds(*r));
  }
};

struct DesignFlags {
  double mu0 = 0.0;
  double delta = 0.0;
  double sigma = 1.0;
  std::int64_t n = 1;
  double alpha = 0.05;
  std::string tail = "upper";

  Tail resolve_tail() const {
    const std::optional<Tail> t = parse_tail(tail);
    if (!t) throw UsageError("--tail must be upper, lower or two-sided, got '" + tail + "'");
    return *t;
  }

  ZTestDesign resolve() const { return ZTestDesign(mu0, delta, sigma, n, alpha, resolve_tail()); }
};

inline void add_design_flags(CLI::App& cmd, DesignFlags& d, bool with_n) {
  cmd.add_option("--mu0", d.mu0, "tested mean h (measurement units)")->capture_default_str();
  cmd.add_option("--delta", d.delta,
                 "shift of the point alternative h' = mu0 + delta (measurement units, nonzero; "
                 "> 0 for upper tail, < 0 for lower)")
      ->required();
  cmd.add_option("--sigma", d.sigma, "known population standard deviation (measurement units, > 0)")
      ->capture_default_str();
  if (with_n) {
    cmd.add_option("--n", d.n, "sample size per study (integer >= 1)")->capture_default_str();
  }
  cmd.add_option("--alpha", d.alpha, "type I error rate, in (0, 1)")->capture_default_str();
  cmd.add_option("--tail", d.tail, "rejection region: upper, lower or two-sided")
      ->capture_default_str();
}

inline void add_prior_flags(CLI::App& cmd, PriorFlags& p) {
  auto* ph = cmd.add_option("--p-h", p.p_h, "pre-study probability that H is true, in (0, 1)");
  auto* r = cmd.add_option("--r", p.r, "pre-study odds R of true to false alternatives, > 0");
  ph->excludes(r);
}

inline void add_format_flag(CLI::App& cmd, std::string& format) {
  cmd.add_option("--format", format, "output format: text or csv")
      ->check(CLI::IsMember({"text", "csv"}))
      ->capture_default_str();
}

using Fields = std::vector<std::pair<std::string, std::string>>;

inline void print_fields(std::ostream& out, const Fields& fields, const std::string& format) {
  if (format == "csv") {
    for (std::size_t i = 0; i < fields.size(); ++i) out << (i ? "," : "") << fields[i].first;
    out << '\n';
    for (std::size_t i = 0; i < fields.size(); ++i) out << (i ? "," : "") << fields[i].second;
    out << '\n';
    return;
  }
  for (const auto& [k, v] : fields) {
    out << k << std::string(k.size() < 22 ? 22 - k.size() : 1, ' ') << v << '\n';
  }
}

inline Fields report_fields(const ErrorProfile& profile, const HypothesisPrior& prior,
                            const ReliabilityReport& rep) {
  return {{"alpha", format_real(profile.alpha())},
          {"power", format_real(profile.power())},
          {"beta", format_real(profile.beta())},
          {"p_h", format_real(prior.p_h())},
          {"r", format_real(prior.odds().value())},
          {"admissibility", std::string(to_string(rep.admissibility))},
          {"ppv", format_real(rep.predictive.ppv)},
          {"npv", format_real(rep.predictive.npv)},
          {"p_t", format_real(rep.p_t)},
          {"meets_minimal", format_bool(rep.meets_minimal)},
          {"boundary_prior", format_real(rep.boundary_prior)}};
}

/// Runs the CLI with the given arguments.  argv[0] is the program name.
inline int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Reliability of Neyman-Pearson testing: predictive values, total truth "
               "probability, z-test power, grid sweeps and Monte Carlo verification",
               "nprel"};
  app.require_subcommand(1);

  // metrics
  double m_alpha = 0.0;
  double m_power = 0.0;
  PriorFlags m_prior;
  bool m_inadmissible = false;
  std::string m_format = "text";
  auto* metrics = app.add_subcommand("metrics", "PPV, NPV, P_t and reliability verdict for one configuration");
  metrics->add_option("--alpha", m_alpha, "type I error rate, in (0, 1)")->required();
  metrics->add_option("--power", m_power, "power 1 - beta, in (0, 1)")->required();
  add_prior_flags(*metrics, m_prior);
  metrics->add_flag("--include-inadmissible", m_inadmissible,
                    "evaluate biased or coincident profiles (power <= alpha) instead of rejecting them");
  add_format_flag(*metrics, m_format);

  // power
  DesignFlags p_design;
  std::string p_format = "text";
  auto* power = app.add_subcommand("power", "alpha and power of a one-sample z-test design");
  add_design_flags(*power, p_design, true);
  add_format_flag(*power, p_format);

  // samplesize
  DesignFlags s_design;
  double s_target = 0.0;
  std::string s_format = "text";
  auto* samplesize = app.add_subcommand("samplesize", "smallest n reaching a target power");
  add_design_flags(*samplesize, s_design, false);
  samplesize->add_option("--target-power", s_target, "required power, in (alpha, 1)")->required();
  add_format_flag(*samplesize, s_format);

  // sweep
  std::string w_alpha;
  std::string w_power;
  std::optional<std::string> w_p_h;
  std::optional<std::string> w_r;
  std::optional<std::string> w_out;
  bool w_force = false;
  bool w_inadmissible = false;
  auto* sweep = app.add_subcommand("sweep", "evaluate reliability over an (alpha, power, prior) grid as CSV");
  sweep->add_option("--alpha", w_alpha, "alpha range start:stop:step (or one value), inside (0, 1)")
      ->required();
  sweep->add_option("--power", w_power, "power range start:stop:step (or one value), inside (0, 1)")
      ->required();
  auto* w_ph_opt =
      sweep->add_option("--p-h", w_p_h, "prior range start:stop:step (or one value), inside (0, 1)");
  auto* w_r_opt = sweep->add_option("--r", w_r, "odds range start:stop:step (or one value), > 0");
  w_ph_opt->excludes(w_r_opt);
  sweep->add_option("--out", w_out, "CSV output path (default: standard output)");
  sweep->add_flag("--force", w_force, "overwrite an existing --out file");
  sweep->add_flag("--include-inadmissible", w_inadmissible,
                  "emit biased and coincident cells instead of filtering them");

  // simulate
  DesignFlags m_design;
  PriorFlags sim_prior;
  std::uint64_t sim_studies = 100000;
  std::optional<std::uint64_t> sim_seed;
  unsigned sim_shards = 1;
  std::string sim_format = "text";
  auto* simulate = app.add_subcommand("simulate", "Monte Carlo run of iterated studies");
  add_design_flags(*simulate, m_design, true);
  add_prior_flags(*simulate, sim_prior);
  simulate->add_option("--studies", sim_studies, "number of simulated studies (>= 1)")
      ->capture_default_str();
  simulate->add_option("--seed", sim_seed, "64-bit generator seed")->required();
  simulate->add_option("--shards", sim_shards, "worker threads (>= 1); does not change results")
      ->capture_default_str();
  add_format_flag(*simulate, sim_format);

  auto* paper_check =
      app.add_subcommand("paper-check", "recompute the built-in published worked examples");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    err << "nprel: " << e.what() << '\n';
    return kExitUsage;
  }

  try {
    if (metrics->parsed()) {
      const ErrorProfile profile(m_alpha, m_power);
      const HypothesisPrior prior = m_prior.resolve();
      const Enforcement enf = m_inadmissible ? Enforcement::Permissive : Enforcement::Strict;
      print_fields(out, report_fields(profile, prior, reliability_report(profile, prior, enf)), m_format);
    } else if (power->parsed()) {
      const ZTestDesign design = p_design.resolve();
      const ErrorProfile profile = power_of_design(design);
      // d(power)/d(alpha) > 1 iff z_{1-alpha} > theta/2; one-sided only.
      std::string slope = "none";
      std::string slope_above_one = "none";
      if (design.tail() != Tail::TwoSided) {
        const PowerSensitivity s = power_alpha_sensitivity(design);
        slope = format_real(s.derivative);
        slope_above_one = format_bool(s.claim_holds);
      }
      print_fields(out,
                   {{"tail", std::string(to_string(design.tail()))},
                    {"n", std::to_string(design.n())},
                    {"theta", format_real(design.noncentrality())},
                    {"alpha", format_real(profile.alpha())},
                    {"power", format_real(profile.power())},
                    {"beta", format_real(profile.beta())},
                    {"admissibility", std::string(to_string(classify(profile)))},
                    {"dpower_dalpha", slope},
                    {"dpower_dalpha_gt_1", slope_above_one}},
                   p_format);
    } else if (samplesize->parsed()) {
      const Tail tail = s_design.resolve_tail();
      const std::int64_t n =
          solve_sample_size(s_design.alpha, s_target, s_design.delta, s_design.sigma, tail);
      const double effect = std::abs(s_design.delta) / s_design.sigma;
      print_fields(out,
                   {{"n", std::to_string(n)},
                    {"power_at_n", format_real(power_at(s_design.alpha, effect * std::sqrt(double(n)), tail))},
                    {"power_at_n_minus_1",
                     format_real(power_at(s_design.alpha, effect * std::sqrt(double(n - 1)), tail))}},
                   s_format);
    } else if (sweep->parsed()) {
      if (w_p_h.has_value() == w_r.has_value()) throw UsageError("exactly one of --p-h or --r is required");
      GridSpec spec{parse_range(w_alpha, "--alpha"), parse_range(w_power, "--power"),
                    w_p_h ? parse_range(*w_p_h, "--p-h") : parse_range(*w_r, "--r"),
                    w_p_h ? PriorAxis::ProbabilityH : PriorAxis::Odds, !w_inadmissible};
      spec.validate();
      if (w_out) {
        if (std::filesystem::exists(*w_out) && !w_force) {
          throw UsageError("refusing to overwrite " + *w_out + " (pass --force)");
        }
        std::ofstream file(*w_out, std::ios::binary | std::ios::trunc);
        if (!file) throw std::runtime_error("cannot open " + *w_out + " for writing");
        const SweepSummary summary = write_sweep_csv(file, spec);
        file.close();
        if (!file) throw std::runtime_error("failed writing " + *w_out);
        out << format_sweep_summary(summary) << '\n';
      } else {
        write_sweep_csv(out, spec);
      }
    } else if (simulate->parsed()) {
      const SimulationConfig config{m_design.resolve(), sim_prior.resolve(), sim_studies, *sim_seed,
                                    sim_shards};
      const SimulationResult result = run_simulation(config);
      out << (sim_format == "csv" ? format_simulation_csv(result)
                                  : format_simulation_key_value(result));
    } else if (paper_check->parsed()) {
      const ExampleReport report = check_worked_examples();
      out << format_example_report(report);
      return report.all_passed ? kExitOk : kExitFailure;
    }
  } catch (const DomainError& e) {
    err << "nprel: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::exception& e) {
    err << "nprel: internal error: " << e.what() << '\n';
    return kExitFailure;
  }
  return kExitOk;
}

}  // namespace nprel::cli
