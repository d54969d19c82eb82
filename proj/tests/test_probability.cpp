#include <catch2/catch_amalgamated.hpp>

#include <cmath>
#include <limits>

#include "nprel/probability.hpp"
#include "oracles.hpp"

using namespace nprel;

TEST_CASE("ErrorProfile rejects closed-interval and non-finite values", "[probability]") {
  CHECK_THROWS_AS(ErrorProfile(0.0, 0.5), DomainError);
  CHECK_THROWS_AS(ErrorProfile(1.0, 0.5), DomainError);
  CHECK_THROWS_AS(ErrorProfile(0.05, 1.0), DomainError);
  CHECK_THROWS_AS(ErrorProfile(0.05, 0.0), DomainError);
  CHECK_THROWS_AS(ErrorProfile(std::nan(""), 0.5), DomainError);
  CHECK_THROWS_AS(ErrorProfile::from_alpha_beta(0.05, 1.0), DomainError);

  const ErrorProfile p(0.05, 0.9);
  CHECK(p.beta() == Catch::Approx(0.1).margin(1e-15));
  CHECK(ErrorProfile::from_alpha_beta(0.05, 0.1).power() == Catch::Approx(0.9).margin(1e-15));
}

TEST_CASE("Odds and prior validation", "[probability]") {
  CHECK_THROWS_AS(PreStudyOdds(0.0), DomainError);
  CHECK_THROWS_AS(PreStudyOdds(-1.0), DomainError);
  CHECK_THROWS_AS(PreStudyOdds(std::numeric_limits<double>::infinity()), DomainError);
  CHECK_THROWS_AS(HypothesisPrior(0.0), DomainError);
  CHECK_THROWS_AS(HypothesisPrior(1.0), DomainError);
  // Odds so small that 1/(r+1) rounds to 1 leave no valid prior.
  CHECK_THROWS_AS(HypothesisPrior::from_odds(PreStudyOdds(1e-20)), DomainError);

  CHECK(HypothesisPrior::from_odds(PreStudyOdds(1.0)).p_h() == 0.5);
  CHECK(HypothesisPrior::from_odds(PreStudyOdds(0.02)).p_h() == Catch::Approx(1.0 / 1.02));
  CHECK(HypothesisPrior(0.25).odds().value() == Catch::Approx(3.0));
}

TEST_CASE("Prior and odds conversions round-trip", "[probability][property]") {
  auto g = oracle::property_rng(1);
  for (int i = 0; i < 20000; ++i) {
    const double r = std::pow(10.0, oracle::uniform(g, -6.0, 6.0));
    const HypothesisPrior prior = HypothesisPrior::from_odds(PreStudyOdds(r));
    // 1 - p_h carries an absolute rounding error of ~1e-16, so odds near
    // 1e-6 only survive the trip to ~1e-10 relative.
    REQUIRE(std::abs(prior.odds().value() - r) <= 1e-9 * r);
    REQUIRE(std::abs(HypothesisPrior::from_odds(prior.odds()).p_h() - prior.p_h()) <= 1e-12);
    REQUIRE(prior.p_h() + prior.p_not_h() == Catch::Approx(1.0).margin(1e-15));
  }
}
