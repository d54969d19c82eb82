#include <catch2/catch_amalgamated.hpp>

#include <cmath>
#include <limits>

#include "nprel/normal.hpp"
#include "oracles.hpp"

using namespace nprel;
using Catch::Approx;

TEST_CASE("Oracle CDF is self-consistent", "[normal][oracle]") {
  // Series and continued fraction agree where both converge well.
  for (double x : {2.5, 3.0, 3.5}) {
    const oracle::real cf = 1 - oracle::upper_tail_cf(x);
    oracle::real term = x, sum = x;
    for (int k = 1; k < 200; ++k) {
      term *= static_cast<oracle::real>(x) * x / (2 * k + 1);
      sum += term;
    }
    const oracle::real series = 0.5L + oracle::pdf(x) * sum;
    CHECK(std::abs(static_cast<double>(cf - series)) < 1e-15);
  }
}

TEST_CASE("normal_cdf matches the oracle", "[normal]") {
  CHECK(normal_cdf(0.0) == 0.5);
  CHECK(normal_cdf(1.6449) == Approx(0.95).margin(1e-4));
  CHECK(normal_cdf(1.6449) == Approx(0.950004782531654).margin(1e-13));

  const double far = normal_cdf(-8.0);
  CHECK(far > 0.0);
  CHECK(far < 1e-14);
  // Mills-ratio bound phi(x)/x * (1 - 1/x^2) < 1 - Phi(x) < phi(x)/x.
  const double mills = normal_pdf(8.0) / 8.0;
  CHECK(far < mills);
  CHECK(far > mills * (1.0 - 1.0 / 64.0));
  CHECK(far == Approx(static_cast<double>(oracle::cdf(-8.0L))).epsilon(1e-12));

  for (double x = -7.5; x <= 7.5; x += 0.01) {
    CAPTURE(x);
    REQUIRE(std::abs(normal_cdf(x) - static_cast<double>(oracle::cdf(x))) <= 1e-10);
  }
  CHECK_THROWS_AS(normal_cdf(std::numeric_limits<double>::infinity()), DomainError);
  CHECK_THROWS_AS(normal_cdf(std::nan("")), DomainError);
}

TEST_CASE("normal_cdf is symmetric", "[normal][property]") {
  auto g = oracle::property_rng(4);
  for (int i = 0; i < 100000; ++i) {
    const double x = oracle::uniform(g, -40.0, 40.0);
    REQUIRE(std::abs(normal_cdf(x) + normal_cdf(-x) - 1.0) <= 1e-12);
  }
}

TEST_CASE("normal_quantile reference values", "[normal]") {
  CHECK(normal_quantile(0.5) == 0.0);
  CHECK(normal_quantile(0.95) == Approx(1.64485).margin(1e-4));
  CHECK(normal_quantile(0.975) == Approx(1.959963984540).margin(1e-6));
  CHECK(normal_quantile(0.1) == Approx(-1.281551565545).margin(1e-6));
  for (double p : {1e-10, 1e-5, 0.01, 0.3, 0.7, 0.99, 1 - 1e-10}) {
    CAPTURE(p);
    CHECK(normal_quantile(p) ==
          Approx(static_cast<double>(oracle::quantile(p))).margin(1e-9));
  }
  CHECK_THROWS_AS(normal_quantile(0.0), DomainError);
  CHECK_THROWS_AS(normal_quantile(1.0), DomainError);
  CHECK_THROWS_AS(normal_quantile(-0.2), DomainError);
}

TEST_CASE("normal_quantile round-trips through normal_cdf", "[normal][property]") {
  auto g = oracle::property_rng(5);
  for (int i = 0; i < 100000; ++i) {
    // Log-uniform in the tails, uniform in the bulk.
    double p = i % 2 ? oracle::uniform(g, 1e-10, 1 - 1e-10)
                     : std::pow(10.0, oracle::uniform(g, -10.0, -0.3));
    if (i % 4 == 0) p = 1.0 - p;
    CAPTURE(p);
    REQUIRE(std::abs(normal_cdf(normal_quantile(p)) - p) <= 1e-9);
  }
}
