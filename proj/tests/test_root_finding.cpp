#include <catch2/catch_amalgamated.hpp>

#include <cmath>

#include "nprel/root_finding.hpp"

using nprel::bisect;

TEST_CASE("bisect brackets a root to tolerance", "[root]") {
  const double root = bisect([](double x) { return x * x - 2.0; }, 0.0, 2.0, 1e-12);
  CHECK(std::abs(root - std::sqrt(2.0)) <= 1e-12);

  const double decreasing = bisect([](double x) { return 0.3 - x; }, 0.0, 1.0, 1e-10);
  CHECK(std::abs(decreasing - 0.3) <= 1e-10);

  CHECK(bisect([](double x) { return x; }, 0.0, 1.0, 1e-10) == 0.0);
}

TEST_CASE("bisect rejects bad brackets", "[root]") {
  auto f = [](double x) { return x + 1.0; };
  CHECK_THROWS_AS(bisect(f, 0.0, 1.0, 1e-10), nprel::DomainError);
  CHECK_THROWS_AS(bisect(f, 1.0, 0.0, 1e-10), nprel::DomainError);
  CHECK_THROWS_AS(bisect(f, -2.0, 0.0, 0.0), nprel::DomainError);
}
