#include <catch2/catch_amalgamated.hpp>

#include "nprel/worked_examples.hpp"

using namespace nprel;
using Catch::Approx;

namespace {

const ExampleCheck& find(const ExampleReport& report, const std::string& id) {
  for (const auto& c : report.checks) {
    if (c.example->id == id) return c;
  }
  FAIL("no worked example " << id);
  throw;
}

double computed(const ExampleCheck& c, const std::string& name) {
  for (const auto& v : c.values) {
    if (v.name == name) return v.computed;
  }
  FAIL("no value " << name);
  throw;
}

}  // namespace

TEST_CASE("Every worked example passes", "[examples]") {
  const ExampleReport report = check_worked_examples();
  CHECK(report.all_passed);
  for (const auto& c : report.checks) {
    CAPTURE(c.example->id);
    CHECK(c.passed);
    CHECK_FALSE(c.example->source.empty());
    CHECK((c.example->p_h.has_value() != c.example->r.has_value()));
  }
}

TEST_CASE("Worked example values", "[examples]") {
  const ExampleReport report = check_worked_examples();
  CHECK(computed(find(report, "even-odds-low-power"), "p_t") == Approx(0.525).margin(1e-12));
  CHECK(computed(find(report, "fail-high-prior"), "p_t") == Approx(0.477).margin(1e-12));
  CHECK(computed(find(report, "fail-high-prior"), "meets_minimal") == 0.0);
  CHECK(computed(find(report, "fail-low-prior"), "p_t") == Approx(0.3537).margin(1e-12));
  const auto& low = find(report, "low-odds-underpowered");
  CHECK(computed(low, "ppv") == Approx(0.0384615384615).margin(1e-12));
  CHECK(computed(low, "npv") == Approx(0.980586370840).margin(1e-12));
  CHECK(computed(low, "p_t") == Approx(0.970980392157).margin(1e-12));
  CHECK(computed(find(report, "asymmetric-baseline"), "p_t") == Approx(0.93).margin(1e-12));
}

TEST_CASE("Known discrepancy is judged on the recomputed value", "[examples]") {
  const ExampleReport report = check_worked_examples();
  const auto& swapped = find(report, "asymmetric-swapped");
  CHECK(swapped.passed);
  REQUIRE(swapped.discrepancy_note.has_value());
  CHECK(computed(swapped, "p_t") == Approx(0.92).margin(1e-12));
  CHECK(swapped.values.front().expected == 0.72);

  const std::string text = format_example_report(report);
  CHECK(text.find("known discrepancy") != std::string::npos);
  CHECK(text.find("printed 0.72") != std::string::npos);
  CHECK(text.find("computed 0.92") != std::string::npos);

  // Without the recomputed override, the printed value would fail.
  WorkedExample naked = *swapped.example;
  naked.known_discrepancy.reset();
  CHECK_FALSE(check_example(naked).passed);
}
