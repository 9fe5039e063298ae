#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "pimachine/angle.hpp"
#include "pimachine/equivalence.hpp"
#include "pimachine/machine.hpp"
#include "pimachine/rational.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

using namespace pimachine;

namespace {

MachineConfig config(const Rational& m1, const Rational& m2) {
  MachineConfig c;
  c.m1 = m1;
  c.m2 = m2;
  c.v2_initial = -1;
  return c;
}

constexpr double kPi = std::numbers::pi;

}  // namespace

TEST_CASE("equal masses: two quarter-turn pairs") {
  const MachineConfig c = config(1, 1);
  const auto trace = run_machine(c, TraceMode::FullTrace);
  const auto angles = machine_angle_trace(trace, c);
  REQUIRE(angles.size() == 2);
  CHECK(std::fabs(angles[0] - 1.5 * kPi) < 1e-12);
  CHECK(std::fabs(angles[1] - 2.0 * kPi) < 1e-12);
}

TEST_CASE("mass ratio 3: three sixth-turn pairs") {
  const MachineConfig c = config(1, 3);
  const auto trace = run_machine(c, TraceMode::FullTrace);
  const auto angles = machine_angle_trace(trace, c);
  REQUIRE(angles.size() == 3);
  for (std::size_t t = 1; t <= angles.size(); ++t) {
    CHECK(std::fabs(angles[t - 1] - (kPi + static_cast<double>(t) * kPi / 3.0)) <
          1e-12);
  }
}

TEST_CASE("count-only traces produce no angles") {
  const MachineConfig c = config(1, 100);
  const auto trace = run_machine(c, TraceMode::CountOnly);
  CHECK(machine_angle_trace(trace, c).empty());
}

TEST_CASE("compare on equal masses") {
  const ComparisonReport r = compare(config(1, 1));
  CHECK(r.machine_count == 3);
  CHECK(r.closed_form_count == 3);
  CHECK(r.count_certified);
  CHECK(r.counts_match);
  CHECK(r.within_tolerance);
  CHECK(r.first_bad_index == -1);
  REQUIRE(r.machine_angles.size() == 2);
  REQUIRE(r.grover_angles.size() == 2);
  CHECK(r.max_angle_deviation < 1e-12);
  CHECK(std::fabs(r.offset_used - kPi / 4.0) < 1e-12);
  CHECK(std::fabs(r.theta_star - kPi / 4.0) < 1e-15);
}

TEST_CASE("compare on the hundredfold ratio") {
  const ComparisonReport r = compare(config(1, 100));
  CHECK(r.machine_count == 31);
  CHECK(r.closed_form_count == 31);
  CHECK(r.counts_match);
  CHECK(r.within_tolerance);
  REQUIRE(r.machine_angles.size() == 16);
  CHECK(std::fabs(r.theta_star - 0.09966865249116202738) < 1e-15);
  CHECK(std::fabs(r.machine_angles[0] - 3.34092995857211729) < 1e-12);
  CHECK(r.max_angle_deviation < 1e-9);
  CHECK(std::fabs(r.offset_used - r.theta_star) < 1e-12);
}

TEST_CASE("compare below unit ratio") {
  const ComparisonReport r = compare(config(3, 1));
  CHECK(r.machine_count == 2);
  CHECK(r.counts_match);
  REQUIRE(r.machine_angles.size() == 1);
  CHECK(std::fabs(r.machine_angles[0] - 5.0 * kPi / 3.0) < 1e-12);
  CHECK(std::fabs(r.offset_used - kPi / 3.0) < 1e-12);
  CHECK(r.within_tolerance);
}

TEST_CASE("compare skips angles above the trace limit but still matches counts") {
  CompareOptions opts;
  opts.full_trace_limit = 10;
  const ComparisonReport r = compare(config(1, 100), opts);
  CHECK(r.machine_count == 31);
  CHECK(r.counts_match);
  CHECK(r.machine_angles.empty());
  CHECK(r.grover_angles.empty());
  CHECK(r.within_tolerance);
  CHECK(r.offset_used == 0.0);
  CHECK(r.max_angle_deviation == 0.0);
}

TEST_CASE("uncertified counts are reported as mismatches") {
  const Rational ratio = parse_rational(
      "48518804639414349172667765854998323738868641662762426742605379026815526"
      "3949898119735/4791766622887760031878181558964892719152931354106128868993"
      "12166570807351404004809");
  CompareOptions opts;
  opts.max_bits = 64;
  const ComparisonReport r = compare(config(1, ratio), opts);
  CHECK(r.machine_count == 100);
  CHECK_FALSE(r.count_certified);
  CHECK_FALSE(r.counts_match);
  CHECK_FALSE(r.within_tolerance);
}

TEST_CASE("compare rejects a pre-spun light block") {
  MachineConfig c = config(1, 1);
  c.v1_initial = 1;
  CHECK_THROWS_AS(compare(c), std::invalid_argument);
}

TEST_CASE("angles and offset across a ratio sweep") {
  for (int m2 = 2; m2 <= 40; ++m2) {
    const ComparisonReport r = compare(config(1, m2));
    CHECK(r.counts_match);
    CHECK(r.within_tolerance);
    CHECK(r.max_angle_deviation < 1e-9);
    CHECK(std::fabs(r.offset_used - r.theta_star) < 1e-9);
    // machine angles follow pi + 2 t theta*
    for (std::size_t i = 0; i < r.machine_angles.size(); ++i) {
      const double expected =
          kPi + 2.0 * static_cast<double>(i + 1) * r.theta_star;
      CHECK(std::fabs(r.machine_angles[i] - expected) < 1e-9);
    }
    // consecutive angles step by exactly 2 theta*
    for (std::size_t i = 0; i + 1 < r.machine_angles.size(); ++i) {
      const double step = r.machine_angles[i + 1] - r.machine_angles[i];
      CHECK(std::fabs(step - 2.0 * r.theta_star) < 1e-9);
    }
  }
}
