#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "pimachine/angle.hpp"
#include "pimachine/equivalence.hpp"
#include "pimachine/io.hpp"
#include "pimachine/machine.hpp"
#include "pimachine/rational.hpp"

#include <nlohmann/json.hpp>

#include <algorithm>
#include <stdexcept>
#include <string>

using namespace pimachine;
using nlohmann::json;

namespace {

MachineConfig config(const Rational& m1, const Rational& m2) {
  MachineConfig c;
  c.m1 = m1;
  c.m2 = m2;
  c.v2_initial = -1;
  return c;
}

}  // namespace

TEST_CASE("rational parsing") {
  CHECK(parse_rational("7") == 7);
  CHECK(parse_rational("-3/2") == Rational(-3, 2));
  CHECK(parse_rational("10/4") == Rational(5, 2));
  CHECK(parse_rational("  12 ") == 12);
  CHECK(to_string(parse_rational("10/4")) == "5/2");
  CHECK(to_string(parse_rational("3")) == "3");

  CHECK_THROWS_AS(parse_rational("1.5"), std::invalid_argument);
  CHECK_THROWS_AS(parse_rational("1e3"), std::invalid_argument);
  CHECK_THROWS_AS(parse_rational("1/0"), std::invalid_argument);
  CHECK_THROWS_AS(parse_rational(""), std::invalid_argument);
  CHECK_THROWS_AS(parse_rational("abc"), std::invalid_argument);
  CHECK_THROWS_AS(parse_rational("1/2/3"), std::invalid_argument);
}

TEST_CASE("ceil_log2 on rationals") {
  CHECK(ceil_log2(1) == 0);
  CHECK(ceil_log2(2) == 1);
  CHECK(ceil_log2(Rational(3, 2)) == 1);
  CHECK(ceil_log2(3) == 2);
  CHECK(ceil_log2(4) == 2);
  CHECK(ceil_log2(101) == 7);
  CHECK(ceil_log2(128) == 7);
  CHECK(ceil_log2(129) == 8);
  CHECK(ceil_log2(Rational(1, 3)) == 0);
  CHECK_THROWS_AS(ceil_log2(0), std::invalid_argument);
  CHECK_THROWS_AS(ceil_log2(Rational(-2)), std::invalid_argument);
}

TEST_CASE("trace CSV is exact and deterministic") {
  const auto trace = run_machine(config(1, 1), TraceMode::FullTrace);
  CHECK(trace_to_csv(trace) ==
        "index,event_type,v1_num,v1_den,v2_num,v2_den\n"
        "1,block_block,-1,1,0,1\n"
        "2,wall_bounce,1,1,0,1\n"
        "3,block_block,0,1,1,1\n");
}

TEST_CASE("trace JSON mirrors the CSV rows") {
  const auto trace = run_machine(config(3, 1), TraceMode::FullTrace);
  const json j = trace_to_json(trace);
  CHECK(j["total_collisions"] == 2);
  REQUIRE(j["events"].size() == 2);
  CHECK(j["events"][0]["event_type"] == "block_block");
  CHECK(j["events"][0]["v1_num"] == "-1");
  CHECK(j["events"][0]["v1_den"] == "2");
  CHECK(j["events"][1]["event_type"] == "wall_bounce");
  CHECK(j["events"][1]["index"] == 2);
  CHECK(j["events"][1]["v1_num"] == "1");
  CHECK(j["events"][1]["v2_num"] == "1");
  CHECK(j["events"][1]["v2_den"] == "2");
}

TEST_CASE("count summary JSON") {
  const MachineConfig c = config(parse_rational("10/4"), 100);
  const auto trace = run_machine(c);
  const json j = count_summary_json(trace, c);
  CHECK(j["m1"] == "5/2");
  CHECK(j["m2"] == "100");
  CHECK(j["total_collisions"] == run_machine(c).total_collisions);
}

TEST_CASE("certified count JSON keeps big integers exact") {
  CertifiedCount small;
  small.count = 31;
  small.certified = true;
  small.precision_used = 64;
  json j = certified_count_json(small, 100);
  CHECK(j["count"].is_number_integer());
  CHECK(j["count"] == 31);
  CHECK(j["certified"] == true);
  CHECK(j["precision_used"] == 64);
  CHECK(j["mass_ratio"] == "100");

  CertifiedCount big;
  big.count = BigInt("31415926535897932384626433");
  big.certified = true;
  big.precision_used = 128;
  j = certified_count_json(big, Rational(pow(BigInt(10), 50)));
  CHECK(j["count"].is_string());
  CHECK(j["count"] == "31415926535897932384626433");

  // boundary: 2^53 is still a number, one above becomes a string
  CertifiedCount edge;
  edge.count = BigInt(1) << 53;
  j = certified_count_json(edge, 1);
  CHECK(j["count"].is_number_integer());
  edge.count += 1;
  j = certified_count_json(edge, 1);
  CHECK(j["count"].is_string());
}

TEST_CASE("grover trace CSV and JSON") {
  const GroverInstance inst = make_instance(2, 3);
  const auto trace = grover_probability_trace(inst, 1);
  REQUIRE(trace.size() == 2);
  CHECK(trace[0].t == 0);
  CHECK(trace[0].p_statevector == doctest::Approx(0.25).epsilon(1e-12));
  CHECK(trace[1].p_statevector == doctest::Approx(1.0).epsilon(1e-12));
  CHECK(trace[1].p_closed_form == doctest::Approx(1.0).epsilon(1e-12));

  const std::string csv = grover_trace_to_csv(trace);
  CHECK(csv.rfind("t,P_statevector,P_closed_form,theta_t\n", 0) == 0);
  CHECK(csv.find("\n0,0.25,") != std::string::npos);

  const json run = grover_run_json(inst, trace);
  CHECK(run["n"] == 2);
  CHECK(run["N"] == 4);
  CHECK(run["k"] == 3);
  REQUIRE(run["trace"].size() == 2);
  CHECK(run["trace"][1]["t"] == 1);
  CHECK(run["trace"][0]["P_statevector"].get<double>() ==
        doctest::Approx(0.25).epsilon(1e-12));
}

TEST_CASE("comparison report serialization") {
  const ComparisonReport r = compare(config(1, 3));
  const json j = report_to_json(r);
  CHECK(j["mass_ratio"] == "3");
  CHECK(j["machine_count"] == 5);
  CHECK(j["closed_form_count"] == 5);
  CHECK(j["counts_match"] == true);
  CHECK(j["within_tolerance"] == true);
  CHECK(j["angle_count"] == 3);
  CHECK(j["first_bad_index"] == -1);

  const std::string csv = report_to_csv(r);
  CHECK(csv.rfind("t,machine_theta,grover_theta,deviation\n", 0) == 0);
  // one row per block collision plus the header
  CHECK(std::count(csv.begin(), csv.end(), '\n') == 4);
}

TEST_CASE("doubles round-trip through formatting") {
  CHECK(format_double(0.25) == "0.25");
  CHECK(format_double(1.0) == "1");
  const double theta = 0.09966865249116202738;
  CHECK(std::stod(format_double(theta)) == theta);
}
