#pragma once

#include "pimachine/angle.hpp"
#include "pimachine/equivalence.hpp"
#include "pimachine/grover.hpp"
#include "pimachine/machine.hpp"

#include <nlohmann/json_fwd.hpp>

#include <string>
#include <vector>

namespace pimachine {

// Machine-readable exports. All numbers are emitted deterministically:
// rationals as exact decimal integer strings, doubles at round-trip
// precision, no timestamps.

// header: index,event_type,v1_num,v1_den,v2_num,v2_den  (one row per event)
std::string trace_to_csv(const CollisionTrace& trace);
nlohmann::json trace_to_json(const CollisionTrace& trace);

// CountOnly summary: {total_collisions, m1, m2}
nlohmann::json count_summary_json(const CollisionTrace& trace, const MachineConfig& c);

// {count, certified, precision_used, mass_ratio}; count is a JSON number
// when it fits in 53 bits, a decimal string beyond that
nlohmann::json certified_count_json(const CertifiedCount& cc, const Rational& mass_ratio);

struct GroverTracePoint {
  std::uint64_t t = 0;
  double p_statevector = 0.0;
  double p_closed_form = 0.0;
  double theta_t = 0.0;
};

// Probability trace for t = 0..steps from the uniform state.
std::vector<GroverTracePoint> grover_probability_trace(const GroverInstance& inst,
                                                       std::uint64_t steps);

// header: t,P_statevector,P_closed_form,theta_t
std::string grover_trace_to_csv(const std::vector<GroverTracePoint>& trace);
nlohmann::json instance_json(const GroverInstance& inst);
nlohmann::json grover_run_json(const GroverInstance& inst,
                               const std::vector<GroverTracePoint>& trace);

nlohmann::json report_to_json(const ComparisonReport& report);
// header: t,machine_theta,grover_theta,deviation
std::string report_to_csv(const ComparisonReport& report);

std::string format_double(double v);

}  // namespace pimachine
