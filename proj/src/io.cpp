#include "pimachine/io.hpp"

#include <nlohmann/json.hpp>

#include <cstdio>
#include <limits>

namespace pimachine {

namespace {

using nlohmann::json;

// JSON numbers stay exact up to 2^53; larger counts travel as strings
json bigint_json(const BigInt& v) {
  static const BigInt kJsonSafe = BigInt(1) << 53;
  if (v >= -kJsonSafe && v <= kJsonSafe) {
    return v.convert_to<std::int64_t>();
  }
  return v.str();
}

void append_event_row(std::string& out, std::uint64_t index, EventType type,
                      const MachineState& s) {
  out += std::to_string(index);
  out += ',';
  out += event_name(type);
  out += ',';
  out += numerator(s.v1).str();
  out += ',';
  out += denominator(s.v1).str();
  out += ',';
  out += numerator(s.v2).str();
  out += ',';
  out += denominator(s.v2).str();
  out += '\n';
}

}  // namespace

std::string format_double(double v) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  return buf;
}

std::string trace_to_csv(const CollisionTrace& trace) {
  std::string out = "index,event_type,v1_num,v1_den,v2_num,v2_den\n";
  for (std::size_t i = 1; i < trace.states.size(); ++i) {
    append_event_row(out, trace.states[i].collisions,
                     trace.states[i - 1].next_event, trace.states[i]);
  }
  return out;
}

nlohmann::json trace_to_json(const CollisionTrace& trace) {
  json events = json::array();
  for (std::size_t i = 1; i < trace.states.size(); ++i) {
    const MachineState& s = trace.states[i];
    events.push_back({{"index", s.collisions},
                      {"event_type", event_name(trace.states[i - 1].next_event)},
                      {"v1_num", numerator(s.v1).str()},
                      {"v1_den", denominator(s.v1).str()},
                      {"v2_num", numerator(s.v2).str()},
                      {"v2_den", denominator(s.v2).str()}});
  }
  return json{{"total_collisions", trace.total_collisions}, {"events", events}};
}

nlohmann::json count_summary_json(const CollisionTrace& trace,
                                  const MachineConfig& c) {
  return json{{"total_collisions", trace.total_collisions},
              {"m1", to_string(c.m1)},
              {"m2", to_string(c.m2)}};
}

nlohmann::json certified_count_json(const CertifiedCount& cc,
                                    const Rational& mass_ratio) {
  return json{{"count", bigint_json(cc.count)},
              {"certified", cc.certified},
              {"precision_used", cc.precision_used},
              {"mass_ratio", to_string(mass_ratio)}};
}

std::vector<GroverTracePoint> grover_probability_trace(const GroverInstance& inst,
                                                       std::uint64_t steps) {
  std::vector<GroverTracePoint> trace;
  trace.reserve(steps + 1);
  StateVector s = StateVector::uniform(inst.n);
  for (std::uint64_t t = 0;; ++t) {
    GroverTracePoint point;
    point.t = t;
    point.p_statevector = s.probability(inst.k);
    point.p_closed_form = success_probability_closed_form(t, inst.theta);
    point.theta_t = (2.0 * static_cast<double>(t) + 1.0) * inst.theta;
    trace.push_back(point);
    if (t == steps) break;
    s = apply_phase_shift_about_start(apply_oracle(std::move(s), inst.k));
  }
  return trace;
}

std::string grover_trace_to_csv(const std::vector<GroverTracePoint>& trace) {
  std::string out = "t,P_statevector,P_closed_form,theta_t\n";
  for (const auto& p : trace) {
    out += std::to_string(p.t);
    out += ',';
    out += format_double(p.p_statevector);
    out += ',';
    out += format_double(p.p_closed_form);
    out += ',';
    out += format_double(p.theta_t);
    out += '\n';
  }
  return out;
}

nlohmann::json instance_json(const GroverInstance& inst) {
  return json{{"n", inst.n}, {"N", inst.N}, {"k", inst.k}, {"theta", inst.theta}};
}

nlohmann::json grover_run_json(const GroverInstance& inst,
                               const std::vector<GroverTracePoint>& trace) {
  json out = instance_json(inst);
  json rows = json::array();
  for (const auto& p : trace) {
    rows.push_back({{"t", p.t},
                    {"P_statevector", p.p_statevector},
                    {"P_closed_form", p.p_closed_form},
                    {"theta_t", p.theta_t}});
  }
  out["trace"] = std::move(rows);
  return out;
}

nlohmann::json report_to_json(const ComparisonReport& report) {
  return json{{"mass_ratio", to_string(report.mass_ratio)},
              {"machine_count", report.machine_count},
              {"closed_form_count", bigint_json(report.closed_form_count)},
              {"count_certified", report.count_certified},
              {"counts_match", report.counts_match},
              {"theta_star", report.theta_star},
              {"angle_count", report.machine_angles.size()},
              {"max_angle_deviation", report.max_angle_deviation},
              {"offset_used", report.offset_used},
              {"within_tolerance", report.within_tolerance},
              {"first_bad_index", report.first_bad_index}};
}

std::string report_to_csv(const ComparisonReport& report) {
  std::string out = "t,machine_theta,grover_theta,deviation\n";
  for (std::size_t i = 0; i < report.machine_angles.size(); ++i) {
    out += std::to_string(i + 1);
    out += ',';
    out += format_double(report.machine_angles[i]);
    out += ',';
    out += format_double(report.grover_angles[i]);
    out += ',';
    out += format_double(report.machine_angles[i] - report.grover_angles[i]);
    out += '\n';
  }
  return out;
}

}  // namespace pimachine
