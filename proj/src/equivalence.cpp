#include "pimachine/equivalence.hpp"

#include "pimachine/angle.hpp"
#include "pimachine/grover.hpp"

#include <cmath>
#include <numbers>

namespace pimachine {

namespace {

// increment from the previous lifted angle, reduced into [0, 2pi)
double lift_step(double prev_lifted, double prev_raw, double raw) {
  double delta = std::fmod(raw - prev_raw, 2.0 * std::numbers::pi);
  if (delta < 0) delta += 2.0 * std::numbers::pi;
  return prev_lifted + delta;
}

}  // namespace

std::vector<double> machine_angle_trace(const CollisionTrace& trace,
                                        const MachineConfig& c) {
  std::vector<double> angles;
  if (trace.states.empty()) {
    return angles;
  }
  const double w1 = std::sqrt(to_double(c.m1));
  const double w2 = std::sqrt(to_double(c.m2));
  const auto raw_angle = [&](const MachineState& s) {
    return std::atan2(w1 * to_double(s.v1), w2 * to_double(s.v2));
  };

  double prev_raw = raw_angle(trace.states.front());
  // initial angle in [0, 2pi); pi for the standard start v1 = 0, v2 < 0
  double lifted = std::fmod(prev_raw + 2.0 * std::numbers::pi, 2.0 * std::numbers::pi);
  for (std::size_t i = 1; i < trace.states.size(); ++i) {
    const bool block_event = trace.states[i - 1].next_event == EventType::BlockBlock;
    if (!block_event) continue;
    const double raw = raw_angle(trace.states[i]);
    lifted = lift_step(lifted, prev_raw, raw);
    prev_raw = raw;
    angles.push_back(lifted);
  }
  return angles;
}

ComparisonReport compare(const MachineConfig& c, const CompareOptions& opts) {
  c.validate();
  if (c.v1_initial != 0) {
    throw std::invalid_argument("compare assumes the standard start v1 = 0");
  }

  ComparisonReport report;
  report.mass_ratio = c.mass_ratio();

  const CertifiedCount closed =
      collision_count_closed_form(c.m1, c.m2, opts.max_bits);
  report.closed_form_count = closed.count;
  report.count_certified = closed.certified;

  const bool full = closed.certified && closed.count >= 0 &&
                    closed.count <= BigInt(opts.full_trace_limit);
  const CollisionTrace trace = run_machine(
      c, full ? TraceMode::FullTrace : TraceMode::CountOnly, opts.max_events);
  report.machine_count = trace.total_collisions;
  report.counts_match =
      closed.certified && closed.count == BigInt(trace.total_collisions);

  report.theta_star = theta_star(c.m1, c.m2).midpoint_double();

  if (full) {
    report.machine_angles = machine_angle_trace(trace, c);

    // same rotation, driven by the diffusion matrix from angle pi
    const Mat2 g = g_matrix(report.theta_star);
    TwoDimState v{-1.0, 0.0};
    double lifted = std::numbers::pi;
    double prev_raw = v.angle();
    report.grover_angles.reserve(report.machine_angles.size());
    for (std::size_t t = 0; t < report.machine_angles.size(); ++t) {
      v = {g.a * v.heavy + g.b * v.light, g.c * v.heavy + g.d * v.light};
      const double raw = v.angle();
      lifted = lift_step(lifted, prev_raw, raw);
      prev_raw = raw;
      report.grover_angles.push_back(lifted);
    }
  }

  report.within_tolerance = report.counts_match;
  double offset_sum = 0.0;
  for (std::size_t i = 0; i < report.machine_angles.size(); ++i) {
    const double deviation =
        std::abs(report.machine_angles[i] - report.grover_angles[i]);
    if (deviation > report.max_angle_deviation) {
      report.max_angle_deviation = deviation;
    }
    if (deviation > kAngleTolerance) {
      report.within_tolerance = false;
      if (report.first_bad_index < 0) {
        report.first_bad_index = static_cast<std::int64_t>(i);
      }
    }
    const double t = static_cast<double>(i + 1);
    offset_sum += (2.0 * t + 1.0) * report.theta_star -
                  (report.machine_angles[i] - std::numbers::pi);
  }
  if (!report.machine_angles.empty()) {
    report.offset_used =
        offset_sum / static_cast<double>(report.machine_angles.size());
  }
  return report;
}

}  // namespace pimachine
