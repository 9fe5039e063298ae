#pragma once

#include "pimachine/machine.hpp"
#include "pimachine/rational.hpp"

#include <cstdint>
#include <optional>
#include <vector>

namespace pimachine {

// Side-by-side check that the machine trajectory and the diffusion rotation
// are the same motion: machine angles after the t-th block collision must
// sit at pi + 2*t*theta*, the 2-D evolution must reproduce them, and the
// search-probability angle sequence (2t+1)*theta* must lead the machine
// sequence by exactly theta*.
struct ComparisonReport {
  Rational mass_ratio;
  std::vector<double> machine_angles;  // one per block collision, t = 1..T
  std::vector<double> grover_angles;
  double max_angle_deviation = 0.0;
  bool counts_match = false;
  double offset_used = 0.0;  // best-fit lead of (2t+1)*theta* over machine
  double theta_star = 0.0;
  std::uint64_t machine_count = 0;
  BigInt closed_form_count = 0;
  bool count_certified = false;
  bool within_tolerance = false;
  std::int64_t first_bad_index = -1;  // -1 when every angle is in tolerance
};

inline constexpr double kAngleTolerance = 1e-9;

// Polar angles of the weighted state after each block collision, lifted to
// the continuous branch that starts at theta_0 = pi. Each lift step adds
// the unique representative in [0, 2pi) of the raw atan2 increment; that is
// unambiguous because a bounce+collision pair advances by 2*theta* < pi.
std::vector<double> machine_angle_trace(const CollisionTrace& trace,
                                        const MachineConfig& c);

struct CompareOptions {
  std::uint64_t max_events = kDefaultMaxEvents;
  long max_bits = 1'000'000;
  // Traces above this many events skip the angle comparison and only
  // compare counts.
  std::uint64_t full_trace_limit = 100'000;
};

ComparisonReport compare(const MachineConfig& c, const CompareOptions& opts = {});

}  // namespace pimachine
