#pragma once

#include "pimachine/errors.hpp"
#include "pimachine/rational.hpp"

#include <cstdint>
#include <stdexcept>
#include <vector>

namespace pimachine {

// Two blocks on a frictionless line with a wall on the left. Block 1 (mass
// m1) sits between the wall and block 2 (mass m2); block 2 starts moving
// toward the wall (v2 < 0). Every elastic event is counted: block-block
// collisions and wall bounces.
//
// With v1_initial = 0 the event order is determined by velocity signs alone,
// so no positions are tracked:
//   v1 < 0            -> block 1 is heading into the wall, wall bounce next
//   0 <= v1 <= v2     -> both receding, block 2 at least as fast: done
//   otherwise         -> block 2 overtakes block 1, block collision next
//
// In the weighted plane (sqrt(m2)*v2, sqrt(m1)*v1) the state lives on a
// circle of fixed radius; each wall bounce reflects over the horizontal
// axis and each block collision reflects over the axis tilted by theta*,
// so one bounce+collision pair advances the polar angle by exactly
// 2*theta* with sin(theta*) = sqrt(m1/(m1+m2)).

enum class EventType { BlockBlock, WallBounce, Terminated };

const char* event_name(EventType e);

struct MachineConfig {
  Rational m1;
  Rational m2;
  Rational v2_initial;
  Rational v1_initial = 0;

  // throws std::invalid_argument unless m1 > 0, m2 > 0, v2_initial < 0
  void validate() const;

  Rational mass_ratio() const { return m2 / m1; }
};

struct MachineState {
  Rational v1;
  Rational v2;
  std::uint64_t collisions = 0;
  EventType next_event = EventType::Terminated;
};

EventType classify_next_event(const Rational& v1, const Rational& v2);

MachineState initial_state(const MachineConfig& c);

// m1*v1^2 + m2*v2^2, exact
Rational kinetic_energy(const MachineState& s, const MachineConfig& c);

// m1*v1 + m2*v2, exact
Rational momentum(const MachineState& s, const MachineConfig& c);

// One elastic block-block collision:
//   v1' = ((m1-m2)*v1 + 2*m2*v2) / (m1+m2)
//   v2' = ((m2-m1)*v2 + 2*m1*v1) / (m1+m2)
// the unique non-trivial solution of momentum + kinetic energy conservation.
// Requires s.next_event == BlockBlock, else throws ContractError.
MachineState step_block_collision(const MachineState& s, const MachineConfig& c);

// Wall bounce: v1 -> -v1. Requires s.next_event == WallBounce.
MachineState step_wall_bounce(const MachineState& s);

enum class TraceMode { CountOnly, FullTrace };

struct CollisionTrace {
  TraceMode mode = TraceMode::CountOnly;
  // FullTrace: initial state followed by one state per event.
  // CountOnly: empty; only final_state and total_collisions survive.
  std::vector<MachineState> states;
  MachineState final_state;
  std::uint64_t total_collisions = 0;
};

inline constexpr std::uint64_t kDefaultMaxEvents = 100'000'000;

// Runs the machine to termination. Throws LimitError if the event count
// would exceed max_events (an explicit overflow, never a silent wrong count).
CollisionTrace run_machine(const MachineConfig& c,
                           TraceMode mode = TraceMode::CountOnly,
                           std::uint64_t max_events = kDefaultMaxEvents);

}  // namespace pimachine
