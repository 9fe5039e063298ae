#include "pimachine/machine.hpp"

#include <string>

namespace pimachine {

const char* event_name(EventType e) {
  switch (e) {
    case EventType::BlockBlock: return "block_block";
    case EventType::WallBounce: return "wall_bounce";
    case EventType::Terminated: return "terminated";
  }
  return "unknown";
}

void MachineConfig::validate() const {
  if (m1 <= 0 || m2 <= 0) {
    throw std::invalid_argument("masses must be positive");
  }
  if (v2_initial >= 0) {
    throw std::invalid_argument("v2_initial must be negative (block 2 approaches the wall)");
  }
}

EventType classify_next_event(const Rational& v1, const Rational& v2) {
  if (v1 < 0) return EventType::WallBounce;
  if (v1 <= v2) return EventType::Terminated;
  return EventType::BlockBlock;
}

MachineState initial_state(const MachineConfig& c) {
  c.validate();
  MachineState s;
  s.v1 = c.v1_initial;
  s.v2 = c.v2_initial;
  s.collisions = 0;
  s.next_event = classify_next_event(s.v1, s.v2);
  return s;
}

Rational kinetic_energy(const MachineState& s, const MachineConfig& c) {
  return c.m1 * s.v1 * s.v1 + c.m2 * s.v2 * s.v2;
}

Rational momentum(const MachineState& s, const MachineConfig& c) {
  return c.m1 * s.v1 + c.m2 * s.v2;
}

MachineState step_block_collision(const MachineState& s, const MachineConfig& c) {
  if (s.next_event != EventType::BlockBlock) {
    throw ContractError("step_block_collision called while next event is " +
                        std::string(event_name(s.next_event)));
  }
  const Rational total = c.m1 + c.m2;
  MachineState out;
  out.v1 = ((c.m1 - c.m2) * s.v1 + 2 * c.m2 * s.v2) / total;
  out.v2 = ((c.m2 - c.m1) * s.v2 + 2 * c.m1 * s.v1) / total;
  out.collisions = s.collisions + 1;
  out.next_event = classify_next_event(out.v1, out.v2);
  return out;
}

MachineState step_wall_bounce(const MachineState& s) {
  if (s.next_event != EventType::WallBounce) {
    throw ContractError("step_wall_bounce called while next event is " +
                        std::string(event_name(s.next_event)));
  }
  MachineState out;
  out.v1 = -s.v1;
  out.v2 = s.v2;
  out.collisions = s.collisions + 1;
  out.next_event = classify_next_event(out.v1, out.v2);
  return out;
}

CollisionTrace run_machine(const MachineConfig& c, TraceMode mode,
                           std::uint64_t max_events) {
  CollisionTrace trace;
  trace.mode = mode;
  MachineState state = initial_state(c);
  if (mode == TraceMode::FullTrace) {
    trace.states.push_back(state);
  }
  while (state.next_event != EventType::Terminated) {
    if (state.collisions >= max_events) {
      throw LimitError("event count exceeded max_events = " + std::to_string(max_events));
    }
    state = state.next_event == EventType::BlockBlock
                ? step_block_collision(state, c)
                : step_wall_bounce(state);
    if (mode == TraceMode::FullTrace) {
      trace.states.push_back(state);
    }
  }
  trace.final_state = state;
  trace.total_collisions = state.collisions;
  return trace;
}

}  // namespace pimachine
