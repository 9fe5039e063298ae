#include "pimachine/angle.hpp"
#include "pimachine/equivalence.hpp"
#include "pimachine/grover.hpp"
#include "pimachine/io.hpp"
#include "pimachine/machine.hpp"

#include <nlohmann/json.hpp>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <string>

namespace py = pybind11;
using nlohmann::json;
using namespace pimachine;

namespace {

py::object to_py(const json& j) {
  switch (j.type()) {
    case json::value_t::null: return py::none();
    case json::value_t::boolean: return py::bool_(j.get<bool>());
    case json::value_t::number_integer: return py::int_(j.get<std::int64_t>());
    case json::value_t::number_unsigned: return py::int_(j.get<std::uint64_t>());
    case json::value_t::number_float: return py::float_(j.get<double>());
    case json::value_t::string: return py::str(j.get<std::string>());
    case json::value_t::array: {
      py::list out;
      for (const auto& item : j) out.append(to_py(item));
      return out;
    }
    case json::value_t::object: {
      py::dict out;
      for (auto it = j.begin(); it != j.end(); ++it) {
        out[py::str(it.key())] = to_py(it.value());
      }
      return out;
    }
    default: return py::none();
  }
}

MachineConfig config_from(const std::string& m1, const std::string& m2) {
  MachineConfig c;
  c.m1 = parse_rational(m1);
  c.m2 = parse_rational(m2);
  c.v2_initial = -1;
  c.validate();
  return c;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Exact two-block collision machine and Grover search simulator";

  m.def(
      "simulate",
      [](const std::string& m1, const std::string& m2, bool full_trace,
         std::uint64_t max_events) {
        const MachineConfig c = config_from(m1, m2);
        const CollisionTrace trace = run_machine(
            c, full_trace ? TraceMode::FullTrace : TraceMode::CountOnly, max_events);
        return to_py(full_trace ? trace_to_json(trace) : count_summary_json(trace, c));
      },
      py::arg("m1"), py::arg("m2"), py::arg("full_trace") = false,
      py::arg("max_events") = kDefaultMaxEvents,
      "Run the exact machine; masses are integer or num/den strings.");

  m.def(
      "count",
      [](const std::string& m1, const std::string& m2, long max_bits) {
        const MachineConfig c = config_from(m1, m2);
        return to_py(certified_count_json(
            collision_count_closed_form(c.m1, c.m2, max_bits), c.mass_ratio()));
      },
      py::arg("m1"), py::arg("m2"), py::arg("max_bits") = kDefaultMaxBits,
      "Certified closed-form collision count.");

  m.def(
      "pi_digits",
      [](unsigned n, long max_bits) { return pi_digits(n, max_bits); },
      py::arg("n"), py::arg("max_bits") = kDefaultMaxBits,
      "First n+1 digits of pi via the mass ratio 10^(2n).");

  m.def(
      "theta_star",
      [](const std::string& m1, const std::string& m2, long bits) {
        const Interval theta = theta_star(parse_rational(m1), parse_rational(m2), bits);
        py::dict out;
        out["lo"] = theta.lower_double();
        out["hi"] = theta.upper_double();
        out["mid"] = theta.midpoint_double();
        return out;
      },
      py::arg("m1"), py::arg("m2"), py::arg("bits") = kDefaultThetaBits,
      "Certified enclosure of arcsin(sqrt(m1/(m1+m2))).");

  m.def(
      "grover_trace",
      [](int n, std::uint64_t k, std::uint64_t steps) {
        const GroverInstance inst = make_instance(n, k);
        return to_py(grover_run_json(inst, grover_probability_trace(inst, steps)));
      },
      py::arg("n"), py::arg("k") = 0, py::arg("steps") = 1,
      "State-vector probabilities against the closed form, t = 0..steps.");

  m.def("success_probability", &success_probability_closed_form, py::arg("t"),
        py::arg("theta"), "sin^2((2t+1) theta)");

  m.def(
      "g_matrix",
      [](double theta) {
        const Mat2 g = g_matrix(theta);
        return py::make_tuple(py::make_tuple(g.a, g.b), py::make_tuple(g.c, g.d));
      },
      py::arg("theta"), "Diffusion operator as a 2x2 rotation matrix.");

  m.def(
      "compare",
      [](const std::string& m1, const std::string& m2, std::uint64_t max_events,
         long max_bits) {
        CompareOptions opts;
        opts.max_events = max_events;
        opts.max_bits = max_bits;
        return to_py(report_to_json(compare(config_from(m1, m2), opts)));
      },
      py::arg("m1"), py::arg("m2"), py::arg("max_events") = kDefaultMaxEvents,
      py::arg("max_bits") = kDefaultMaxBits,
      "Machine vs Grover trajectory and count report.");
}
