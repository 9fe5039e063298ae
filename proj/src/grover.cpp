#include "pimachine/grover.hpp"

#include <cmath>
#include <numeric>
#include <stdexcept>
#include <string>

namespace pimachine {

namespace {

constexpr int kMaxInstanceQubits = 62;  // N must fit an unsigned 64-bit count
constexpr int kMaxVectorQubits = 26;    // dense double-precision vector, desk scale

void check_qubits(int n, int limit) {
  if (n < 1 || n > limit) {
    throw std::invalid_argument("qubit count must be in [1, " +
                                std::to_string(limit) + "]");
  }
}

}  // namespace

GroverInstance make_instance(int n, std::uint64_t k) {
  check_qubits(n, kMaxInstanceQubits);
  GroverInstance inst;
  inst.n = n;
  inst.N = std::uint64_t{1} << n;
  if (k >= inst.N) {
    throw std::out_of_range("marked index " + std::to_string(k) +
                            " out of range for N = " + std::to_string(inst.N));
  }
  inst.k = k;
  inst.theta = std::asin(std::sqrt(1.0 / static_cast<double>(inst.N)));
  inst.mass_ratio = Rational(BigInt(inst.N) - 1);
  return inst;
}

GroverInstance instance_from_ratio(const Rational& m1, const Rational& m2,
                                   std::uint64_t k) {
  if (m1 <= 0 || m2 <= 0) {
    throw std::invalid_argument("masses must be positive");
  }
  const Rational ratio = m2 / m1;
  if (ratio < 1) {
    throw std::invalid_argument("mass ratio m2/m1 must be >= 1 to map onto qubits");
  }
  const unsigned n = ceil_log2(1 + ratio);
  GroverInstance inst = make_instance(static_cast<int>(n), k);
  inst.mass_ratio = ratio;
  return inst;
}

double StateVector::norm() const {
  double s = 0.0;
  for (const auto& a : amplitudes) s += std::norm(a);
  return std::sqrt(s);
}

double StateVector::probability(std::uint64_t i) const {
  if (i >= size()) {
    throw std::out_of_range("amplitude index out of range");
  }
  return std::norm(amplitudes[i]);
}

StateVector StateVector::uniform(int n) {
  check_qubits(n, kMaxVectorQubits);
  const std::uint64_t N = std::uint64_t{1} << n;
  StateVector s;
  s.amplitudes.assign(N, {1.0 / std::sqrt(static_cast<double>(N)), 0.0});
  return s;
}

StateVector StateVector::basis(int n, std::uint64_t i) {
  check_qubits(n, kMaxVectorQubits);
  const std::uint64_t N = std::uint64_t{1} << n;
  if (i >= N) {
    throw std::out_of_range("basis index out of range");
  }
  StateVector s;
  s.amplitudes.assign(N, {0.0, 0.0});
  s.amplitudes[i] = {1.0, 0.0};
  return s;
}

StateVector apply_oracle(StateVector s, std::uint64_t k) {
  if (k >= s.size()) {
    throw std::out_of_range("marked index out of range");
  }
  s.amplitudes[k] = -s.amplitudes[k];
  return s;
}

StateVector apply_phase_shift_about_start(StateVector s) {
  // 2<u|s>u - s collapses to the inversion about the mean amplitude
  const auto n = static_cast<double>(s.size());
  std::complex<double> sum{0.0, 0.0};
  for (const auto& a : s.amplitudes) sum += a;
  const std::complex<double> twice_mean = 2.0 * sum / n;
  for (auto& a : s.amplitudes) a = twice_mean - a;
  return s;
}

StateVector grover_iterate(StateVector s, std::uint64_t k, std::uint64_t t) {
  for (std::uint64_t i = 0; i < t; ++i) {
    s = apply_phase_shift_about_start(apply_oracle(std::move(s), k));
  }
  return s;
}

double success_probability_closed_form(std::uint64_t t, double theta) {
  const double x = std::sin((2.0 * static_cast<double>(t) + 1.0) * theta);
  return x * x;
}

Mat2 Mat2::operator*(const Mat2& rhs) const {
  return {a * rhs.a + b * rhs.c, a * rhs.b + b * rhs.d,
          c * rhs.a + d * rhs.c, c * rhs.b + d * rhs.d};
}

double TwoDimState::norm() const { return std::hypot(heavy, light); }

double TwoDimState::angle() const { return std::atan2(light, heavy); }

Mat2 g_matrix(double theta) {
  const double c = std::cos(theta);
  const double s = std::sin(theta);
  const Mat2 rotation{c, s, -s, c};
  const Mat2 reflect_z{1, 0, 0, -1};
  return rotation.transpose() * reflect_z * rotation * reflect_z;
}

TwoDimState evolve_two_dim(const TwoDimState& initial, double theta,
                           std::uint64_t t) {
  const Mat2 g = g_matrix(theta);
  TwoDimState v = initial;
  for (std::uint64_t i = 0; i < t; ++i) {
    v = {g.a * v.heavy + g.b * v.light, g.c * v.heavy + g.d * v.light};
  }
  return v;
}

}  // namespace pimachine
