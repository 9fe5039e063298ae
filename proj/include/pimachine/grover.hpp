#pragma once

#include "pimachine/rational.hpp"

#include <complex>
#include <cstdint>
#include <vector>

namespace pimachine {

// Search instance over N = 2^n states with one marked index k.
// sin(theta) = sqrt(1/N): the m1 = 1, m2 = N-1 specialization of the
// machine's half-angle.
struct GroverInstance {
  int n = 1;
  std::uint64_t N = 2;
  std::uint64_t k = 0;
  double theta = 0.0;
  Rational mass_ratio = 1;  // exact ratio the instance was derived from
};

GroverInstance make_instance(int n, std::uint64_t k = 0);

// Qubit count from the mass ratio: n = ceil(log2(1 + m2/m1)), computed on
// exact rationals. Requires m2/m1 >= 1. Note the padding is lossy
// (ratio 100 -> N = 128): theta comes from N, mass_ratio keeps the ratio.
GroverInstance instance_from_ratio(const Rational& m1, const Rational& m2,
                                   std::uint64_t k = 0);

struct StateVector {
  std::vector<std::complex<double>> amplitudes;

  std::uint64_t size() const { return amplitudes.size(); }
  double norm() const;
  double probability(std::uint64_t i) const;

  static StateVector uniform(int n);
  static StateVector basis(int n, std::uint64_t i);
};

// |k> -> -|k>, everything else untouched
StateVector apply_oracle(StateVector s, std::uint64_t k);

// Reflection about the uniform superposition u: s -> 2<u|s>u - s.
// Sign fixed so u itself is a fixed point.
StateVector apply_phase_shift_about_start(StateVector s);

// t rounds of (oracle, then reflection)
StateVector grover_iterate(StateVector s, std::uint64_t k, std::uint64_t t);

// Pr(k) after t rounds from uniform: sin^2((2t+1)*theta)
double success_probability_closed_form(std::uint64_t t, double theta);

// row-major 2x2 real matrix
struct Mat2 {
  double a = 1, b = 0;
  double c = 0, d = 1;

  Mat2 operator*(const Mat2& rhs) const;
  double det() const { return a * d - b * c; }
  double trace() const { return a + d; }
  Mat2 transpose() const { return {a, c, b, d}; }
};

// State in the weighted velocity plane: (heavy, light) along
// (sqrt(m2)*v2, sqrt(m1)*v1).
struct TwoDimState {
  double heavy = -1.0;
  double light = 0.0;

  double norm() const;
  double angle() const;  // atan2(light, heavy), principal branch
};

// Diffusion as the literal product of the two reflections,
// G = U^T Z U Z with U the theta rotation and Z = diag(1,-1).
// Equals a rotation by +2*theta.
Mat2 g_matrix(double theta);

TwoDimState evolve_two_dim(const TwoDimState& initial, double theta,
                           std::uint64_t t);

}  // namespace pimachine
