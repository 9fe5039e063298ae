#pragma once

#include "pimachine/interval.hpp"
#include "pimachine/rational.hpp"

#include <cstdint>
#include <string>

namespace pimachine {

inline constexpr long kDefaultThetaBits = 64;
inline constexpr long kDefaultMaxBits = 1'000'000;

// Certified enclosure of theta* = arcsin(sqrt(m1/(m1+m2))), the half-angle
// advanced per bounce+collision pair. Relative width < 2^(1-bits).
Interval theta_star(const Rational& m1, const Rational& m2,
                    long bits = kDefaultThetaBits);

// theta_t = 2*t*theta* + pi
Interval angle_at(std::uint64_t t, const Interval& theta);

struct CertifiedCount {
  BigInt count = 0;
  bool certified = false;
  long precision_used = 0;
};

// Total collision count ceil(pi/theta*) - 1, certified by interval
// arithmetic at escalating precision (64 bits, doubling, up to max_bits).
//
// pi/theta* is an integer only when sin^2(theta*) = m1/(m1+m2) lands in
// {1/2, 1/4, 3/4, 1}: cos(2theta*) is then rational, and a rational cosine
// of a rational multiple of pi must be 0, +-1/2 or +-1 (Niven). Those mass
// ratios are recognized exactly up front, where the naive floor would
// over-count by one; every other ratio makes pi/theta* irrational, so the
// escalation loop always separates it from the integers.
CertifiedCount collision_count_closed_form(const Rational& m1, const Rational& m2,
                                           long max_bits = kDefaultMaxBits);

// Collision count for m2/m1 = 10^(2n) as a decimal string: the first n+1
// digits of pi. Throws UncertifiedError if certification fails at max_bits.
std::string pi_digits(unsigned n, long max_bits = kDefaultMaxBits);

}  // namespace pimachine
