#include "pimachine/angle.hpp"

#include "pimachine/errors.hpp"

#include <algorithm>
#include <optional>

namespace pimachine {

namespace {

// Exact boundary ratios: sin^2(theta*) = m1/(m1+m2) in {1/2, 1/4, 3/4, 1}
// gives theta* = pi/4, pi/6, pi/3, pi/2, i.e. pi/theta* = 4, 6, 3, 2.
// Returns pi/theta* when the ratio matches.
std::optional<unsigned> exact_pi_over_theta(const Rational& m1, const Rational& m2) {
  const Rational s2 = m1 / (m1 + m2);
  if (s2 == Rational(1, 2)) return 4;
  if (s2 == Rational(1, 4)) return 6;
  if (s2 == Rational(3, 4)) return 3;
  if (s2 == 1) return 2;
  return std::nullopt;
}

Interval theta_star_at_precision(const Rational& m1, const Rational& m2,
                                 mpfr_prec_t prec) {
  const Rational ratio = m1 / (m1 + m2);
  return Interval::from_rational(ratio, prec).sqrt().asin();
}

}  // namespace

Interval theta_star(const Rational& m1, const Rational& m2, long bits) {
  if (m1 <= 0 || m2 <= 0) {
    throw std::invalid_argument("theta_star requires positive masses");
  }
  if (bits < 64) {
    throw std::invalid_argument("theta_star requires bits >= 64");
  }
  // a few guard bits usually suffice; asin loses accuracy near 1, so escalate
  // until the requested relative width actually holds
  for (mpfr_prec_t prec = static_cast<mpfr_prec_t>(bits) + 16;; prec *= 2) {
    Interval theta = theta_star_at_precision(m1, m2, prec);
    if (theta.relative_width_below(bits)) {
      return theta;
    }
  }
}

Interval angle_at(std::uint64_t t, const Interval& theta) {
  return theta.mul_unsigned(t).mul_unsigned(2) + Interval::pi(theta.precision());
}

CertifiedCount collision_count_closed_form(const Rational& m1, const Rational& m2,
                                           long max_bits) {
  if (m1 <= 0 || m2 <= 0) {
    throw std::invalid_argument("collision count requires positive masses");
  }
  CertifiedCount result;
  if (const auto exact = exact_pi_over_theta(m1, m2)) {
    // pi/theta* integer: the closing collision lands exactly on the axis,
    // so the count is pi/theta* - 1, one below the naive floor
    result.count = BigInt(*exact) - 1;
    result.certified = true;
    result.precision_used = 0;
    return result;
  }
  long bits = std::min<long>(64, max_bits);
  while (true) {
    const auto prec = static_cast<mpfr_prec_t>(bits);
    const Interval theta = theta_star_at_precision(m1, m2, prec);
    if (theta.is_positive()) {
      const Interval quotient = Interval::pi(prec) / theta;
      if (quotient.width() <= 0.25 && quotient.floor_is_certain()) {
        result.count = quotient.floor_lower();
        result.certified = true;
        result.precision_used = bits;
        return result;
      }
      result.count = quotient.floor_lower();
      result.precision_used = bits;
    }
    if (bits >= max_bits) break;
    bits = std::min(bits * 2, max_bits);
  }
  result.certified = false;
  return result;
}

std::string pi_digits(unsigned n, long max_bits) {
  BigInt ratio = 1;
  for (unsigned i = 0; i < 2 * n; ++i) ratio *= 10;
  const CertifiedCount cc = collision_count_closed_form(1, Rational(ratio), max_bits);
  if (!cc.certified) {
    throw UncertifiedError("collision count for 10^" + std::to_string(2 * n) +
                           " not certified within " + std::to_string(max_bits) + " bits");
  }
  return cc.count.str();
}

}  // namespace pimachine
