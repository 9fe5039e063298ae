#pragma once

#include "pimachine/rational.hpp"

#include <mpfr.h>

#include <string>

namespace pimachine {

// Outward-rounded MPFR interval [lo, hi]. Every operation rounds lo down
// and hi up, so the true real result is always enclosed. Monotone
// transcendental maps (sqrt, asin) evaluate at the endpoints; cos splits
// at the enclosed multiples of pi.
class Interval {
 public:
  explicit Interval(mpfr_prec_t prec);
  Interval(const Interval& other);
  Interval(Interval&& other) noexcept;
  Interval& operator=(const Interval& other);
  Interval& operator=(Interval&& other) noexcept;
  ~Interval();

  static Interval from_rational(const Rational& q, mpfr_prec_t prec);
  static Interval from_endpoints(const Rational& lo, const Rational& hi,
                                 mpfr_prec_t prec);
  static Interval from_unsigned(unsigned long v, mpfr_prec_t prec);
  static Interval pi(mpfr_prec_t prec);

  mpfr_prec_t precision() const { return prec_; }

  Interval operator+(const Interval& rhs) const;
  Interval operator-(const Interval& rhs) const;
  Interval operator/(const Interval& rhs) const;  // rhs must not straddle 0
  Interval mul_unsigned(unsigned long k) const;

  Interval sqrt() const;  // lo must be >= 0
  Interval asin() const;  // interval must lie in [-1, 1]
  Interval cos() const;

  bool contains(const Interval& inner) const;
  bool overlaps(const Interval& other) const;
  bool is_positive() const;

  // width(hi - lo) <= 2^(1-bits) * |lo|; interval must be positive
  bool relative_width_below(long bits) const;

  // true iff floor is provably constant over [lo, hi]
  bool floor_is_certain() const;
  BigInt floor_lower() const;

  double width() const;
  double lower_double() const;   // rounded down
  double upper_double() const;   // rounded up
  double midpoint_double() const;

  std::string str(int digits = 20) const;

 private:
  mpfr_prec_t prec_;
  mpfr_t lo_;
  mpfr_t hi_;
};

}  // namespace pimachine
