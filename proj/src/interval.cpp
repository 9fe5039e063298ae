#include "pimachine/interval.hpp"

#include <algorithm>
#include <stdexcept>
#include <vector>

namespace pimachine {

Interval::Interval(mpfr_prec_t prec) : prec_(prec) {
  mpfr_init2(lo_, prec_);
  mpfr_init2(hi_, prec_);
}

Interval::Interval(const Interval& other) : prec_(other.prec_) {
  mpfr_init2(lo_, prec_);
  mpfr_init2(hi_, prec_);
  mpfr_set(lo_, other.lo_, MPFR_RNDN);  // same precision, exact
  mpfr_set(hi_, other.hi_, MPFR_RNDN);
}

Interval::Interval(Interval&& other) noexcept : prec_(other.prec_) {
  mpfr_init2(lo_, 2);
  mpfr_init2(hi_, 2);
  mpfr_swap(lo_, other.lo_);
  mpfr_swap(hi_, other.hi_);
}

Interval& Interval::operator=(const Interval& other) {
  if (this != &other) {
    prec_ = other.prec_;
    mpfr_set_prec(lo_, prec_);
    mpfr_set_prec(hi_, prec_);
    mpfr_set(lo_, other.lo_, MPFR_RNDN);
    mpfr_set(hi_, other.hi_, MPFR_RNDN);
  }
  return *this;
}

Interval& Interval::operator=(Interval&& other) noexcept {
  if (this != &other) {
    prec_ = other.prec_;
    mpfr_swap(lo_, other.lo_);
    mpfr_swap(hi_, other.hi_);
  }
  return *this;
}

Interval::~Interval() {
  mpfr_clear(lo_);
  mpfr_clear(hi_);
}

Interval Interval::from_rational(const Rational& q, mpfr_prec_t prec) {
  Interval r(prec);
  mpfr_set_q(r.lo_, q.backend().data(), MPFR_RNDD);
  mpfr_set_q(r.hi_, q.backend().data(), MPFR_RNDU);
  return r;
}

Interval Interval::from_endpoints(const Rational& lo, const Rational& hi,
                                  mpfr_prec_t prec) {
  if (lo > hi) {
    throw std::invalid_argument("interval endpoints out of order");
  }
  Interval r(prec);
  mpfr_set_q(r.lo_, lo.backend().data(), MPFR_RNDD);
  mpfr_set_q(r.hi_, hi.backend().data(), MPFR_RNDU);
  return r;
}

Interval Interval::from_unsigned(unsigned long v, mpfr_prec_t prec) {
  Interval r(prec);
  mpfr_set_ui(r.lo_, v, MPFR_RNDD);
  mpfr_set_ui(r.hi_, v, MPFR_RNDU);
  return r;
}

Interval Interval::pi(mpfr_prec_t prec) {
  Interval r(prec);
  mpfr_const_pi(r.lo_, MPFR_RNDD);
  mpfr_const_pi(r.hi_, MPFR_RNDU);
  return r;
}

Interval Interval::operator+(const Interval& rhs) const {
  Interval r(std::max(prec_, rhs.prec_));
  mpfr_add(r.lo_, lo_, rhs.lo_, MPFR_RNDD);
  mpfr_add(r.hi_, hi_, rhs.hi_, MPFR_RNDU);
  return r;
}

Interval Interval::operator-(const Interval& rhs) const {
  Interval r(std::max(prec_, rhs.prec_));
  mpfr_sub(r.lo_, lo_, rhs.hi_, MPFR_RNDD);
  mpfr_sub(r.hi_, hi_, rhs.lo_, MPFR_RNDU);
  return r;
}

Interval Interval::operator/(const Interval& rhs) const {
  if (mpfr_sgn(rhs.lo_) * mpfr_sgn(rhs.hi_) <= 0) {
    throw std::domain_error("interval division by an interval containing zero");
  }
  Interval r(std::max(prec_, rhs.prec_));
  // hull of all endpoint quotients, rounded outward
  mpfr_t q;
  mpfr_init2(q, r.prec_);
  bool first = true;
  for (mpfr_srcptr num : {static_cast<mpfr_srcptr>(lo_), static_cast<mpfr_srcptr>(hi_)}) {
    for (mpfr_srcptr den :
         {static_cast<mpfr_srcptr>(rhs.lo_), static_cast<mpfr_srcptr>(rhs.hi_)}) {
      mpfr_div(q, num, den, MPFR_RNDD);
      if (first || mpfr_less_p(q, r.lo_)) mpfr_set(r.lo_, q, MPFR_RNDD);
      mpfr_div(q, num, den, MPFR_RNDU);
      if (first || mpfr_greater_p(q, r.hi_)) mpfr_set(r.hi_, q, MPFR_RNDU);
      first = false;
    }
  }
  mpfr_clear(q);
  return r;
}

Interval Interval::mul_unsigned(unsigned long k) const {
  Interval r(prec_);
  mpfr_mul_ui(r.lo_, lo_, k, MPFR_RNDD);
  mpfr_mul_ui(r.hi_, hi_, k, MPFR_RNDU);
  return r;
}

Interval Interval::sqrt() const {
  if (mpfr_sgn(lo_) < 0) {
    throw std::domain_error("interval sqrt of a partially negative interval");
  }
  Interval r(prec_);
  mpfr_sqrt(r.lo_, lo_, MPFR_RNDD);
  mpfr_sqrt(r.hi_, hi_, MPFR_RNDU);
  return r;
}

Interval Interval::asin() const {
  if (mpfr_cmp_si(lo_, -1) < 0 || mpfr_cmp_si(hi_, 1) > 0) {
    throw std::domain_error("interval asin outside [-1, 1]");
  }
  Interval r(prec_);
  mpfr_asin(r.lo_, lo_, MPFR_RNDD);
  mpfr_asin(r.hi_, hi_, MPFR_RNDU);
  return r;
}

Interval Interval::cos() const {
  Interval r(prec_);
  // endpoint hull first
  mpfr_t t;
  mpfr_init2(t, prec_);
  mpfr_cos(r.lo_, lo_, MPFR_RNDD);
  mpfr_cos(t, hi_, MPFR_RNDD);
  if (mpfr_less_p(t, r.lo_)) mpfr_set(r.lo_, t, MPFR_RNDD);
  mpfr_cos(r.hi_, lo_, MPFR_RNDU);
  mpfr_cos(t, hi_, MPFR_RNDU);
  if (mpfr_greater_p(t, r.hi_)) mpfr_set(r.hi_, t, MPFR_RNDU);
  mpfr_clear(t);

  // widen to +-1 for every multiple of pi inside the argument range
  const Interval quot = *this / Interval::pi(prec_);
  mpfr_t klo, khi;
  mpfr_init2(klo, prec_);
  mpfr_init2(khi, prec_);
  mpfr_ceil(klo, quot.lo_);
  mpfr_floor(khi, quot.hi_);
  if (mpfr_lessequal_p(klo, khi)) {
    BigInt k, kmax;
    mpfr_get_z(k.backend().data(), klo, MPFR_RNDN);
    mpfr_get_z(kmax.backend().data(), khi, MPFR_RNDN);
    if (kmax - k > 4) {
      mpfr_set_si(r.lo_, -1, MPFR_RNDD);
      mpfr_set_si(r.hi_, 1, MPFR_RNDU);
    } else {
      for (; k <= kmax; ++k) {
        if (k % 2 == 0) {
          mpfr_set_si(r.hi_, 1, MPFR_RNDU);
        } else {
          mpfr_set_si(r.lo_, -1, MPFR_RNDD);
        }
      }
    }
  }
  mpfr_clear(klo);
  mpfr_clear(khi);
  return r;
}

bool Interval::contains(const Interval& inner) const {
  return mpfr_lessequal_p(lo_, inner.lo_) && mpfr_lessequal_p(inner.hi_, hi_);
}

bool Interval::overlaps(const Interval& other) const {
  return !(mpfr_less_p(hi_, other.lo_) || mpfr_less_p(other.hi_, lo_));
}

bool Interval::is_positive() const { return mpfr_sgn(lo_) > 0; }

bool Interval::relative_width_below(long bits) const {
  if (!is_positive()) {
    throw std::domain_error("relative width needs a positive interval");
  }
  mpfr_t w, bound;
  mpfr_init2(w, prec_);
  mpfr_init2(bound, prec_);
  mpfr_sub(w, hi_, lo_, MPFR_RNDU);
  mpfr_div(w, w, lo_, MPFR_RNDU);
  mpfr_set_ui_2exp(bound, 1, static_cast<mpfr_exp_t>(1 - bits), MPFR_RNDN);
  const bool ok = mpfr_lessequal_p(w, bound);
  mpfr_clear(w);
  mpfr_clear(bound);
  return ok;
}

bool Interval::floor_is_certain() const {
  if (mpfr_nan_p(lo_) || mpfr_nan_p(hi_)) return false;
  // floor constant over [lo, hi]: same floor at both ends and hi not an
  // exact integer (an exact-integer hi leaves the floor ambiguous)
  mpfr_t flo, fhi;
  mpfr_init2(flo, prec_);
  mpfr_init2(fhi, prec_);
  mpfr_floor(flo, lo_);
  mpfr_floor(fhi, hi_);
  const bool ok = mpfr_equal_p(flo, fhi) && !mpfr_integer_p(hi_);
  mpfr_clear(flo);
  mpfr_clear(fhi);
  return ok;
}

BigInt Interval::floor_lower() const {
  BigInt r;
  mpfr_get_z(r.backend().data(), lo_, MPFR_RNDD);
  return r;
}

double Interval::width() const {
  mpfr_t w;
  mpfr_init2(w, prec_);
  mpfr_sub(w, hi_, lo_, MPFR_RNDU);
  const double d = mpfr_get_d(w, MPFR_RNDU);
  mpfr_clear(w);
  return d;
}

double Interval::lower_double() const { return mpfr_get_d(lo_, MPFR_RNDD); }

double Interval::upper_double() const { return mpfr_get_d(hi_, MPFR_RNDU); }

double Interval::midpoint_double() const {
  mpfr_t m;
  mpfr_init2(m, prec_);
  mpfr_add(m, lo_, hi_, MPFR_RNDN);
  mpfr_div_ui(m, m, 2, MPFR_RNDN);
  const double d = mpfr_get_d(m, MPFR_RNDN);
  mpfr_clear(m);
  return d;
}

std::string Interval::str(int digits) const {
  std::vector<char> buf(static_cast<size_t>(digits) + 64);
  std::string out = "[";
  mpfr_snprintf(buf.data(), buf.size(), "%.*Rg", digits, lo_);
  out += buf.data();
  out += ", ";
  mpfr_snprintf(buf.data(), buf.size(), "%.*Rg", digits, hi_);
  out += buf.data();
  out += "]";
  return out;
}

}  // namespace pimachine
