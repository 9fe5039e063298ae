#pragma once

#include <boost/multiprecision/gmp.hpp>

#include <stdexcept>
#include <string>
#include <string_view>

namespace pimachine {

// Exact arithmetic backbone: GMP rationals/integers. All machine state and
// mass parameters stay rational end to end; doubles appear only in
// diagnostics and the Grover state vector.
using Rational = boost::multiprecision::mpq_rational;
using BigInt = boost::multiprecision::mpz_int;

// Parses "7", "-3/2", "10/4" (canonicalized to 5/2). Floats are rejected:
// a decimal-point mass would silently break the exactness contract.
Rational parse_rational(std::string_view text);

std::string to_string(const Rational& q);

double to_double(const Rational& q);

// smallest n >= 0 with 2^n >= q; q must be positive
unsigned ceil_log2(const Rational& q);

}  // namespace pimachine
