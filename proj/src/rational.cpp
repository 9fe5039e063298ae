#include "pimachine/rational.hpp"

namespace pimachine {

namespace {

BigInt parse_integer(std::string_view text, std::string_view whole) {
  if (text.empty()) {
    throw std::invalid_argument("empty integer in rational '" + std::string(whole) + "'");
  }
  try {
    return BigInt(std::string(text));
  } catch (const std::exception&) {
    throw std::invalid_argument("not an integer or num/den rational: '" +
                                std::string(whole) + "'");
  }
}

}  // namespace

Rational parse_rational(std::string_view text) {
  const auto slash = text.find('/');
  if (slash == std::string_view::npos) {
    return Rational(parse_integer(text, text));
  }
  BigInt num = parse_integer(text.substr(0, slash), text);
  BigInt den = parse_integer(text.substr(slash + 1), text);
  if (den == 0) {
    throw std::invalid_argument("zero denominator in rational '" + std::string(text) + "'");
  }
  return Rational(num, den);
}

std::string to_string(const Rational& q) { return q.str(); }

double to_double(const Rational& q) { return q.convert_to<double>(); }

unsigned ceil_log2(const Rational& q) {
  if (q <= 0) {
    throw std::invalid_argument("ceil_log2 requires a positive argument");
  }
  BigInt num = numerator(q);
  BigInt den = denominator(q);
  unsigned n = 0;
  BigInt pow = den;  // den * 2^n
  while (pow < num) {
    pow <<= 1;
    ++n;
  }
  return n;
}

}  // namespace pimachine
