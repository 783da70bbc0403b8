#include "sheaflab/rational.hpp"

namespace sheaflab {

namespace {

bool all_digits(const std::string& s) {
  if (s.empty()) return false;
  for (char c : s)
    if (c < '0' || c > '9') return false;
  return true;
}

Int integer_from(const std::string& s) {
  std::string body = s;
  bool negative = false;
  if (!body.empty() && (body[0] == '+' || body[0] == '-')) {
    negative = body[0] == '-';
    body.erase(body.begin());
  }
  if (!all_digits(body)) throw std::invalid_argument("bad integer literal: " + s);
  // Strip leading zeros: the GMP string constructor would read them as an
  // octal prefix.
  const auto first = body.find_first_not_of('0');
  body = first == std::string::npos ? "0" : body.substr(first);
  Int v(body);
  return negative ? Int(-v) : v;
}

Int pow10(long k) {
  Int v(1);
  for (long i = 0; i < k; ++i) v *= 10;
  return v;
}

}  // namespace

Rational rational_from_string(const std::string& text) {
  if (text.empty()) throw std::invalid_argument("empty numeric literal");

  if (auto slash = text.find('/'); slash != std::string::npos) {
    const Int num = integer_from(text.substr(0, slash));
    const Int den = integer_from(text.substr(slash + 1));
    if (den == 0) throw std::invalid_argument("zero denominator: " + text);
    return Rational(num, den);
  }

  // Decimal form with optional exponent, converted exactly.
  std::string body = text;
  long exponent = 0;
  if (auto e = body.find_first_of("eE"); e != std::string::npos) {
    exponent = std::stol(body.substr(e + 1));
    body.erase(e);
  }
  long frac_digits = 0;
  if (auto dot = body.find('.'); dot != std::string::npos) {
    frac_digits = static_cast<long>(body.size() - dot - 1);
    body.erase(dot, 1);
  }
  Rational v(integer_from(body), pow10(frac_digits));
  if (exponent > 0) v *= Rational(pow10(exponent));
  if (exponent < 0) v /= Rational(pow10(-exponent));
  return v;
}

}  // namespace sheaflab
