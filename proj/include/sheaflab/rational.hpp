#pragma once

#include <boost/multiprecision/gmp.hpp>
#include <cmath>
#include <cstdio>
#include <stdexcept>
#include <string>

namespace sheaflab {

using Int = boost::multiprecision::mpz_int;
using Rational = boost::multiprecision::mpq_rational;

// Parses "p", "-p/q", or a plain decimal literal ("1.25", "3e-2") into an
// exact rational.
Rational rational_from_string(const std::string& text);

// Scalar-mode hooks shared by the serialization and validation paths.
// double prints as a 17-significant-digit decimal; Rational as "p" or "p/q".
template <typename S>
struct scalar_traits;

template <>
struct scalar_traits<double> {
  static constexpr bool exact = false;
  static constexpr const char* mode_name = "float";

  static double abs(double x) { return std::fabs(x); }

  static std::string repr(double x) {
    char buf[48];
    std::snprintf(buf, sizeof(buf), "%.17g", x);
    return buf;
  }

  static double parse(const std::string& s) {
    std::size_t pos = 0;
    double v = std::stod(s, &pos);
    if (pos != s.size()) throw std::invalid_argument("bad numeric literal: " + s);
    return v;
  }

  static double to_double(double x) { return x; }
};

template <>
struct scalar_traits<Int> {
  static constexpr bool exact = true;
  static constexpr const char* mode_name = "integer";

  static Int abs(const Int& x) { return x < 0 ? Int(-x) : x; }
  static std::string repr(const Int& x) { return x.str(); }
  static double to_double(const Int& x) { return x.convert_to<double>(); }
};

template <>
struct scalar_traits<Rational> {
  static constexpr bool exact = true;
  static constexpr const char* mode_name = "rational";

  static Rational abs(const Rational& x) { return x < 0 ? Rational(-x) : x; }

  static std::string repr(const Rational& x) {
    const Int num = boost::multiprecision::numerator(x);
    const Int den = boost::multiprecision::denominator(x);
    if (den == 1) return num.str();
    return num.str() + "/" + den.str();
  }

  static Rational parse(const std::string& s) { return rational_from_string(s); }

  static double to_double(const Rational& x) { return x.convert_to<double>(); }
};

// 10^-k as an exact scalar; used for the squared-form geometric tolerances
// that must be evaluable in both modes.
template <typename S>
S power_of_ten_reciprocal(int k) {
  S denom(1);
  for (int i = 0; i < k; ++i) denom *= S(10);
  return S(1) / denom;
}

}  // namespace sheaflab
