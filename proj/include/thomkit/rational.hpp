#pragma once

#include <string>
#include <string_view>

#include <boost/multiprecision/cpp_int.hpp>

#include "thomkit/error.hpp"

namespace thomkit {

// Exact arbitrary-precision arithmetic. cpp_rational keeps values in lowest
// terms with a positive denominator and a unique zero, which is exactly the
// invariant set we need for coefficients.
using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

/// Canonical text form: "num" or "num/den" ("-3/2", "7", "0").
inline std::string to_string(const Rational& r) { return r.str(); }

/// Parses "int" or "int/nat". Denominator must be a positive integer.
inline Rational parse_rational(std::string_view text) {
  const auto slash = text.find('/');
  try {
    if (slash == std::string_view::npos) {
      return Rational(BigInt(std::string(text)));
    }
    BigInt num{std::string(text.substr(0, slash))};
    BigInt den{std::string(text.substr(slash + 1))};
    if (den <= 0) throw parse_error("denominator must be positive: " + std::string(text));
    return Rational(num, den);
  } catch (const parse_error&) {
    throw;
  } catch (const std::exception&) {
    throw parse_error("bad rational: " + std::string(text));
  }
}

}  // namespace thomkit
