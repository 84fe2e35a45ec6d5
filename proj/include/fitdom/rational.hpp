#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <string>

#include "fitdom/error.hpp"

namespace fitdom {

// Exact rational arithmetic for eigenvalue ratios and quasi-order values.
// cpp_rational keeps numerator and denominator as arbitrary-precision ints,
// so long transition chains cannot overflow.
using Rat = boost::multiprecision::cpp_rational;
using BigInt = boost::multiprecision::cpp_int;

inline Rat make_rat(std::int64_t num, std::int64_t den) {
  if (den == 0) raise(ErrorCode::SchemaViolation, "rational with zero denominator");
  return Rat(BigInt(num), BigInt(den));
}

// Renders "n" for integers and "n/d" otherwise, with the sign on the numerator.
inline std::string format_rat(const Rat& value) {
  const BigInt num = boost::multiprecision::numerator(value);
  const BigInt den = boost::multiprecision::denominator(value);
  if (den == 1) return num.str();
  return num.str() + "/" + den.str();
}

// Accepts "n" or "n/d" with optional leading minus signs.
inline Rat parse_rat(const std::string& text) {
  const auto slash = text.find('/');
  try {
    if (slash == std::string::npos) return Rat(BigInt(text));
    const BigInt num(text.substr(0, slash));
    const BigInt den(text.substr(slash + 1));
    if (den == 0) raise(ErrorCode::SchemaViolation, "rational with zero denominator: " + text);
    return Rat(num, den);
  } catch (const Error&) {
    throw;
  } catch (const std::exception&) {
    raise(ErrorCode::SchemaViolation, "malformed rational: " + text);
  }
}

inline int sign_of(const Rat& value) {
  if (value > 0) return 1;
  if (value < 0) return -1;
  return 0;
}

inline double to_double(const Rat& value) {
  return value.convert_to<double>();
}

}  // namespace fitdom
