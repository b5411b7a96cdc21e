#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <stdexcept>
#include <string>

namespace optnet {

using BigInt = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

inline double to_double(const Rat& r) { return static_cast<double>(r); }

// Exact: every finite double is a binary fraction.
inline Rat rat_from_double(double x) {
  if (!std::isfinite(x)) throw std::invalid_argument("rat_from_double: non-finite value");
  return Rat(x);
}

// Parses a decimal literal ("-12", "3.25", "1.5e-3") into an exact rational.
Rat parse_decimal(const std::string& text);

std::string rat_to_string(const Rat& r);

}  // namespace optnet
