#include "optnet/rational.hpp"

#include <cctype>
#include <sstream>

namespace optnet {

Rat parse_decimal(const std::string& text) {
  std::size_t pos = 0;
  auto fail = [&]() -> Rat {
    throw std::invalid_argument("parse_decimal: malformed number '" + text + "'");
  };
  if (text.empty()) return fail();
  bool negative = false;
  if (text[pos] == '+' || text[pos] == '-') {
    negative = text[pos] == '-';
    ++pos;
  }
  BigInt mantissa = 0;
  long frac_digits = 0;
  bool any_digit = false;
  for (; pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos])); ++pos) {
    mantissa = mantissa * 10 + (text[pos] - '0');
    any_digit = true;
  }
  if (pos < text.size() && text[pos] == '.') {
    ++pos;
    for (; pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos])); ++pos) {
      mantissa = mantissa * 10 + (text[pos] - '0');
      ++frac_digits;
      any_digit = true;
    }
  }
  if (!any_digit) return fail();
  long exponent = 0;
  if (pos < text.size() && (text[pos] == 'e' || text[pos] == 'E')) {
    ++pos;
    bool exp_negative = false;
    if (pos < text.size() && (text[pos] == '+' || text[pos] == '-')) {
      exp_negative = text[pos] == '-';
      ++pos;
    }
    if (pos == text.size()) return fail();
    for (; pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos])); ++pos)
      exponent = exponent * 10 + (text[pos] - '0');
    if (exp_negative) exponent = -exponent;
  }
  if (pos != text.size()) return fail();
  long shift = exponent - frac_digits;
  BigInt num = negative ? -mantissa : mantissa;
  BigInt den = 1;
  if (shift >= 0) {
    for (long i = 0; i < shift; ++i) num *= 10;
  } else {
    for (long i = 0; i < -shift; ++i) den *= 10;
  }
  return Rat(num, den);
}

std::string rat_to_string(const Rat& r) {
  std::ostringstream out;
  out << r;
  return out.str();
}

}  // namespace optnet
