// half_int.cpp — parsing/printing for exact half-integers.
// SPDX-License-Identifier: MIT
#include "qsph/half_int.hpp"

#include <stdexcept>

namespace qsph {

long HalfInt::as_integer() const {
  if (twice_ % 2 != 0) {
    throw std::domain_error("HalfInt::as_integer: " + str() + " is not an integer");
  }
  return twice_ / 2;
}

std::string HalfInt::str() const {
  if (twice_ % 2 == 0) return std::to_string(twice_ / 2);
  return std::to_string(twice_) + "/2";
}

HalfInt HalfInt::parse(const std::string& text) {
  const auto slash = text.find('/');
  try {
    if (slash == std::string::npos) {
      return HalfInt(std::stol(text));
    }
    const long num = std::stol(text.substr(0, slash));
    const long den = std::stol(text.substr(slash + 1));
    if (den == 2) return from_twice(num);
    if (den == 1) return HalfInt(num);
  } catch (const std::logic_error&) {
    // fall through to the domain_error below
  }
  throw std::domain_error("HalfInt::parse: cannot read '" + text +
                          "' (expected n, n/1 or n/2)");
}

}  // namespace qsph
