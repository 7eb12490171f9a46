// monomial.hpp — normal-form monomials a^i b^j c^k or b^j c^k d^m.
// SPDX-License-Identifier: MIT
#pragma once

#include <compare>
#include <stdexcept>
#include <string>

namespace qsph {

enum class Gen : int { kA = 0, kB = 1, kC = 2, kD = 3 };

char gen_char(Gen g);
Gen gen_from_char(char ch);  // throws std::invalid_argument on unknown letter

// Exponent vector of a normal-form word a^i b^j c^k d^m with i*m = 0.
// The bigrade (m_grade, n_grade) is additive under multiplication.
struct Monomial {
  long a_exp = 0;
  long b_exp = 0;
  long c_exp = 0;
  long d_exp = 0;

  Monomial() = default;
  Monomial(long i, long j, long k, long m) : a_exp(i), b_exp(j), c_exp(k), d_exp(m) {
    if (a_exp < 0 || b_exp < 0 || c_exp < 0 || d_exp < 0 || (a_exp > 0 && d_exp > 0)) {
      throw std::invalid_argument("monomial exponents must be >= 0 with a_exp * d_exp = 0");
    }
  }

  static Monomial one() { return Monomial(); }
  static Monomial gen(Gen g);

  long exp(Gen g) const;
  long degree() const { return a_exp + b_exp + c_exp + d_exp; }
  bool is_one() const { return degree() == 0; }

  long m_grade() const { return (a_exp - d_exp) + (b_exp - c_exp); }
  long n_grade() const { return (a_exp - d_exp) - (b_exp - c_exp); }

  friend auto operator<=>(const Monomial&, const Monomial&) = default;

  // "1", "b c", "a^2 b^3"; str_full pads every exponent: "a^2 b^3 c^0 d^0"
  std::string str() const;
  std::string str_full() const;
};

}  // namespace qsph
