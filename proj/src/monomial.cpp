// monomial.cpp — normal-form monomial utilities.
// SPDX-License-Identifier: MIT
#include "qsph/monomial.hpp"

namespace qsph {

char gen_char(Gen g) {
  switch (g) {
    case Gen::kA: return 'a';
    case Gen::kB: return 'b';
    case Gen::kC: return 'c';
    case Gen::kD: return 'd';
  }
  throw std::invalid_argument("unknown generator");
}

Gen gen_from_char(char ch) {
  switch (ch) {
    case 'a': return Gen::kA;
    case 'b': return Gen::kB;
    case 'c': return Gen::kC;
    case 'd': return Gen::kD;
    default: throw std::invalid_argument(std::string("not a generator letter: ") + ch);
  }
}

Monomial Monomial::gen(Gen g) {
  switch (g) {
    case Gen::kA: return Monomial(1, 0, 0, 0);
    case Gen::kB: return Monomial(0, 1, 0, 0);
    case Gen::kC: return Monomial(0, 0, 1, 0);
    case Gen::kD: return Monomial(0, 0, 0, 1);
  }
  throw std::invalid_argument("unknown generator");
}

long Monomial::exp(Gen g) const {
  switch (g) {
    case Gen::kA: return a_exp;
    case Gen::kB: return b_exp;
    case Gen::kC: return c_exp;
    case Gen::kD: return d_exp;
  }
  throw std::invalid_argument("unknown generator");
}

std::string Monomial::str() const {
  if (is_one()) return "1";
  std::string out;
  const long exps[4] = {a_exp, b_exp, c_exp, d_exp};
  const char names[4] = {'a', 'b', 'c', 'd'};
  for (int t = 0; t < 4; ++t) {
    if (exps[t] == 0) continue;
    if (!out.empty()) out += ' ';
    out += names[t];
    if (exps[t] > 1) out += '^' + std::to_string(exps[t]);
  }
  return out;
}

std::string Monomial::str_full() const {
  return "a^" + std::to_string(a_exp) + " b^" + std::to_string(b_exp) + " c^" +
         std::to_string(c_exp) + " d^" + std::to_string(d_exp);
}

}  // namespace qsph
