// algebra.cpp — non-template pieces of the algebra engine.
// SPDX-License-Identifier: MIT
#include "qsph/algebra.hpp"

namespace qsph {

QRat haar_bc_power(long k) {
  if (k < 0) throw std::invalid_argument("haar_bc_power needs k >= 0");
  // (-q)^k (1 - q^2) / (1 - q^{2k+2}) with q = s^2
  Poly num = Poly::monomial(k % 2 == 0 ? 1 : -1, 2 * k) *
             (Poly::one() - Poly::monomial(1, 4));
  Poly den = Poly::one() - Poly::monomial(1, 4 * k + 4);
  return QRat(num, den);
}

}  // namespace qsph
