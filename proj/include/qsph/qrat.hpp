// qrat.hpp — exact rational functions in q over a square-root indeterminate s.
// SPDX-License-Identifier: MIT
#pragma once

#include <string>

#include "qsph/half_int.hpp"
#include "qsph/poly.hpp"

namespace qsph {

// Field element num/den of Laurent polynomials in s, where q = s^2.
// Canonical form: gcd(num poly part, den) = 1, den has low() == 0 and
// constant coefficient exactly 1, the Laurent shift lives in num.
// Zero is num = 0, den = 1; x - x always normalizes to zero.
class QRat {
public:
  QRat() : den_(Poly::one()) {}
  QRat(long c) : num_(c), den_(Poly::one()) {}  // NOLINT(google-explicit-constructor)
  explicit QRat(const mpq_class& c) : num_(c), den_(Poly::one()) {}
  QRat(Poly num, Poly den);  // normalizing constructor

  static QRat s_pow(long k) { return QRat(Poly::monomial(1, k), Poly::one()); }
  static QRat q_pow(HalfInt k) { return s_pow(k.twice()); }
  // quantum integer [n] = (q^{-n} - q^{n})/(q^{-1} - q), n in (1/2)Z
  static QRat qnum(HalfInt n);

  const Poly& num() const { return num_; }
  const Poly& den() const { return den_; }

  bool is_zero() const { return num_.is_zero(); }
  bool is_one() const { return num_.is_one() && den_.is_one(); }

  bool operator==(const QRat& o) const { return num_ == o.num_ && den_ == o.den_; }
  QRat operator-() const;
  friend QRat operator+(const QRat& x, const QRat& y);
  friend QRat operator-(const QRat& x, const QRat& y);
  friend QRat operator*(const QRat& x, const QRat& y);
  friend QRat operator/(const QRat& x, const QRat& y);
  QRat& operator+=(const QRat& y) { return *this = *this + y; }
  QRat& operator-=(const QRat& y) { return *this = *this - y; }
  QRat& operator*=(const QRat& y) { return *this = *this * y; }
  QRat& operator/=(const QRat& y) { return *this = *this / y; }
  QRat inv() const;

  double eval_s(double s_val) const;
  long double eval_s_ld(long double s_val) const;
  mpq_class eval_s_mpq(const mpq_class& s_val) const;
  // exact evaluation at rational q; requires every exponent to be even
  mpq_class eval_q_mpq(const mpq_class& q_val) const;
  bool all_exponents_even() const {
    return num_.all_exponents_even() && den_.all_exponents_even();
  }

  // canonical text form, e.g. "(-q + q^3)/(1 - q^2)"; uses q when every
  // exponent is even and s otherwise
  std::string str() const;
  static QRat parse(const std::string& text);

  static int cmp(const QRat& x, const QRat& y);

private:
  Poly num_;
  Poly den_;
};

}  // namespace qsph
