// poly.hpp — dense Laurent polynomials over arbitrary-precision rationals.
// SPDX-License-Identifier: MIT
#pragma once

#include <gmpxx.h>

#include <string>
#include <vector>

namespace qsph {

// Laurent polynomial in one indeterminate with mpq coefficients.
// Zero is the empty coefficient vector; otherwise coeffs_.front() and
// coeffs_.back() are nonzero and coeffs_[i] multiplies s^(low_ + i).
class Poly {
public:
  Poly() = default;
  explicit Poly(const mpq_class& c);
  explicit Poly(long c);
  static Poly monomial(const mpq_class& c, long exp);
  static Poly one() { return Poly(1L); }

  bool is_zero() const { return coeffs_.empty(); }
  bool is_one() const;
  // lowest/highest occurring exponent; must not be called on zero
  long low() const;
  long high() const;
  mpq_class coeff(long exp) const;
  long term_count() const { return static_cast<long>(coeffs_.size()); }

  bool operator==(const Poly& o) const { return low_ == o.low_ && coeffs_ == o.coeffs_; }
  Poly operator-() const;
  friend Poly operator+(const Poly& x, const Poly& y);
  friend Poly operator-(const Poly& x, const Poly& y);
  friend Poly operator*(const Poly& x, const Poly& y);
  Poly& operator+=(const Poly& y) { return *this = *this + y; }
  Poly& operator-=(const Poly& y) { return *this = *this - y; }
  Poly& operator*=(const Poly& y) { return *this = *this * y; }

  Poly shifted(long k) const;  // multiply by s^k
  Poly poly_part() const;      // shifted so low() == 0 (zero stays zero)
  Poly scaled(const mpq_class& c) const;

  // exact division of poly parts; throws std::domain_error on nonzero remainder
  static Poly div_exact(const Poly& a, const Poly& b);
  // monic gcd of the poly parts; gcd(0, b) = monic(b)
  static Poly gcd(const Poly& a, const Poly& b);
  Poly derivative() const;  // d/ds, Laurent exponents included

  // content (positive rational) and the corresponding integer-primitive part
  mpq_class content() const;
  Poly primitive() const;

  // evaluation; negative exponents require a nonzero point
  mpq_class eval_mpq(const mpq_class& s_val) const;
  double eval_double(double s_val) const;
  long double eval_ld(long double s_val) const;

  bool all_exponents_even() const;
  // ascending-order rendering; stride divides every exponent (1 for s, 2 for q)
  std::string str(const std::string& var, int stride) const;

  // total order usable as a map comparator
  static int cmp(const Poly& x, const Poly& y);

private:
  long low_ = 0;
  std::vector<mpq_class> coeffs_;
  void normalize();
};

struct PolyLess {
  bool operator()(const Poly& x, const Poly& y) const { return Poly::cmp(x, y) < 0; }
};

}  // namespace qsph
