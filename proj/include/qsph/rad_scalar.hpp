// rad_scalar.hpp — rational functions extended by square roots.
// SPDX-License-Identifier: MIT
#pragma once

#include <map>
#include <string>

#include "qsph/qrat.hpp"

namespace qsph {

// Finite sum  sum_f  c_f(q) * sqrt(f)  over canonical radicands f.
// A canonical radicand is an integer-coefficient polynomial in s with
// low() == 0 (or 1 when an odd s survives), squarefree poly part, squarefree
// positive integer content, and positive leading coefficient; the radicand 1
// carries the rational part. Terms with distinct radicands never interact
// under addition, and sqrt(f)*sqrt(f) = f exactly.
class RadScalar {
public:
  RadScalar() = default;
  RadScalar(long c) { *this = RadScalar(QRat(c)); }  // NOLINT(google-explicit-constructor)
  explicit RadScalar(const QRat& c);

  // exact square root with square factors extracted from the radicand
  static RadScalar sqrt_of(const QRat& x);

  bool is_zero() const { return terms_.empty(); }
  bool is_rational() const;
  QRat to_qrat() const;  // throws when a nontrivial radical survives

  bool operator==(const RadScalar& o) const { return terms_ == o.terms_; }
  RadScalar operator-() const;
  friend RadScalar operator+(const RadScalar& x, const RadScalar& y);
  friend RadScalar operator-(const RadScalar& x, const RadScalar& y);
  friend RadScalar operator*(const RadScalar& x, const RadScalar& y);
  // division restricted to single-term divisors (all this artifact needs)
  friend RadScalar operator/(const RadScalar& x, const RadScalar& y);
  RadScalar& operator+=(const RadScalar& y) { return *this = *this + y; }
  RadScalar& operator-=(const RadScalar& y) { return *this = *this - y; }
  RadScalar& operator*=(const RadScalar& y) { return *this = *this * y; }

  double eval_s(double s_val) const;

  // e.g. "(1/2)*sqrt(1 + q^2) + q"; radicands rendered like QRat bodies
  std::string str() const;
  static RadScalar parse(const std::string& text);

  long term_count() const { return static_cast<long>(terms_.size()); }

private:
  std::map<Poly, QRat, PolyLess> terms_;  // radicand -> coefficient
  void insert_term(const Poly& radicand, const QRat& coeff);
};

}  // namespace qsph
