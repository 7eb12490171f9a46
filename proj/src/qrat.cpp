// qrat.cpp — canonicalized rational-function arithmetic.
// SPDX-License-Identifier: MIT
#include "qsph/qrat.hpp"

#include <stdexcept>

namespace qsph {

QRat::QRat(Poly num, Poly den) {
  if (den.is_zero()) throw std::domain_error("QRat: zero denominator");
  if (num.is_zero()) {
    num_ = Poly();
    den_ = Poly::one();
    return;
  }
  // move the denominator's Laurent shift into the numerator
  const long dlow = den.low();
  den = den.poly_part();
  num = num.shifted(-dlow);
  const Poly g = Poly::gcd(num, den);
  if (!g.is_one()) {
    const long nlow = num.low();
    num = Poly::div_exact(num, g).shifted(nlow);
    den = Poly::div_exact(den, g);
  }
  // den may have picked up a Laurent unit through the gcd division
  const long dlow2 = den.low();
  den = den.poly_part();
  num = num.shifted(-dlow2);
  const mpq_class c0 = den.coeff(0);
  num_ = num.scaled(1 / c0);
  den_ = den.scaled(1 / c0);
}

QRat QRat::qnum(HalfInt n) {
  // [n] = (s^{-2n} - s^{2n}) / (s^{-2} - s^2)
  const long t = n.twice();  // s^{-2n} = s^{-t}
  if (t == 0) return QRat();
  Poly num = Poly::monomial(1, -t) - Poly::monomial(1, t);
  Poly den = Poly::monomial(1, -2) - Poly::monomial(1, 2);
  return QRat(num, den);
}

QRat QRat::operator-() const {
  QRat r(*this);
  r.num_ = -r.num_;
  return r;
}

QRat operator+(const QRat& x, const QRat& y) {
  if (x.is_zero()) return y;
  if (y.is_zero()) return x;
  if (x.den_ == y.den_) return QRat(x.num_ + y.num_, x.den_);
  return QRat(x.num_ * y.den_ + y.num_ * x.den_, x.den_ * y.den_);
}

QRat operator-(const QRat& x, const QRat& y) { return x + (-y); }

QRat operator*(const QRat& x, const QRat& y) {
  return QRat(x.num_ * y.num_, x.den_ * y.den_);
}

QRat operator/(const QRat& x, const QRat& y) {
  if (y.is_zero()) throw std::domain_error("QRat: division by zero");
  return QRat(x.num_ * y.den_, x.den_ * y.num_);
}

QRat QRat::inv() const {
  if (is_zero()) throw std::domain_error("QRat::inv of zero");
  return QRat(den_, num_);
}

double QRat::eval_s(double s_val) const {
  return static_cast<double>(eval_s_ld(static_cast<long double>(s_val)));
}

long double QRat::eval_s_ld(long double s_val) const {
  return num_.eval_ld(s_val) / den_.eval_ld(s_val);
}

mpq_class QRat::eval_s_mpq(const mpq_class& s_val) const {
  return num_.eval_mpq(s_val) / den_.eval_mpq(s_val);
}

mpq_class QRat::eval_q_mpq(const mpq_class& q_val) const {
  if (!all_exponents_even()) {
    throw std::domain_error("QRat::eval_q_mpq: odd s-exponent present in " + str());
  }
  // substitute s^2 = q exactly: fold pairs of exponents
  auto eval_even = [&q_val](const Poly& p) {
    mpq_class acc = 0;
    if (p.is_zero()) return acc;
    for (long e = p.high(); e >= p.low(); e -= 2) {
      acc *= q_val;
      acc += p.coeff(e);
    }
    mpq_class shift = 1;
    const long half = p.low() / 2;
    const mpq_class base = half < 0 ? mpq_class(1 / q_val) : q_val;
    for (long i = 0; i < (half < 0 ? -half : half); ++i) shift *= base;
    return mpq_class(acc * shift);
  };
  return eval_even(num_) / eval_even(den_);
}

std::string QRat::str() const {
  const bool even = all_exponents_even();
  const std::string var = even ? "q" : "s";
  const int stride = even ? 2 : 1;
  if (den_.is_one()) return num_.str(var, stride);
  return "(" + num_.str(var, stride) + ")/(" + den_.str(var, stride) + ")";
}

int QRat::cmp(const QRat& x, const QRat& y) {
  const int c = Poly::cmp(x.num_, y.num_);
  if (c != 0) return c;
  return Poly::cmp(x.den_, y.den_);
}

}  // namespace qsph
