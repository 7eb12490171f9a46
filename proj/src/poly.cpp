// poly.cpp — Laurent polynomial arithmetic over GMP rationals.
// SPDX-License-Identifier: MIT
#include "qsph/poly.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>
#include <stdexcept>

namespace qsph {

Poly::Poly(const mpq_class& c) {
  if (c != 0) coeffs_.push_back(c);
}

Poly::Poly(long c) {
  if (c != 0) coeffs_.emplace_back(c);
}

Poly Poly::monomial(const mpq_class& c, long exp) {
  Poly p;
  if (c != 0) {
    p.low_ = exp;
    p.coeffs_.push_back(c);
  }
  return p;
}

bool Poly::is_one() const {
  return coeffs_.size() == 1 && low_ == 0 && coeffs_[0] == 1;
}

long Poly::low() const {
  if (is_zero()) throw std::domain_error("Poly::low on zero");
  return low_;
}

long Poly::high() const {
  if (is_zero()) throw std::domain_error("Poly::high on zero");
  return low_ + static_cast<long>(coeffs_.size()) - 1;
}

mpq_class Poly::coeff(long exp) const {
  const long idx = exp - low_;
  if (is_zero() || idx < 0 || idx >= static_cast<long>(coeffs_.size())) return {};
  return coeffs_[idx];
}

void Poly::normalize() {
  size_t lead = 0;
  while (lead < coeffs_.size() && coeffs_[lead] == 0) ++lead;
  size_t trail = coeffs_.size();
  while (trail > lead && coeffs_[trail - 1] == 0) --trail;
  if (lead == trail) {
    coeffs_.clear();
    low_ = 0;
    return;
  }
  if (lead > 0) {
    coeffs_.erase(coeffs_.begin(), coeffs_.begin() + static_cast<long>(lead));
    low_ += static_cast<long>(lead);
  }
  coeffs_.resize(trail - lead);
}

Poly Poly::operator-() const {
  Poly r(*this);
  for (auto& c : r.coeffs_) c = -c;
  return r;
}

Poly operator+(const Poly& x, const Poly& y) {
  if (x.is_zero()) return y;
  if (y.is_zero()) return x;
  const long lo = std::min(x.low_, y.low_);
  const long hi = std::max(x.low_ + static_cast<long>(x.coeffs_.size()),
                           y.low_ + static_cast<long>(y.coeffs_.size()));
  Poly r;
  r.low_ = lo;
  r.coeffs_.assign(static_cast<size_t>(hi - lo), mpq_class(0));
  for (size_t i = 0; i < x.coeffs_.size(); ++i)
    r.coeffs_[static_cast<size_t>(x.low_ - lo) + i] += x.coeffs_[i];
  for (size_t i = 0; i < y.coeffs_.size(); ++i)
    r.coeffs_[static_cast<size_t>(y.low_ - lo) + i] += y.coeffs_[i];
  r.normalize();
  return r;
}

Poly operator-(const Poly& x, const Poly& y) { return x + (-y); }

Poly operator*(const Poly& x, const Poly& y) {
  if (x.is_zero() || y.is_zero()) return {};
  Poly r;
  r.low_ = x.low_ + y.low_;
  r.coeffs_.assign(x.coeffs_.size() + y.coeffs_.size() - 1, mpq_class(0));
  for (size_t i = 0; i < x.coeffs_.size(); ++i) {
    if (x.coeffs_[i] == 0) continue;
    for (size_t j = 0; j < y.coeffs_.size(); ++j) {
      if (y.coeffs_[j] == 0) continue;
      r.coeffs_[i + j] += x.coeffs_[i] * y.coeffs_[j];
    }
  }
  r.normalize();
  return r;
}

Poly Poly::shifted(long k) const {
  Poly r(*this);
  if (!r.is_zero()) r.low_ += k;
  return r;
}

Poly Poly::poly_part() const {
  Poly r(*this);
  if (!r.is_zero()) r.low_ = 0;
  return r;
}

Poly Poly::scaled(const mpq_class& c) const {
  if (c == 0) return {};
  Poly r(*this);
  for (auto& x : r.coeffs_) x *= c;
  return r;
}

Poly Poly::div_exact(const Poly& a, const Poly& b) {
  if (b.is_zero()) throw std::domain_error("Poly::div_exact by zero");
  Poly rem = a.poly_part();
  const Poly den = b.poly_part();
  if (rem.is_zero()) return {};
  if (rem.high() < den.high()) throw std::domain_error("Poly::div_exact: not divisible");
  Poly quo;
  quo.low_ = 0;
  quo.coeffs_.assign(static_cast<size_t>(rem.high() - den.high()) + 1, mpq_class(0));
  const mpq_class lead = den.coeffs_.back();
  while (!rem.is_zero() && rem.high() >= den.high()) {
    const long shift = rem.high() - den.high();
    const mpq_class factor = rem.coeffs_.back() / lead;
    quo.coeffs_[static_cast<size_t>(shift)] = factor;
    rem -= den.shifted(shift).scaled(factor);
  }
  if (!rem.is_zero()) throw std::domain_error("Poly::div_exact: nonzero remainder");
  quo.normalize();
  return quo;
}

static Poly poly_mod(const Poly& a, const Poly& b) {
  Poly rem = a;
  const mpq_class lead = b.coeff(b.high());
  while (!rem.is_zero() && rem.high() >= b.high()) {
    const long shift = rem.high() - b.high();
    const mpq_class factor = rem.coeff(rem.high()) / lead;
    rem -= b.shifted(shift).scaled(factor);
  }
  return rem;
}

Poly Poly::gcd(const Poly& a, const Poly& b) {
  Poly x = a.poly_part();
  Poly y = b.poly_part();
  while (!y.is_zero()) {
    Poly r = poly_mod(x, y);
    x = y;
    y = r.poly_part();
  }
  if (x.is_zero()) return x;
  return x.scaled(1 / x.coeffs_.back());  // monic
}

Poly Poly::derivative() const {
  Poly r;
  if (is_zero()) return r;
  for (size_t i = 0; i < coeffs_.size(); ++i) {
    const long e = low_ + static_cast<long>(i);
    if (e != 0) r += monomial(coeffs_[i] * e, e - 1);
  }
  return r;
}

mpq_class Poly::content() const {
  if (is_zero()) return {};
  mpz_class num_gcd = 0;
  mpz_class den_lcm = 1;
  for (const auto& c : coeffs_) {
    if (c == 0) continue;
    mpz_class g;
    mpz_gcd(g.get_mpz_t(), num_gcd.get_mpz_t(), c.get_num().get_mpz_t());
    num_gcd = g;
    mpz_class l;
    mpz_lcm(l.get_mpz_t(), den_lcm.get_mpz_t(), c.get_den().get_mpz_t());
    den_lcm = l;
  }
  mpq_class content(num_gcd, den_lcm);
  content.canonicalize();
  // positive leading coefficient convention
  if (coeffs_.back() < 0) content = -content;
  return content;
}

Poly Poly::primitive() const {
  if (is_zero()) return {};
  return scaled(1 / content());
}

mpq_class Poly::eval_mpq(const mpq_class& s_val) const {
  if (is_zero()) return {};
  if (low_ < 0 && s_val == 0) throw std::domain_error("Poly::eval_mpq at pole");
  mpq_class acc = 0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * s_val + *it;
  mpq_class p = 1;
  long e = low_;
  const mpq_class base = e < 0 ? mpq_class(1 / s_val) : s_val;
  for (long i = 0; i < (e < 0 ? -e : e); ++i) p *= base;
  return acc * p;
}

double Poly::eval_double(double s_val) const {
  return static_cast<double>(eval_ld(static_cast<long double>(s_val)));
}

long double Poly::eval_ld(long double s_val) const {
  if (is_zero()) return 0.0L;
  long double acc = 0.0L;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it)
    acc = acc * s_val + static_cast<long double>(it->get_d());
  return acc * std::pow(s_val, static_cast<long double>(low_));
}

bool Poly::all_exponents_even() const {
  if (is_zero()) return true;
  if (low_ % 2 != 0) return false;
  for (size_t i = 1; i < coeffs_.size(); i += 2) {
    if (coeffs_[i] != 0) return false;
  }
  return true;
}

static std::string coeff_str(const mpq_class& c) {
  std::ostringstream os;
  os << c;
  return os.str();
}

std::string Poly::str(const std::string& var, int stride) const {
  if (is_zero()) return "0";
  std::string out;
  for (size_t i = 0; i < coeffs_.size(); ++i) {
    const mpq_class& c = coeffs_[i];
    if (c == 0) continue;
    const long e = (low_ + static_cast<long>(i)) / stride;
    const bool neg = c < 0;
    const mpq_class mag = neg ? mpq_class(-c) : c;
    std::string term;
    if (e == 0) {
      term = coeff_str(mag);
    } else {
      std::string pow = var;
      if (e != 1) pow += "^" + std::to_string(e);
      term = (mag == 1) ? pow : coeff_str(mag) + "*" + pow;
    }
    if (out.empty()) {
      out = neg ? "-" + term : term;
    } else {
      out += neg ? " - " + term : " + " + term;
    }
  }
  return out;
}

int Poly::cmp(const Poly& x, const Poly& y) {
  if (x.is_zero() || y.is_zero()) {
    return (x.is_zero() ? 0 : 1) - (y.is_zero() ? 0 : 1);
  }
  if (x.low_ != y.low_) return x.low_ < y.low_ ? -1 : 1;
  if (x.coeffs_.size() != y.coeffs_.size())
    return x.coeffs_.size() < y.coeffs_.size() ? -1 : 1;
  for (size_t i = 0; i < x.coeffs_.size(); ++i) {
    const int c = ::cmp(x.coeffs_[i], y.coeffs_[i]);
    if (c != 0) return c;
  }
  return 0;
}

}  // namespace qsph
