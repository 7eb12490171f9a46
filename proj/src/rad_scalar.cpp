// rad_scalar.cpp — arithmetic in the square-root extension.
// SPDX-License-Identifier: MIT
#include "qsph/rad_scalar.hpp"

#include <cmath>
#include <stdexcept>
#include <utility>

namespace qsph {

namespace {

// largest square divisor: n = residual * w^2 with residual squarefree
// (up to square factors of primes beyond the trial bound, which do not
// occur for the coefficient sizes this artifact produces)
std::pair<mpz_class, mpz_class> int_square_extract(mpz_class n) {
  mpz_class w = 1;
  mpz_class residual = 1;
  for (mpz_class p = 2; p * p <= n; p == 2 ? p = 3 : p += 2) {
    if (n % p != 0) continue;
    int count = 0;
    while (n % p == 0) {
      n /= p;
      ++count;
    }
    for (int i = 0; i < count / 2; ++i) w *= p;
    if (count % 2 == 1) residual *= p;
    if (p > 9973) break;  // beyond trial bound; rest handled below
  }
  if (mpz_perfect_square_p(n.get_mpz_t())) {
    mpz_class root;
    mpz_sqrt(root.get_mpz_t(), n.get_mpz_t());
    w *= root;
  } else {
    residual *= n;
  }
  return {w, residual};
}

// sqrt of a positive rational: c = (out)^2 * residual with residual a
// squarefree positive integer
std::pair<mpq_class, mpz_class> content_sqrt(const mpq_class& c) {
  const mpz_class n = c.get_num() * c.get_den();
  auto [w, residual] = int_square_extract(n);
  return {mpq_class(w, c.get_den()), residual};
}

// f = r * u^2 with r squarefree (rational-coefficient polynomials, low == 0)
std::pair<Poly, Poly> squarefree_extract(const Poly& f) {
  if (f.is_zero() || f.high() == 0) return {f, Poly::one()};
  const Poly g = Poly::gcd(f, f.derivative());
  if (g.is_one()) return {f, Poly::one()};
  const Poly h = Poly::div_exact(f, g);
  auto [rg, ug] = squarefree_extract(g);
  const Poly w = Poly::gcd(h, rg);
  const Poly r = Poly::div_exact(h, w) * Poly::div_exact(rg, w);
  return {r, w * ug};
}

}  // namespace

// Reduces an arbitrary nonzero Laurent polynomial v to (out, radicand) with
// sqrt(v) = out * sqrt(radicand) and radicand canonical.
static std::pair<QRat, Poly> canonicalize_radicand(const Poly& v) {
  const long lo = v.low();
  const long e = ((lo % 2) + 2) % 2;
  const long half = (lo - e) / 2;
  QRat out = QRat::s_pow(half);

  Poly p = v.poly_part();
  const mpq_class c = p.content();
  p = p.primitive();

  auto [r, u] = squarefree_extract(p);
  out = out * QRat(u, Poly::one());
  const mpq_class cr = r.content();
  const Poly r1 = r.primitive();

  auto [out_c, residual_c] = content_sqrt(c);
  auto [out_r, residual_r] = content_sqrt(cr);
  out = out * QRat(out_c * out_r);
  auto [w2, residual] = int_square_extract(residual_c * residual_r);
  out = out * QRat(mpq_class(w2));

  Poly radicand = r1.scaled(mpq_class(residual)).shifted(e);
  if (radicand.is_one()) return {out, Poly::one()};

  // exactness guard: out^2 * radicand must reproduce v
  const Poly check = out.num() * out.num() * radicand;
  const Poly target = v * out.den() * out.den();
  if (!(check == target)) {
    throw std::logic_error("RadScalar: radicand canonicalization mismatch");
  }
  return {out, radicand};
}

void RadScalar::insert_term(const Poly& radicand, const QRat& coeff) {
  if (coeff.is_zero()) return;
  auto [it, inserted] = terms_.try_emplace(radicand, coeff);
  if (!inserted) {
    it->second += coeff;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

RadScalar::RadScalar(const QRat& c) {
  if (!c.is_zero()) terms_.emplace(Poly::one(), c);
}

RadScalar RadScalar::sqrt_of(const QRat& x) {
  RadScalar r;
  if (x.is_zero()) return r;
  // sqrt(num/den) = sqrt(num*den)/den
  auto [out, radicand] = canonicalize_radicand(x.num() * x.den());
  r.insert_term(radicand, out / QRat(x.den(), Poly::one()));
  return r;
}

bool RadScalar::is_rational() const {
  return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first.is_one());
}

QRat RadScalar::to_qrat() const {
  if (terms_.empty()) return QRat();
  if (!is_rational()) {
    throw std::domain_error("RadScalar::to_qrat: irrational value " + str());
  }
  return terms_.begin()->second;
}

RadScalar RadScalar::operator-() const {
  RadScalar r(*this);
  for (auto& [rad, c] : r.terms_) c = -c;
  return r;
}

RadScalar operator+(const RadScalar& x, const RadScalar& y) {
  RadScalar r(x);
  for (const auto& [rad, c] : y.terms_) r.insert_term(rad, c);
  return r;
}

RadScalar operator-(const RadScalar& x, const RadScalar& y) { return x + (-y); }

RadScalar operator*(const RadScalar& x, const RadScalar& y) {
  RadScalar r;
  for (const auto& [f, cf] : x.terms_) {
    for (const auto& [g, cg] : y.terms_) {
      if (f.is_one()) {
        r.insert_term(g, cf * cg);
        continue;
      }
      if (g.is_one()) {
        r.insert_term(f, cf * cg);
        continue;
      }
      // sqrt(f)*sqrt(g): split the common factor w, then re-canonicalize
      const long e = f.low() + g.low();
      const Poly A = f.poly_part();
      const Poly B = g.poly_part();
      const Poly w = Poly::gcd(A, B);
      QRat factor = QRat(w, Poly::one()) * QRat::s_pow(e / 2);
      const Poly rest = Poly::div_exact(A, w) * Poly::div_exact(B, w);
      if (rest.is_one() && e % 2 == 0) {
        r.insert_term(Poly::one(), cf * cg * factor);
        continue;
      }
      auto [out, radicand] = canonicalize_radicand(rest.shifted(e % 2));
      r.insert_term(radicand, cf * cg * factor * out);
    }
  }
  return r;
}

RadScalar operator/(const RadScalar& x, const RadScalar& y) {
  if (y.is_zero()) throw std::domain_error("RadScalar: division by zero");
  if (y.terms_.size() != 1) {
    throw std::domain_error("RadScalar: division by multi-term radical");
  }
  const auto& [f, c] = *y.terms_.begin();
  // 1/(c sqrt(f)) = sqrt(f)/(c f)
  RadScalar inv;
  inv.insert_term(f, (QRat(1) / c) / QRat(f, Poly::one()));
  return x * inv;
}

double RadScalar::eval_s(double s_val) const {
  double acc = 0.0;
  for (const auto& [rad, c] : terms_) {
    acc += c.eval_s(s_val) * std::sqrt(rad.eval_double(s_val));
  }
  return acc;
}

std::string RadScalar::str() const {
  if (terms_.empty()) return "0";
  if (is_rational()) return terms_.begin()->second.str();
  std::string out;
  for (const auto& [rad, c] : terms_) {
    std::string term;
    if (rad.is_one()) {
      term = "(" + c.str() + ")";
    } else {
      const bool even = rad.all_exponents_even();
      term = "(" + c.str() + ")*sqrt(" + rad.str(even ? "q" : "s", even ? 2 : 1) + ")";
    }
    out += out.empty() ? term : " + " + term;
  }
  return out;
}

}  // namespace qsph
