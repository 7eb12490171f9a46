// const_ext.hpp — rational functions extended by the constants L and EG.
// SPDX-License-Identifier: MIT
#pragma once

#include <algorithm>
#include <cmath>
#include <map>
#include <stdexcept>
#include <string>
#include <utility>

#include "qsph/qrat.hpp"
#include "qsph/rad_scalar.hpp"

namespace qsph {

// Element of Coeff[L, EG, 1/L]: a numerator polynomial in the two commuting
// formal constants L (standing for log(1/q)) and EG (the Euler-type constant
// of the regularized residue) over a coefficient field, divided by a power of
// L. That is the full denominator shape the residue cocycles produce.
// Canonical form strips the common L power, so zero tests and L/EG-freeness
// tests are exact. Coeff is QRat for scalar work and RadScalar when the
// inputs carry the square roots of the normalized basis elements.
template <class Coeff>
class BasicConstExt {
public:
  BasicConstExt() = default;
  BasicConstExt(long c) : BasicConstExt(Coeff(c)) {}  // NOLINT(google-explicit-constructor)
  explicit BasicConstExt(const Coeff& c) {
    if (!c.is_zero()) num_.emplace(std::make_pair(0, 0), c);
  }

  static BasicConstExt L() {
    BasicConstExt r;
    r.num_.emplace(std::make_pair(1, 0), Coeff(1));
    return r;
  }
  static BasicConstExt EG() {
    BasicConstExt r;
    r.num_.emplace(std::make_pair(0, 1), Coeff(1));
    return r;
  }

  bool is_zero() const { return num_.empty(); }
  bool depends_on_L() const {
    if (den_L_ > 0) return true;
    for (const auto& [key, c] : num_) {
      if (key.first > 0) return true;
    }
    return false;
  }
  bool depends_on_EG() const {
    for (const auto& [key, c] : num_) {
      if (key.second > 0) return true;
    }
    return false;
  }

  // the constant term; throws when L or EG survives
  Coeff to_coeff() const {
    if (num_.empty()) return Coeff();
    if (depends_on_L() || depends_on_EG()) {
      throw std::domain_error("BasicConstExt::to_coeff: residual L/EG dependence in " + str());
    }
    return num_.begin()->second;
  }

  bool operator==(const BasicConstExt& o) const {
    return den_L_ == o.den_L_ && num_ == o.num_;
  }
  BasicConstExt operator-() const {
    BasicConstExt r(*this);
    for (auto& [key, c] : r.num_) c = -c;
    return r;
  }
  friend BasicConstExt operator+(const BasicConstExt& x, const BasicConstExt& y) {
    BasicConstExt r;
    r.den_L_ = std::max(x.den_L_, y.den_L_);
    for (const auto& [key, c] : x.num_) {
      r.num_[std::make_pair(key.first + r.den_L_ - x.den_L_, key.second)] += c;
    }
    for (const auto& [key, c] : y.num_) {
      r.num_[std::make_pair(key.first + r.den_L_ - y.den_L_, key.second)] += c;
    }
    r.normalize();
    return r;
  }
  friend BasicConstExt operator-(const BasicConstExt& x, const BasicConstExt& y) {
    return x + (-y);
  }
  friend BasicConstExt operator*(const BasicConstExt& x, const BasicConstExt& y) {
    BasicConstExt r;
    r.den_L_ = x.den_L_ + y.den_L_;
    for (const auto& [kx, cx] : x.num_) {
      for (const auto& [ky, cy] : y.num_) {
        r.num_[std::make_pair(kx.first + ky.first, kx.second + ky.second)] += cx * cy;
      }
    }
    r.normalize();
    return r;
  }
  // division restricted to c * L^k divisors (all the cocycles need)
  friend BasicConstExt operator/(const BasicConstExt& x, const BasicConstExt& y) {
    if (y.is_zero()) throw std::domain_error("BasicConstExt: division by zero");
    if (y.num_.size() != 1 || y.num_.begin()->first.second != 0) {
      throw std::domain_error("BasicConstExt: unsupported divisor " + y.str());
    }
    const auto& [key, c] = *y.num_.begin();
    BasicConstExt r;
    r.den_L_ = x.den_L_ + key.first;
    for (const auto& [kx, cx] : x.num_) {
      r.num_.emplace(std::make_pair(kx.first + y.den_L_, kx.second), cx / c);
    }
    r.normalize();
    return r;
  }
  BasicConstExt& operator+=(const BasicConstExt& y) { return *this = *this + y; }
  BasicConstExt& operator-=(const BasicConstExt& y) { return *this = *this - y; }
  BasicConstExt& operator*=(const BasicConstExt& y) { return *this = *this * y; }

  // numeric value with L = log(1/q), q = s^2, and EG the Euler constant
  double eval_s(double s_val) const {
    const double l_val = -2.0 * std::log(s_val);
    const double eg_val = 0.57721566490153286;
    double acc = 0.0;
    for (const auto& [key, c] : num_) {
      acc += c.eval_s(s_val) * std::pow(l_val, key.first) * std::pow(eg_val, key.second);
    }
    return acc / std::pow(l_val, den_L_);
  }

  std::string str() const {
    if (num_.empty()) return "0";
    auto power = [](const std::string& sym, int e) {
      return e > 1 ? sym + "^" + std::to_string(e) : sym;
    };
    std::string out;
    for (const auto& [key, c] : num_) {
      std::string term = "(" + c.str() + ")";
      if (key.first > 0) term += "*" + power("L", key.first);
      if (key.second > 0) term += "*" + power("EG", key.second);
      out += out.empty() ? term : " + " + term;
    }
    if (den_L_ > 0) out = "(" + out + ")/" + power("L", den_L_);
    return out;
  }

private:
  // (L power, EG power) -> coefficient; value = sum / L^den_L_
  std::map<std::pair<int, int>, Coeff> num_;
  int den_L_ = 0;

  void normalize() {
    for (auto it = num_.begin(); it != num_.end();) {
      it = it->second.is_zero() ? num_.erase(it) : std::next(it);
    }
    if (num_.empty()) {
      den_L_ = 0;
      return;
    }
    int min_L = den_L_;
    for (const auto& [key, c] : num_) min_L = std::min(min_L, key.first);
    if (min_L > 0) {
      std::map<std::pair<int, int>, Coeff> shifted;
      for (auto& [key, c] : num_) {
        shifted.emplace(std::make_pair(key.first - min_L, key.second), std::move(c));
      }
      num_ = std::move(shifted);
      den_L_ -= min_L;
    }
  }
};

using ConstExt = BasicConstExt<QRat>;
using RadConstExt = BasicConstExt<RadScalar>;

}  // namespace qsph
