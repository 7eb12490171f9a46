// rings.hpp — coefficient rings for the algebra engine (exact and floating).
// SPDX-License-Identifier: MIT
#pragma once

#include <algorithm>
#include <cmath>
#include <sstream>
#include <string>

#include "qsph/qrat.hpp"
#include "qsph/rad_scalar.hpp"

namespace qsph {

// Both rings expose the same vocabulary so every algebra routine can be
// instantiated once for exact scalars (RadScalar over q) and once for plain
// doubles at a fixed numerical value of s = q^{1/2}.

struct ExactRing {
  using Scalar = RadScalar;

  Scalar zero() const { return RadScalar(); }
  Scalar one() const { return RadScalar(1); }
  Scalar s_pow(long e) const { return RadScalar(QRat::s_pow(e)); }
  Scalar q_pow(HalfInt e) const { return RadScalar(QRat::q_pow(e)); }
  Scalar from_qrat(const QRat& x) const { return RadScalar(x); }
  Scalar sqrt_qrat(const QRat& x) const { return RadScalar::sqrt_of(x); }
  Scalar inv(const Scalar& x) const { return one() / x; }
  bool is_zero(const Scalar& x) const { return x.is_zero(); }
};

struct NumericRing {
  double s = 0.0;

  explicit NumericRing(double s_val) : s(s_val) {}

  using Scalar = double;

  Scalar zero() const { return 0.0; }
  Scalar one() const { return 1.0; }
  Scalar s_pow(long e) const { return std::pow(s, static_cast<double>(e)); }
  Scalar q_pow(HalfInt e) const { return std::pow(s, e.to_double() * 2.0); }
  Scalar from_qrat(const QRat& x) const { return x.eval_s(s); }
  Scalar sqrt_qrat(const QRat& x) const { return std::sqrt(std::max(0.0, x.eval_s(s))); }
  Scalar inv(Scalar x) const { return 1.0 / x; }
  bool is_zero(Scalar x) const { return x == 0.0; }
};

// coefficient-level helpers usable without a ring instance
inline bool scalar_is_zero(const RadScalar& x) { return x.is_zero(); }
inline bool scalar_is_zero(double x) { return x == 0.0; }

inline std::string scalar_str(const RadScalar& x) { return x.str(); }
inline std::string scalar_str(double x) {
  std::ostringstream os;
  os.precision(17);
  os << x;
  return os.str();
}

inline double scalar_eval(const RadScalar& x, double s_val) { return x.eval_s(s_val); }
inline double scalar_eval(double x, double) { return x; }

}  // namespace qsph
