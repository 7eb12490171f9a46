// cocycles.hpp — residue cocycle (phi0, phi2) and twisted coboundaries.
// SPDX-License-Identifier: MIT
#pragma once

#include <functional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "qsph/algebra.hpp"
#include "qsph/const_ext.hpp"

namespace qsph {

// Cocycle values live in the coefficient field extended by the formal
// constants L = log(1/q) and EG; coefficients may carry radicals because
// projection entries do.
using CocycleValue = RadConstExt;

namespace detail {

inline const ExactRing& exact_ring() {
  static const ExactRing ring;
  return ring;
}

inline void require_sphere(const ExactElem& x, const char* who) {
  if (!in_sphere_subalgebra(x)) {
    throw std::domain_error(std::string(who) + ": argument outside the sphere subalgebra: " +
                            x.str());
  }
}

}  // namespace detail

// the recurring gap factor Q = 1/(q^{-1} - q)
inline QRat q_gap_inverse() { return QRat(1) / (QRat::q_pow(-1) - QRat::q_pow(1)); }

// phi0 projects onto span{(bc)^k}: phi0(1) = 0,
// phi0(bc) = (1 - EG/L)/2 - q/(q^{-1}-q),
// phi0((bc)^{k+2}) = -h((bc)^k)/(q^{-1}-q).
inline CocycleValue phi0(const ExactElem& a0) {
  detail::require_sphere(a0, "phi0");
  const QRat gap = q_gap_inverse();
  CocycleValue tot;
  for (const auto& [mono, c] : a0.terms()) {
    if (mono.a_exp != 0 || mono.d_exp != 0 || mono.b_exp != mono.c_exp) continue;
    const long k = mono.b_exp;
    if (k == 0) continue;
    CocycleValue contrib;
    if (k == 1) {
      const RadScalar half(QRat(1) / QRat(2));
      contrib = (CocycleValue(1) - CocycleValue::EG() / CocycleValue::L()) *
                    CocycleValue(half) -
                CocycleValue(RadScalar(QRat::q_pow(1) * gap));
    } else {
      contrib = -CocycleValue(RadScalar(haar_bc_power(k - 2) * gap));
    }
    tot += CocycleValue(c) * contrib;
  }
  return tot;
}

// phi2(a0,a1,a2) = [ (q^{-2}-1-2L) eps(a0)E(a1)F(a2)
//                  - (q^2 -1+2L) eps(a0)F(a1)E(a2) ] / (2(q^{-1}-q)L)
// with E = eps o del_e and F = eps o del_f.
inline CocycleValue phi2(const ExactElem& a0, const ExactElem& a1, const ExactElem& a2) {
  detail::require_sphere(a0, "phi2");
  detail::require_sphere(a1, "phi2");
  detail::require_sphere(a2, "phi2");
  const ExactRing& ring = detail::exact_ring();
  const RadScalar e0 = counit(ring, a0);
  if (e0.is_zero()) return CocycleValue();
  const RadScalar big_e1 = counit(ring, del_e(ring, a1));
  const RadScalar big_f2 = counit(ring, del_f(ring, a2));
  const RadScalar big_f1 = counit(ring, del_f(ring, a1));
  const RadScalar big_e2 = counit(ring, del_e(ring, a2));

  const CocycleValue two_l = CocycleValue(2) * CocycleValue::L();
  const CocycleValue c_plus = CocycleValue(RadScalar(QRat::q_pow(-2) - QRat(1))) - two_l;
  const CocycleValue c_minus = CocycleValue(RadScalar(QRat::q_pow(2) - QRat(1))) + two_l;
  const CocycleValue den =
      CocycleValue(RadScalar(QRat(2) * (QRat::q_pow(-1) - QRat::q_pow(1)))) * CocycleValue::L();
  const CocycleValue num = c_plus * CocycleValue(e0 * big_e1 * big_f2) -
                           c_minus * CocycleValue(e0 * big_f1 * big_e2);
  return num / den;
}

// multilinear functional on tuples of sphere elements, arity = degree + 1
struct Cochain {
  int degree = 0;
  std::function<CocycleValue(const std::vector<ExactElem>&)> eval;

  CocycleValue operator()(const std::vector<ExactElem>& args) const {
    if (static_cast<int>(args.size()) != degree + 1) {
      throw std::invalid_argument("Cochain: expected " + std::to_string(degree + 1) +
                                  " arguments, got " + std::to_string(args.size()));
    }
    return eval(args);
  }
};

inline Cochain make_phi0() {
  return {0, [](const std::vector<ExactElem>& a) { return phi0(a[0]); }};
}

inline Cochain make_phi2() {
  return {2, [](const std::vector<ExactElem>& a) { return phi2(a[0], a[1], a[2]); }};
}

// twisted Hochschild coboundary, twist sigma = theta^{-1} restricted to the
// sphere subalgebra:
// (b psi)(a_0..a_{m+1}) = sum_j (-1)^j psi(.., a_j a_{j+1}, ..)
//                        + (-1)^{m+1} psi(sigma(a_{m+1}) a_0, a_1, .., a_m)
inline Cochain b_twisted(const Cochain& psi) {
  const int m = psi.degree;
  Cochain out;
  out.degree = m + 1;
  out.eval = [psi, m](const std::vector<ExactElem>& a) {
    const ExactRing& ring = detail::exact_ring();
    CocycleValue tot;
    for (int j = 0; j <= m; ++j) {
      std::vector<ExactElem> args;
      args.reserve(m + 1);
      for (int i = 0; i < j; ++i) args.push_back(a[i]);
      args.push_back(mul(ring, a[j], a[j + 1]));
      for (int i = j + 2; i <= m + 1; ++i) args.push_back(a[i]);
      const CocycleValue v = psi(args);
      tot += (j % 2 == 0) ? v : -v;
    }
    std::vector<ExactElem> args;
    args.reserve(m + 1);
    args.push_back(mul(ring, sigma_sphere(ring, a[m + 1]), a[0]));
    for (int i = 1; i <= m; ++i) args.push_back(a[i]);
    const CocycleValue v = psi(args);
    tot += ((m + 1) % 2 == 0) ? v : -v;
    return tot;
  };
  return out;
}

// twisted Connes boundary B = N_sigma o B_0 with
// B_0 psi(a_0..a_{m-1}) = psi(1, a_0..a_{m-1}) and
// lambda_sigma(a_0 x .. x a_{k-1}) = (-1)^{k-1} sigma(a_{k-1}) x a_0 x .. x a_{k-2};
// a degree-0 input collapses to the zero cochain.
inline Cochain B_twisted(const Cochain& psi) {
  const int m = psi.degree;
  Cochain out;
  if (m == 0) {
    out.degree = 0;
    out.eval = [](const std::vector<ExactElem>&) { return CocycleValue(); };
    return out;
  }
  out.degree = m - 1;
  out.eval = [psi, m](const std::vector<ExactElem>& a) {
    const ExactRing& ring = detail::exact_ring();
    const int k = m;  // tuple length
    CocycleValue tot;
    std::vector<ExactElem> tup = a;
    int sign = +1;
    for (int j = 0; j < k; ++j) {
      std::vector<ExactElem> args;
      args.reserve(k + 1);
      args.push_back(ExactElem::unit(ring));
      for (const ExactElem& x : tup) args.push_back(x);
      const CocycleValue v = psi(args);
      tot += sign > 0 ? v : -v;
      std::vector<ExactElem> next;
      next.reserve(k);
      next.push_back(sigma_sphere(ring, tup[k - 1]));
      for (int i = 0; i + 1 < k; ++i) next.push_back(tup[i]);
      tup = std::move(next);
      if ((k - 1) % 2 == 1) sign = -sign;
    }
    return tot;
  };
  return out;
}

// one term of a degree-2 chain: coeff * x0 (x) x1 (x) x2
struct ChainTerm3 {
  RadScalar coeff;
  ExactElem x0, x1, x2;
};
using Chain3 = std::vector<ChainTerm3>;

// total pairing <(c0, c2), (ch0, ch2)>; the L and EG contributions must
// cancel exactly and the residue must be rational, otherwise the chosen
// conventions disagree and we fail loudly.
inline QRat index_pair(const Cochain& c0, const Cochain& c2, const ExactElem& ch0,
                       const Chain3& ch2) {
  CocycleValue tot = c0({ch0});
  for (const ChainTerm3& term : ch2) {
    tot += CocycleValue(term.coeff) * c2({term.x0, term.x1, term.x2});
  }
  if (tot.depends_on_L() || tot.depends_on_EG()) {
    throw std::domain_error("index_pair: residual L/EG dependence, conventions disagree: " +
                            tot.str());
  }
  return tot.to_coeff().to_qrat();
}

}  // namespace qsph
