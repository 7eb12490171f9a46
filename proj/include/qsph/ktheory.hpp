// ktheory.hpp — equivariant projections P_n, circle weights, Chern characters.
// SPDX-License-Identifier: MIT
#pragma once

#include <stdexcept>
#include <string>
#include <vector>

#include "qsph/cocycles.hpp"
#include "qsph/peter_weyl.hpp"

namespace qsph {

// square matrix over the exact algebra
struct AlgebraMatrix {
  long dim = 0;
  std::vector<ExactElem> entries;  // row-major, dim*dim

  explicit AlgebraMatrix(long d) : dim(d), entries(static_cast<size_t>(d * d)) {}

  ExactElem& at(long r, long c) { return entries[static_cast<size_t>(r * dim + c)]; }
  const ExactElem& at(long r, long c) const { return entries[static_cast<size_t>(r * dim + c)]; }

  bool operator==(const AlgebraMatrix& o) const = default;
};

inline AlgebraMatrix mat_mul(const AlgebraMatrix& x, const AlgebraMatrix& y) {
  if (x.dim != y.dim) throw std::invalid_argument("mat_mul: dimension mismatch");
  const ExactRing ring;
  AlgebraMatrix out(x.dim);
  for (long r = 0; r < x.dim; ++r) {
    for (long c = 0; c < x.dim; ++c) {
      ExactElem acc;
      for (long t = 0; t < x.dim; ++t) acc += mul(ring, x.at(r, t), y.at(t, c));
      out.at(r, c) = acc;
    }
  }
  return out;
}

inline AlgebraMatrix mat_star(const AlgebraMatrix& x) {
  const ExactRing ring;
  AlgebraMatrix out(x.dim);
  for (long r = 0; r < x.dim; ++r) {
    for (long c = 0; c < x.dim; ++c) out.at(r, c) = star(ring, x.at(c, r));
  }
  return out;
}

// P_n with entries (P_n)_{r,s} = t^{|n|}_{|n|-r+1, n} t^{|n|*}_{|n|-s+1, n}
// (1-based r, s). Constructing checks the isometry identity T*T = sum_p
// t^{|n|*}_{p,n} t^{|n|}_{p,n} = 1 — the canary for any index off-by-one —
// and then P^2 = P = P*.
inline AlgebraMatrix projection_pn(PWTable<ExactRing>& table, HalfInt n) {
  const ExactRing ring;
  const HalfInt ln = n.abs();
  if (ln > table.max_l()) {
    throw std::runtime_error("projection_pn: |n| = " + ln.str() + " exceeds the table cutoff " +
                             table.max_l().str());
  }
  const long dim = ln.twice() + 1;
  std::vector<ExactElem> column;
  column.reserve(static_cast<size_t>(dim));
  for (long r0 = 0; r0 < dim; ++r0) {
    // 0-based row r0 holds PW row index i = |n| - r0
    const HalfInt i = HalfInt::from_twice(ln.twice() - 2 * r0);
    column.push_back(table.at(PWIndex(ln, i, n)).element);
  }

  ExactElem isometry;
  for (const ExactElem& t : column) isometry += mul(ring, star(ring, t), t);
  if (!(isometry == ExactElem::unit(ring))) {
    throw std::logic_error("projection_pn: T*T != 1 at n = " + n.str() +
                           "; the row indexing is inconsistent");
  }

  AlgebraMatrix p(dim);
  for (long r = 0; r < dim; ++r) {
    for (long c = 0; c < dim; ++c) p.at(r, c) = mul(ring, column[r], star(ring, column[c]));
  }
  if (!(mat_mul(p, p) == p)) {
    throw std::logic_error("projection_pn: P^2 != P at n = " + n.str());
  }
  if (!(mat_star(p) == p)) {
    throw std::logic_error("projection_pn: P* != P at n = " + n.str());
  }
  return p;
}

// circle-action weights (1, q^{-2}, ..., q^{-4|n|}): entry k (1-based) is
// q^{-2k+2}
struct CircleRep {
  std::vector<QRat> weights;
};

inline CircleRep rep_vn(HalfInt n) {
  CircleRep v;
  const long dim = n.abs().twice() + 1;
  for (long k0 = 0; k0 < dim; ++k0) v.weights.push_back(QRat::s_pow(-4 * k0));
  return v;
}

// Ch_0([P,V]) = sum_k (V)_{kk} (P)_{kk}
inline ExactElem chern0(const AlgebraMatrix& p, const CircleRep& v) {
  const ExactRing ring;
  ExactElem out;
  for (long k = 0; k < p.dim; ++k) {
    out += scal(ring.from_qrat(v.weights[static_cast<size_t>(k)]), p.at(k, k));
  }
  return out;
}

// Ch_2([P,V]) = -2 sum_{k0,k1,k2} (V)_{k0 k0} (P_{k0 k1} - 1/2 delta) (x)
//               P_{k1 k2} (x) P_{k2 k0}
inline Chain3 chern2(const AlgebraMatrix& p, const CircleRep& v) {
  const ExactRing ring;
  const RadScalar half(QRat(1) / QRat(2));
  Chain3 chain;
  chain.reserve(static_cast<size_t>(p.dim * p.dim * p.dim));
  for (long k0 = 0; k0 < p.dim; ++k0) {
    const RadScalar coeff =
        RadScalar(QRat(-2) * v.weights[static_cast<size_t>(k0)]);
    for (long k1 = 0; k1 < p.dim; ++k1) {
      ExactElem x0 = p.at(k0, k1);
      if (k0 == k1) x0 -= scal(half, ExactElem::unit(ring));
      for (long k2 = 0; k2 < p.dim; ++k2) {
        chain.push_back(ChainTerm3{coeff, x0, p.at(k1, k2), p.at(k2, k0)});
      }
    }
  }
  return chain;
}

// gradewise equivariance: entry (r,s) must be homogeneous of bigrade
// (2(r-s), 0) — the integer shadow of the modular weight q^{2(s-r)}
inline bool equivariance_check(const AlgebraMatrix& p) {
  for (long r = 0; r < p.dim; ++r) {
    for (long c = 0; c < p.dim; ++c) {
      const ExactElem& entry = p.at(r, c);
      if (entry.term_count() == 0) continue;
      const auto bg = bigrade(entry);
      if (!bg || bg->first != 2 * (r - c) || bg->second != 0) return false;
    }
  }
  return true;
}

// the closed form q^{-2|n|} [2n]_q the pairing must reproduce
inline QRat expected_index(HalfInt n) {
  return QRat::s_pow(-2 * n.abs().twice()) * QRat::qnum(HalfInt::from_twice(2 * n.twice()));
}

// full pairing <(phi0, phi2), Ch([P_n, V_n])>; exact, rational
inline QRat index_pairing(PWTable<ExactRing>& table, HalfInt n) {
  const AlgebraMatrix p = projection_pn(table, n);
  if (!equivariance_check(p)) {
    throw std::logic_error("index_pairing: P_n fails the equivariance pattern at n = " + n.str());
  }
  const CircleRep v = rep_vn(n);
  return index_pair(make_phi0(), make_phi2(), chern0(p, v), chern2(p, v));
}

}  // namespace qsph
