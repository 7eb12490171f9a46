// ladder.cpp — closed-form ladder coefficients for left multiplication by the
// generators b, c and the zeta-residue series built on them.
// SPDX-License-Identifier: MIT
#include <algorithm>
#include <array>
#include <cmath>
#include <stdexcept>
#include <vector>

#include <Eigen/Dense>

#include "qsph/spectral.hpp"

#ifdef QSPH_HAVE_QUADMATH
#include <quadmath.h>
#endif

namespace qsph {

namespace {

// real-type helpers so the series can run in extended precision when q is
// close to 1 (the q-number differences lose digits there)
inline long double r_exp(long double x) { return expl(x); }
inline long double r_log(long double x) { return logl(x); }
inline long double r_sqrt(long double x) { return sqrtl(x); }
inline long double r_abs(long double x) { return fabsl(x); }
#ifdef QSPH_HAVE_QUADMATH
inline __float128 r_exp(__float128 x) { return expq(x); }
inline __float128 r_log(__float128 x) { return logq(x); }
inline __float128 r_sqrt(__float128 x) { return sqrtq(x); }
inline __float128 r_abs(__float128 x) { return fabsq(x); }
#endif

// Matrix elements of multiplication by b and c between normalized basis
// vectors xi^l_{r,s}.  The raising ("plus") coefficients follow from the
// corner products b d^{2l} and c d^{2l} together with the twisted Leibniz
// rule (b is killed by del_e and del'_f, c by del_f and del'_e), and the
// lowering ones are adjoints: b* = -q c, c* = -q^{-1} b.  All spins enter
// through their doubled (integer) values.
template <class Real>
class LadderEngine {
 public:
  explicit LadderEngine(double q) : q_(q) {
    if (!(q > 0.0 && q < 1.0)) throw std::domain_error("ladder engine requires 0 < q < 1");
    ln_s_ = r_log(static_cast<Real>(q)) / 2;
    qden_ = sp(-2) - sp(2);
  }

  double q() const { return q_; }

  // s^k (s = q^{1/2}), cached per integer exponent
  Real sp(long k) {
    auto& side = k >= 0 ? pos_ : neg_;
    const std::size_t idx = static_cast<std::size_t>(k >= 0 ? k : -k);
    if (side.size() <= idx) {
      if (side.empty()) side.push_back(Real(1));
      const Real step = r_exp(k >= 0 ? ln_s_ : -ln_s_);
      while (side.size() <= idx) side.push_back(side.back() * step);
    }
    return side[idx];
  }

  // [x]_q for doubled argument: qn(2x) = (q^{-x} - q^x)/(q^{-1} - q), and
  // s^{2x} = sp(twice_x), so the doubled value feeds sp directly.
  Real qn(long twice_x) { return (sp(-twice_x) - sp(twice_x)) / qden_; }

  // <xi^{l+1/2}_{r-1/2, s+1/2}, b xi^l_{r,s}>
  Real b_plus(long tl, long tr, long ts) {
    if (!valid(tl, tr, ts)) return Real(0);
    const long e = (tr + ts) / 2 + 1;
    return sp(e) * r_sqrt(qn(tl - tr + 2) * qn(tl + ts + 2) / (qn(2 * tl + 2) * qn(2 * tl + 4)));
  }

  // <xi^{l+1/2}_{r+1/2, s-1/2}, c xi^l_{r,s}>
  Real c_plus(long tl, long tr, long ts) {
    if (!valid(tl, tr, ts)) return Real(0);
    const long e = (tr + ts) / 2 - 1;
    return sp(e) * r_sqrt(qn(tl - ts + 2) * qn(tl + tr + 2) / (qn(2 * tl + 2) * qn(2 * tl + 4)));
  }

  // <xi^{l-1/2}_{r-1/2, s+1/2}, b xi^l_{r,s}> and the c counterpart
  Real b_minus(long tl, long tr, long ts) { return -sp(2) * c_plus(tl - 1, tr - 1, ts + 1); }
  Real c_minus(long tl, long tr, long ts) { return -sp(-2) * b_plus(tl - 1, tr + 1, ts - 1); }

  // <xi^{l+1/2}_{r-1/2, s-1/2}, a xi^l_{r,s}>
  Real a_plus(long tl, long tr, long ts) {
    if (!valid(tl, tr, ts)) return Real(0);
    const long e = (tr + ts) / 2 + tl + 1;
    return sp(e) * r_sqrt(qn(tl - tr + 2) * qn(tl - ts + 2) / (qn(2 * tl + 2) * qn(2 * tl + 4)));
  }
  // <xi^{l-1/2}_{r-1/2, s-1/2}, a xi^l_{r,s}>
  Real a_minus(long tl, long tr, long ts) {
    if (!valid(tl, tr, ts) || tl == 0) return Real(0);
    const long e = (tr + ts) / 2 - tl - 1;
    return sp(e) * r_sqrt(qn(tl + tr) * qn(tl + ts) / (qn(2 * tl) * qn(2 * tl + 2)));
  }
  // <xi^{l+1/2}_{r+1/2, s+1/2}, d xi^l_{r,s}>  (adjoint: a_minus one level up)
  Real d_plus(long tl, long tr, long ts) {
    if (!valid(tl, tr, ts)) return Real(0);
    const long e = (tr + ts) / 2 - tl - 1;
    return sp(e) * r_sqrt(qn(tl + tr + 2) * qn(tl + ts + 2) / (qn(2 * tl + 2) * qn(2 * tl + 4)));
  }
  // <xi^{l-1/2}_{r+1/2, s+1/2}, d xi^l_{r,s}>  (adjoint: a_plus one level down)
  Real d_minus(long tl, long tr, long ts) {
    if (!valid(tl, tr, ts) || tl == 0) return Real(0);
    const long e = (tr + ts) / 2 + tl + 1;
    return sp(e) * r_sqrt(qn(tl - tr) * qn(tl - ts) / (qn(2 * tl) * qn(2 * tl + 2)));
  }

  // tridiagonal matrix elements of multiplication by bc on the chain of
  // spins over a fixed column (r, s)
  Real j_diag(long tl, long tr, long ts) {
    return c_plus(tl, tr, ts) * b_minus(tl + 1, tr + 1, ts - 1) +
           c_minus(tl, tr, ts) * b_plus(tl - 1, tr + 1, ts - 1);
  }
  Real j_up(long tl, long tr, long ts) {  // <l+1 | bc | l>
    return c_plus(tl, tr, ts) * b_plus(tl + 1, tr + 1, ts - 1);
  }
  Real j_down(long tl, long tr, long ts) {  // <l-1 | bc | l>
    return c_minus(tl, tr, ts) * b_minus(tl - 1, tr + 1, ts - 1);
  }

  // <xi^l_{r,s}, (bc)^k xi^l_{r,s}> through a local band of the chain
  Real bc_power(long k, long tl, long tr, long ts) {
    if (k < 0 || k > 8) throw std::invalid_argument("bc_power supports 0 <= k <= 8");
    if (!valid(tl, tr, ts)) return Real(0);
    if (k == 0) return Real(1);
    const long t_min = std::max(std::labs(tr), std::labs(ts));
    const long lo = std::max(t_min, tl - 2 * k);  // doubled spins, chain steps by 2
    const long hi = tl + 2 * k;
    const int w = static_cast<int>((hi - lo) / 2 + 1);
    std::vector<Real> j(static_cast<std::size_t>(w) * w, Real(0));
    auto at = [&](int row, int col) -> Real& { return j[static_cast<std::size_t>(row) * w + col]; };
    for (int col = 0; col < w; ++col) {
      const long t = lo + 2 * col;
      at(col, col) = j_diag(t, tr, ts);
      if (col + 1 < w) at(col + 1, col) = j_up(t, tr, ts);
      if (col > 0) at(col - 1, col) = j_down(t, tr, ts);
    }
    // power the band onto the basis vector of the probed spin
    const int probe = static_cast<int>((tl - lo) / 2);
    std::vector<Real> v(static_cast<std::size_t>(w), Real(0)), nv(v);
    v[static_cast<std::size_t>(probe)] = Real(1);
    for (long step = 0; step < k; ++step) {
      std::fill(nv.begin(), nv.end(), Real(0));
      for (int row = 0; row < w; ++row) {
        for (int col = std::max(0, row - 1); col <= std::min(w - 1, row + 1); ++col) {
          nv[static_cast<std::size_t>(row)] += at(row, col) * v[static_cast<std::size_t>(col)];
        }
      }
      std::swap(v, nv);
    }
    return v[static_cast<std::size_t>(probe)];
  }

  // weighted column sum over one level: sum_r q^{-2r} <xi^l_{r,s}, beta xi^l_{r,s}>
  // where beta = sum_k coef[k] (bc)^k
  Real level_weight(long tl, long ts, const std::vector<double>& coef) {
    Real out(0);
    if (!coef.empty() && coef[0] != 0.0) out += static_cast<Real>(coef[0]) * qn(2 * tl + 2);
    for (long tr = -tl; tr <= tl; tr += 2) {
      Real diag(0);
      for (std::size_t k = 1; k < coef.size(); ++k) {
        if (coef[k] == 0.0) continue;
        diag += static_cast<Real>(coef[k]) * bc_power(static_cast<long>(k), tl, tr, ts);
      }
      if (diag != Real(0)) out += sp(-2 * tr) * diag;
    }
    return out;
  }

 private:
  static bool valid(long tl, long tr, long ts) {
    return tl >= 0 && std::labs(tr) <= tl && std::labs(ts) <= tl && ((tl - tr) % 2 == 0) &&
           ((tl - ts) % 2 == 0);
  }

  double q_;
  Real ln_s_{};
  Real qden_{};
  std::vector<Real> pos_, neg_;
};

struct SeriesResult {
  std::array<double, 4> plus{};
  std::array<double, 4> minus{};
  long terms = 0;
};

constexpr std::array<double, 4> kZetaSamples = {-0.30, -0.35, -0.40, -0.45};
constexpr long kMaxLevels = 20000;

// sum over levels of [l+1/2]^{-(3+2r)} * level_weight for both components
template <class Real>
SeriesResult zeta_series(double q, const std::vector<double>& coef, double precision) {
  LadderEngine<Real> eng(q);
  std::array<Real, 4> acc_p{}, acc_m{};
  std::array<Real, 4> last_p{}, last_m{};
  SeriesResult out;

  // geometric tail bound from the observed ratio of successive terms
  const auto tail_small = [&](Real term, Real prev, Real acc) {
    const Real a_term = r_abs(term);
    const Real a_prev = r_abs(prev);
    if (a_prev == Real(0)) return a_term == Real(0);
    const Real ratio = a_term / a_prev;
    if (ratio >= Real(1)) return false;
    const Real scale = std::max(Real(1), r_abs(acc));
    return a_term * ratio / (Real(1) - ratio) <= static_cast<Real>(precision) * scale;
  };

  long level = 0;
  for (long tl = 1; level < kMaxLevels; tl += 2, ++level) {
    const Real wp = eng.level_weight(tl, +1, coef);
    const Real wm = eng.level_weight(tl, -1, coef);
    const Real d = eng.qn(tl + 1);  // [l + 1/2]
    const Real lnd = r_log(d);
    bool settled = level > 6;
    for (int i = 0; i < 4; ++i) {
      const std::size_t k = static_cast<std::size_t>(i);
      const Real p = r_exp(static_cast<Real>(-(3.0 + 2.0 * kZetaSamples[k])) * lnd);
      const Real tp = wp * p;
      const Real tm = wm * p;
      acc_p[k] += tp;
      acc_m[k] += tm;
      if (settled &&
          !(tail_small(tp, last_p[k], acc_p[k]) && tail_small(tm, last_m[k], acc_m[k]))) {
        settled = false;
      }
      last_p[k] = tp;
      last_m[k] = tm;
    }
    if (settled) {
      out.terms = level + 1;
      for (int i = 0; i < 4; ++i) {
        out.plus[static_cast<std::size_t>(i)] = static_cast<double>(acc_p[static_cast<std::size_t>(i)]);
        out.minus[static_cast<std::size_t>(i)] =
            static_cast<double>(acc_m[static_cast<std::size_t>(i)]);
      }
      return out;
    }
  }
  throw std::runtime_error("zeta series did not converge within " + std::to_string(kMaxLevels) +
                           " levels; sample exponents too close to the abscissa");
}

// interpolating fit of y = c_{-1}/x + c_0 + c_1 x + c_2 x^2 at x = r + 1/2;
// the quadratic term keeps the residue clean when the pole cancels (counit 0)
std::array<double, 3> fit_laurent(const std::array<double, 4>& r, const std::array<double, 4>& y) {
  Eigen::Matrix4d a;
  Eigen::Vector4d rhs;
  for (int i = 0; i < 4; ++i) {
    const double x = r[static_cast<std::size_t>(i)] + 0.5;
    a(i, 0) = 1.0 / x;
    a(i, 1) = 1.0;
    a(i, 2) = x;
    a(i, 3) = x * x;
    rhs(i) = y[static_cast<std::size_t>(i)];
  }
  const Eigen::Vector4d c = a.colPivHouseholderQr().solve(rhs);
  return {c(0), c(1), c(2)};
}

}  // namespace

long double ladder_a_plus(double q, HalfInt l, HalfInt r, HalfInt s) {
  LadderEngine<long double> eng(q);
  return eng.a_plus(l.twice(), r.twice(), s.twice());
}
long double ladder_a_minus(double q, HalfInt l, HalfInt r, HalfInt s) {
  LadderEngine<long double> eng(q);
  return eng.a_minus(l.twice(), r.twice(), s.twice());
}
long double ladder_d_plus(double q, HalfInt l, HalfInt r, HalfInt s) {
  LadderEngine<long double> eng(q);
  return eng.d_plus(l.twice(), r.twice(), s.twice());
}
long double ladder_d_minus(double q, HalfInt l, HalfInt r, HalfInt s) {
  LadderEngine<long double> eng(q);
  return eng.d_minus(l.twice(), r.twice(), s.twice());
}
long double ladder_b_plus(double q, HalfInt l, HalfInt r, HalfInt s) {
  LadderEngine<long double> eng(q);
  return eng.b_plus(l.twice(), r.twice(), s.twice());
}
long double ladder_b_minus(double q, HalfInt l, HalfInt r, HalfInt s) {
  LadderEngine<long double> eng(q);
  return eng.b_minus(l.twice(), r.twice(), s.twice());
}
long double ladder_c_plus(double q, HalfInt l, HalfInt r, HalfInt s) {
  LadderEngine<long double> eng(q);
  return eng.c_plus(l.twice(), r.twice(), s.twice());
}
long double ladder_c_minus(double q, HalfInt l, HalfInt r, HalfInt s) {
  LadderEngine<long double> eng(q);
  return eng.c_minus(l.twice(), r.twice(), s.twice());
}

long double bc_power_diag(double q, long k, HalfInt l, HalfInt r, HalfInt s) {
  LadderEngine<long double> eng(q);
  return eng.bc_power(k, l.twice(), r.twice(), s.twice());
}

ZetaReport zeta_residue(const ExactElem& beta, double q, double precision) {
  if (!(q > 0.0 && q < 1.0)) throw std::domain_error("zeta_residue requires 0 < q < 1");
  if (!in_sphere_subalgebra(beta)) {
    throw std::domain_error("zeta_residue requires an element of the sphere subalgebra");
  }
  const double s_val = std::sqrt(q);

  // only the (bc)^k part of beta has diagonal matrix elements; the m != 0
  // blocks shift the column index r and never touch the trace
  std::vector<double> coef;
  for (const auto& [mono, c] : beta.terms()) {
    if (mono.a_exp != 0 || mono.d_exp != 0 || mono.b_exp != mono.c_exp) continue;
    const std::size_t k = static_cast<std::size_t>(mono.b_exp);
    if (k > 8) throw std::domain_error("zeta_residue supports diagonal powers (bc)^k with k <= 8");
    if (coef.size() <= k) coef.resize(k + 1, 0.0);
    coef[k] += scalar_eval(c, s_val);
  }

  const ExactRing exact;
  const double eps_beta = scalar_eval(counit(exact, beta), s_val);

  SeriesResult series = q > 0.9 ?
#ifdef QSPH_HAVE_QUADMATH
                                zeta_series<__float128>(q, coef, precision)
#else
                                zeta_series<long double>(q, coef, precision)
#endif
                                : zeta_series<long double>(q, coef, precision);

  ZetaReport rep;
  rep.q = q;
  rep.sample_r = kZetaSamples;
  rep.sample_plus = series.plus;
  rep.sample_minus = series.minus;
  rep.max_terms = series.terms;

  const auto fit_p = fit_laurent(kZetaSamples, series.plus);
  const auto fit_m = fit_laurent(kZetaSamples, series.minus);
  rep.residue_plus = fit_p[0];
  rep.residue_minus = fit_m[0];
  rep.residue = 0.5 * (fit_p[0] + fit_m[0]);
  rep.c0 = fit_p[1];
  rep.c1 = fit_p[2];
  rep.expected = (1.0 / q - q) / (2.0 * std::log(1.0 / q)) * eps_beta;
  rep.abs_err = std::abs(rep.residue - rep.expected);
  return rep;
}

}  // namespace qsph
