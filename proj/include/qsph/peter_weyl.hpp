// peter_weyl.hpp — Peter-Weyl basis t^l_{r,s}: construction, norms, expansion.
// SPDX-License-Identifier: MIT
#pragma once

#include <algorithm>
#include <cmath>
#include <compare>
#include <map>
#include <stdexcept>
#include <string>
#include <type_traits>
#include <utility>

#include "qsph/algebra.hpp"

namespace qsph {

// Label of a Peter-Weyl matrix element t^l_{r,s}: spin l and row/column
// weights r, s, half-integers with l - r, l - s whole and |r|, |s| <= l.
struct PWIndex {
  HalfInt l, r, s;

  PWIndex(HalfInt l_in, HalfInt r_in, HalfInt s_in) : l(l_in), r(r_in), s(s_in) {
    const bool ok = l >= HalfInt(0) && r.abs() <= l && s.abs() <= l &&
                    (l - r).is_integer() && (l - s).is_integer();
    if (!ok) {
      throw std::invalid_argument("PWIndex: invalid labels l=" + l.str() + " r=" + r.str() +
                                  " s=" + s.str());
    }
  }

  friend auto operator<=>(const PWIndex&, const PWIndex&) = default;

  // t^l_{r,s} lives in the bigraded block A[-2r, -2s]
  long m_grade() const { return -r.twice(); }
  long n_grade() const { return -s.twice(); }

  std::string str() const { return "t[" + l.str() + ";" + r.str() + "," + s.str() + "]"; }
};

// ladder normalization kappa^l_j = sqrt([l+j][l-j+1]); its square is rational
inline QRat pw_kappa_sq(HalfInt l, HalfInt j) {
  return QRat::qnum(l + j) * QRat::qnum(l - j + HalfInt(1));
}

template <class Ring>
typename Ring::Scalar pw_kappa(const Ring& ring, HalfInt l, HalfInt j) {
  return ring.sqrt_qrat(pw_kappa_sq(l, j));
}

// closed-form norm h(t* t) = q^{-2r} / [2l+1]; cross-checked against the
// direct haar pairing in the test suite
inline QRat pw_norm_sq(const PWIndex& idx) {
  const HalfInt two_l_plus_1 = HalfInt::from_twice(2 * idx.l.twice() + 2);
  return QRat::s_pow(-2 * idx.r.twice()) / QRat::qnum(two_l_plus_1);
}

template <class Ring>
struct PWElement {
  PWIndex index;
  Elem<Ring> element;
  QRat norm_sq;
};

namespace detail {

// residual-zero test for the expansion loop: exact rings prune true zeros in
// add_term, the floating ring needs a tolerance against roundoff
template <class Ring>
bool pw_negligible(const Elem<Ring>& x, double tol) {
  if constexpr (std::is_same_v<typename Ring::Scalar, double>) {
    double peak = 0.0;
    for (const auto& [mono, c] : x.terms()) peak = std::max(peak, std::abs(c));
    return peak <= tol;
  } else {
    (void)tol;
    return x.term_count() == 0;
  }
}

template <class Ring>
double pw_peak(const Elem<Ring>& x) {
  if constexpr (std::is_same_v<typename Ring::Scalar, double>) {
    double peak = 0.0;
    for (const auto& [mono, c] : x.terms()) peak = std::max(peak, std::abs(c));
    return peak;
  } else {
    return x.term_count() == 0 ? 0.0 : 1.0;
  }
}

}  // namespace detail

// Lazily built table of Peter-Weyl elements, whole spin levels at a time:
// seed t^l_{l,l} = d^{2l}, lower s with del_f, then lower r with del_f_left,
// dividing by kappa^l_j at each rung. Norms come from the closed form above.
template <class Ring>
class PWTable {
public:
  explicit PWTable(const Ring& ring, HalfInt max_l = HalfInt(100))
      : ring_(ring), max_l_(max_l) {
    if (max_l_ < HalfInt(0)) throw std::invalid_argument("PWTable: negative cutoff");
  }

  const Ring& ring() const { return ring_; }
  HalfInt max_l() const { return max_l_; }

  const PWElement<Ring>& at(const PWIndex& idx) {
    if (idx.l > max_l_) {
      throw std::runtime_error("PWTable: spin " + idx.l.str() + " exceeds the cutoff l <= " +
                               max_l_.str());
    }
    auto lev = levels_.find(idx.l.twice());
    if (lev == levels_.end()) {
      build_level(idx.l);
      lev = levels_.find(idx.l.twice());
    }
    return lev->second.at(std::make_pair(idx.r.twice(), idx.s.twice()));
  }

  // materialize every level up to l; afterwards lookups and expansions capped
  // at l are read-only (safe to share across threads)
  void ensure_levels(HalfInt l) {
    if (l > max_l_) {
      throw std::runtime_error("PWTable: spin " + l.str() + " exceeds the cutoff l <= " +
                               max_l_.str());
    }
    for (long two_l = 0; two_l <= l.twice(); ++two_l) {
      if (levels_.find(two_l) == levels_.end()) build_level(HalfInt::from_twice(two_l));
    }
  }

  // Coefficients of x in the basis, x = sum coeff * t^l_{r,s}, computed
  // blockwise per bigrade via coeff = h(t* x) / ||t||^2. The tolerance only
  // matters for the floating ring, where it is relative to the block's
  // largest coefficient.
  std::map<PWIndex, typename Ring::Scalar> expand(const Elem<Ring>& x, HalfInt l_max,
                                                  double tol = 1e-12) {
    using Scalar = typename Ring::Scalar;
    std::map<PWIndex, Scalar> out;
    std::map<std::pair<long, long>, Elem<Ring>> blocks;
    for (const auto& [mono, c] : x.terms()) {
      blocks[std::make_pair(mono.m_grade(), mono.n_grade())].add_term(mono, c);
    }
    for (const auto& [mn, block] : blocks) {
      const HalfInt r = HalfInt::from_twice(-mn.first);
      const HalfInt s = HalfInt::from_twice(-mn.second);
      const double eps = tol * std::max(1.0, detail::pw_peak(block));
      Elem<Ring> residual = block;
      HalfInt l = std::max(r.abs(), s.abs());
      while (!detail::pw_negligible(residual, eps)) {
        if (l > l_max) {
          throw std::runtime_error("PWTable::expand: block (m,n) = (" +
                                   std::to_string(mn.first) + "," + std::to_string(mn.second) +
                                   ") leaves a nonzero residual beyond l_max = " + l_max.str());
        }
        const PWIndex idx(l, r, s);
        const PWElement<Ring>& entry = at(idx);
        const Scalar c = haar(ring_, mul(ring_, star(ring_, entry.element), residual)) *
                         ring_.inv(ring_.from_qrat(entry.norm_sq));
        if (!ring_.is_zero(c)) {
          out.emplace(idx, c);
          residual -= scal(c, entry.element);
        }
        l = l + HalfInt(1);
      }
    }
    return out;
  }

  std::map<PWIndex, typename Ring::Scalar> expand(const Elem<Ring>& x, double tol = 1e-12) {
    return expand(x, max_l_, tol);
  }

  // spin levels currently materialized (each level is complete when present)
  std::map<long, const std::map<std::pair<long, long>, PWElement<Ring>>*> built_levels() const {
    std::map<long, const std::map<std::pair<long, long>, PWElement<Ring>>*> out;
    for (const auto& [two_l, entries] : levels_) out.emplace(two_l, &entries);
    return out;
  }

  // inject a complete prebuilt level (cache restore); rejects partial levels
  void adopt_level(long two_l, std::map<std::pair<long, long>, PWElement<Ring>> entries) {
    const long dim = two_l + 1;
    if (static_cast<long>(entries.size()) != dim * dim) {
      throw std::invalid_argument("PWTable::adopt_level: level " +
                                  HalfInt::from_twice(two_l).str() + " is incomplete");
    }
    levels_.emplace(two_l, std::move(entries));
  }

private:
  Ring ring_;
  HalfInt max_l_;
  // two_l -> (two_r, two_s) -> entry
  std::map<long, std::map<std::pair<long, long>, PWElement<Ring>>> levels_;

  void build_level(HalfInt l) {
    const long two_l = l.twice();
    std::map<std::pair<long, long>, PWElement<Ring>> out;
    // top corner t^l_{l,l} = d^{2l}
    Elem<Ring> top = Elem<Ring>::single(Monomial(0, 0, 0, two_l), ring_.one());
    std::map<long, Elem<Ring>> row;  // two_s -> element in the r = l row
    row.emplace(two_l, top);
    Elem<Ring> cur = top;
    for (long step = 0; step < two_l; ++step) {
      const HalfInt sval = HalfInt::from_twice(two_l - 2 * step);
      cur = scal(ring_.inv(pw_kappa(ring_, l, sval)), del_f(ring_, cur));
      row.emplace(sval.twice() - 2, cur);
    }
    for (const auto& [two_s, el] : row) {
      const HalfInt s = HalfInt::from_twice(two_s);
      out.emplace(std::make_pair(two_l, two_s),
                  PWElement<Ring>{PWIndex(l, l, s), el, pw_norm_sq(PWIndex(l, l, s))});
      cur = el;
      for (long step = 0; step < two_l; ++step) {
        const HalfInt rval = HalfInt::from_twice(two_l - 2 * step);
        cur = scal(ring_.inv(pw_kappa(ring_, l, rval)), del_f_left(ring_, cur));
        const PWIndex idx(l, rval - HalfInt(1), s);
        out.emplace(std::make_pair(idx.r.twice(), two_s),
                    PWElement<Ring>{idx, cur, pw_norm_sq(idx)});
      }
    }
    levels_.emplace(two_l, std::move(out));
  }
};

using ExactPWTable = PWTable<ExactRing>;
using NumericPWTable = PWTable<NumericRing>;

// ---------------------------------------------------------------------------
// disk cache for the exact table (versioned JSON, half-integers doubled)

inline constexpr const char* kPWCacheVersion = "qsph-pw-1";

// $CACHE_DIR/pw_table.json when CACHE_DIR is set, else "" (caching off)
std::string pw_cache_default_path();
// writes every fully built level; atomic replace (write temp, rename)
void pw_cache_save(const PWTable<ExactRing>& table, const std::string& path);
// merges complete cached levels into the table; returns entries adopted,
// 0 on missing file or version/indeterminate mismatch
long pw_cache_load(PWTable<ExactRing>& table, const std::string& path);

}  // namespace qsph
