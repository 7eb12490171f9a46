// spectral.hpp — truncated spectral triple: Dirac operator, weighted traces,
// multiplication operators, kernel index, zeta residues and decay probes.
// SPDX-License-Identifier: MIT
#pragma once

#include <Eigen/Dense>
#include <array>
#include <map>
#include <memory>
#include <stdexcept>
#include <string>
#include <vector>

#include "qsph/algebra.hpp"
#include "qsph/half_int.hpp"
#include "qsph/peter_weyl.hpp"
#include "qsph/rings.hpp"

namespace qsph {

// The Hilbert space is a doubled sum of matrix-coefficient columns: component
// +1 holds the vectors with s = +1/2, component -1 those with s = -1/2, and l
// runs over half-odd-integers up to the cutoff.  Basis vectors are the
// normalized xi^l_{r,s} = t^l_{r,s} / ||t^l_{r,s}||.
struct SpectralBasisVec {
  HalfInt l;
  HalfInt r;
  int comp = +1;  // +1 <-> s = +1/2, -1 <-> s = -1/2

  HalfInt s() const { return HalfInt::from_twice(comp); }
  friend auto operator<=>(const SpectralBasisVec&, const SpectralBasisVec&) = default;
};

class TruncatedHilbert {
 public:
  TruncatedHilbert(HalfInt lambda, double q);

  HalfInt lambda() const { return lambda_; }
  HalfInt l_top() const { return l_top_; }  // largest half-odd l <= lambda
  double q() const { return q_; }
  const NumericRing& ring() const { return ring_; }

  long dim() const { return static_cast<long>(basis_.size()); }
  long comp_dim() const { return comp_dim_; }
  const std::vector<SpectralBasisVec>& basis() const { return basis_; }

  // position of (l, r, comp) in the basis ordering, or -1 when absent
  long index_of(HalfInt l, HalfInt r, int comp) const;

  // numeric norm ||t^l_{r,s}|| (independent of s)
  double pw_norm(HalfInt l, HalfInt r) const;

  // shared lazily-built numeric expansion table (mutable so operator assembly
  // can extend it; parallel sections must call ensure_levels first)
  NumericPWTable& table() const { return *table_; }

 private:
  HalfInt lambda_;
  HalfInt l_top_;
  double q_;
  NumericRing ring_;
  std::vector<SpectralBasisVec> basis_;
  std::map<std::pair<long, long>, long> lookup_;  // (two_l, two_r) -> plus index
  long comp_dim_ = 0;
  std::shared_ptr<NumericPWTable> table_;
};

// numeric copy of an exact element at the ring's value of s
NumericElem to_numeric(const ExactElem& x, const NumericRing& ring);

// largest total degree over the monomials of x (0 for the zero element)
long elem_degree(const NumericElem& x);
long elem_degree(const ExactElem& x);

// diagonal data ---------------------------------------------------------

// Delta_R^{-1} weights q^{-2r} per basis vector
Eigen::VectorXd op_weight(const TruncatedHilbert& h);
// grading: +1 on the + component, -1 on the - component
Eigen::VectorXd op_gamma_diag(const TruncatedHilbert& h);
// singular values of D: [l+1/2]_q per basis vector
Eigen::VectorXd op_d_singular(const TruncatedHilbert& h);
// dense symmetric D (block off-diagonal, pairs the two components)
Eigen::MatrixXd op_D(const TruncatedHilbert& h);

// weighted trace Psi_R(T) = sum_i q^{-2 r_i} T_{ii}
double weighted_trace(const TruncatedHilbert& h, const Eigen::MatrixXd& op);

// multiplication operators ----------------------------------------------

// compression of left multiplication by x to the truncated space, assembled
// column-by-column from the closed-form generator ladders.  Every entry is
// the exact inner product <xi_i, x xi_j>; note that products of compressions
// still differ from compressed products within deg/2 of the cutoff.
Eigen::MatrixXd left_mult(const TruncatedHilbert& h, const NumericElem& x);
// serial reference implementation (same contract, no OpenMP)
Eigen::MatrixXd left_mult_serial(const TruncatedHilbert& h, const NumericElem& x);

// flags[i] = 1 when basis vector i sits within deg/2 of the cutoff
std::vector<char> edge_flags(const TruncatedHilbert& h, long deg);

// commutator identity -----------------------------------------------------

struct CommutatorReport {
  double max_residual = 0.0;           // || [D, M_beta] - rhs ||_max, all entries
  double max_interior_residual = 0.0;  // same over interior rows and columns
  long interior_dim = 0;
  TwistSign twist = kPinnedTwist;
};

// checks [D, M_beta] == [[0, q^{-1/2} M_{del_e beta}], [q^{+1/2} M_{del_f beta}, 0]]
CommutatorReport eqn_podles_com_check(const TruncatedHilbert& h, const ExactElem& beta,
                                      TwistSign twist = kPinnedTwist);

// kernel index ------------------------------------------------------------

struct KernelIndexOptions {
  double tau = 1e-7;            // singular values below tau count as kernel
  double gap_factor = 1e3;      // smallest non-kernel sigma must exceed tau * gap_factor
  double edge_mass_tol = 1e-6;  // kernel vectors with more mass on the top two levels are rejected
};

struct KernelIndexReport {
  HalfInt n;
  HalfInt lambda;
  double q = 0.0;
  double value = 0.0;     // weighted index N_+ - N_-
  double expected = 0.0;  // closed-form evaluation
  double abs_err = 0.0;
  double n_plus_weight = 0.0;
  double n_minus_weight = 0.0;
  long n_plus_count = 0;
  long n_minus_count = 0;
  long rejected_edge_vectors = 0;
  double svd_gap = 0.0;  // smallest retained singular value
};

// weighted kernel index of the compressed twisted Dirac operator
KernelIndexReport kernel_index(HalfInt n, HalfInt lambda, double q,
                               const KernelIndexOptions& opts = {});

// zeta residues -----------------------------------------------------------

struct ZetaReport {
  double q = 0.0;
  double residue = 0.0;  // fitted c_{-1}, averaged over the two components
  double residue_plus = 0.0;
  double residue_minus = 0.0;
  double c0 = 0.0;  // regular part of the fit on the + component
  double c1 = 0.0;
  double expected = 0.0;  // (q^{-1} - q) / (2 ln q^{-1}) * counit(beta)
  double abs_err = 0.0;
  std::array<double, 4> sample_r{};
  std::array<double, 4> sample_plus{};
  std::array<double, 4> sample_minus{};
  long max_terms = 0;  // longest series length among the samples
};

// residue at r = -1/2 of r -> Tr(Delta_R^{-1} (1 pm gamma)/2 beta |D|^{-3-2r}),
// by Laurent fit over the sample points r in {-0.3, -0.35, -0.4, -0.45}.
// beta must lie in the sphere subalgebra.
ZetaReport zeta_residue(const ExactElem& beta, double q, double precision = 1e-12);

// normalized ladder coefficients <xi^{l+1/2}_{r-1/2,s+1/2}, b xi^l_{r,s}> etc.
// (raising parts; lowering parts follow from b* = -q c and c* = -q^{-1} b)
long double ladder_b_plus(double q, HalfInt l, HalfInt r, HalfInt s);
long double ladder_b_minus(double q, HalfInt l, HalfInt r, HalfInt s);
long double ladder_c_plus(double q, HalfInt l, HalfInt r, HalfInt s);
long double ladder_c_minus(double q, HalfInt l, HalfInt r, HalfInt s);
// a shifts (r, s) down by 1/2 each, d shifts them up; a* = d ties the two
long double ladder_a_plus(double q, HalfInt l, HalfInt r, HalfInt s);
long double ladder_a_minus(double q, HalfInt l, HalfInt r, HalfInt s);
long double ladder_d_plus(double q, HalfInt l, HalfInt r, HalfInt s);
long double ladder_d_minus(double q, HalfInt l, HalfInt r, HalfInt s);

// diagonal matrix element <xi^l_{r,s}, (bc)^k xi^l_{r,s}> via the tridiagonal
// action of bc on the l-chain at fixed (r, s); supported for 0 <= k <= 8
long double bc_power_diag(double q, long k, HalfInt l, HalfInt r, HalfInt s);

// decay probes -------------------------------------------------------------

struct DimensionProbeReport {
  double s_exponent = 0.0;
  bool converged = false;
  double value = 0.0;  // partial sum at the last level used
  double tail_bound = 0.0;
  long levels_used = 0;
};

// partial sums of Psi_R((1 + D^2)^{-s/2}); converges iff s > 2
DimensionProbeReport spectral_dimension_probe(double q, double s_exponent, double tol = 1e-10,
                                              long max_levels = 20000);

struct PdcReport {
  double q = 0.0;
  HalfInt lambda;
  double norm_at_zero = 0.0;
  std::vector<double> im_z;
  std::vector<double> norms;
  double fit_a = 0.0;  // ||M(iy)|| ~ a + b y
  double fit_b = 0.0;
  double max_fit_residual = 0.0;
  bool pass = false;
};

// modular-twisted boundedness probe: M(z) = (|D|^{-z} dbeta - dbeta chi^z |D|^{-z}) |D|^{z+1}
// sampled along z = iy, y in [0, im_max], with chi = diag(q^{-1}, q)
PdcReport pdc_check(const TruncatedHilbert& h, const ExactElem& beta, int n_samples = 11,
                    double im_max = 20.0);

struct ResolventReport {
  double r = 0.0;
  double route_closed = 0.0;    // Gamma(1/2) Gamma(r+1/2) / (2 Gamma(r+1)) weighted trace
  double route_integral = 0.0;  // direct s-integral of the resolvent trace
  double abs_err = 0.0;
};

// two independent evaluations of the degree-zero resolvent pairing at integer r
ResolventReport resolvent_phi0_numeric(const TruncatedHilbert& h, const ExactElem& a0, double r);

}  // namespace qsph
