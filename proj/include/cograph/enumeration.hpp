#pragma once

#include <cstddef>
#include <vector>

#include <gmpxx.h>

#include "cograph/cotree.hpp"
#include "cograph/series.hpp"

namespace cograph {

// Labeled class: L = z + e^L - 1 - L counts trees with internal arity >= 2
// (decorations of a canonical cotree are fixed by the root's), M = e^L - 1 =
// 2L - z counts labeled cographs.

/// l_0..l_N (l_0 = 0), by the integer recurrence behind L = z + e^L - 1 - L.
std::vector<mpz_class> labeled_tree_counts(std::size_t N);
/// m_n = n! [z^n] M: 1 for n = 1, 2 l_n for n >= 2.
std::vector<mpz_class> labeled_cograph_counts(std::size_t N);

TruncatedSeries series_L(std::size_t N);
/// Builds M both as e^L - 1 and as 2L - z; throws std::logic_error if they
/// disagree.
TruncatedSeries series_M(std::size_t N);

struct MarkedLabeledSeries {
  TruncatedSeries Lprime;  ///< one blossom
  TruncatedSeries Lbullet; ///< one marked leaf, z L'
  TruncatedSeries Leven;   ///< blossom at even depth
  TruncatedSeries Lodd;    ///< blossom at odd depth
};
/// Closed forms L^even = 1/(e^L (2 - e^L)), L^odd = (e^L - 1) L^even. All
/// members have order N.
MarkedLabeledSeries series_marked_labeled(std::size_t N);

/// Solution of S = 1 + S B (B(0) = 0), order by order.
TruncatedSeries star_fixed_point(const TruncatedSeries& B);
/// Solution of E = 1 + O B, O = E B (B(0) = 0), order by order.
std::pair<TruncatedSeries, TruncatedSeries> even_odd_fixed_point(const TruncatedSeries& B);

/// Generating function of (labeled canonical cotree, k-tuple of distinct
/// leaves inducing t0), order N. For k >= 2 this is
/// L' e^{L n_v} (L^.)^k (L^odd)^{n_=} (L^even)^{n_!=}; a single leaf gives z M'.
TruncatedSeries series_Mt0(const Cotree& t0, std::size_t N);

// Unlabeled class: U(z) = z + exp(sum_r U(z^r)/r) - 1 - U(z) is the ordinary
// generating function of unlabeled trees and the exponential one of
// (labeled tree, root-preserving automorphism) pairs.

/// u_0..u_N via the Euler transform n a_n = sum_k c_k a_{n-k}.
std::vector<mpz_class> unlabeled_tree_counts(std::size_t N);
/// v_n: 1 for n = 1, 2 u_n for n >= 2.
std::vector<mpz_class> unlabeled_cograph_counts(std::size_t N);

struct UnlabeledSeries {
  TruncatedSeries U;
  TruncatedSeries D;  ///< exp(sum_{r >= 2} U(z^r)/r) - 1
  TruncatedSeries expU;
};
/// Resolves U = z + exp_{>=2}(U) + D exp(U) order by order (D only needs
/// U at orders n/2 and below). Cross-checked against unlabeled_tree_counts.
UnlabeledSeries series_unlabeled(std::size_t N);
TruncatedSeries series_U(std::size_t N);
TruncatedSeries series_V(std::size_t N);
TruncatedSeries series_D(std::size_t N);

struct MarkedUnlabeledSeries {
  TruncatedSeries Uprime;
  TruncatedSeries Ubullet;
  TruncatedSeries Ustar;  ///< blossom fixed by the automorphism
  TruncatedSeries Ueven;
  TruncatedSeries Uodd;
};
/// U* and the even/odd pair solved from their fixed-point equations with
/// B = exp_{>=1}(U) + D exp(U). All members have order N.
MarkedUnlabeledSeries series_marked_unlabeled(std::size_t N);

/// Unlabeled counterpart of series_Mt0: U* (2U + 1 - z)^{n_v} (U^.)^k
/// (U^odd)^{n_=} (U^even)^{n_!=}; a single leaf gives z V'.
TruncatedSeries series_Vt0(const Cotree& t0, std::size_t N);

/// 2 ln 2 - 1.
long double rho_labeled();

/// Bisection for 2 U_N(z) - z = 1 on (0, 0.35) with the order-N truncation of
/// U. Throws InsufficientOrder when there is no sign change.
long double rho_unlabeled(std::size_t N, long double tol = 1e-12L);

/// Radius of U to long double accuracy. At the singularity the implicit
/// equation gives U(rho) = (1 + rho)/2 and e^U (1 + D) = 2, so rho solves
/// e^{(1+rho)/2} (1 + D(rho)) = 2. D has radius sqrt(rho), so its truncation
/// converges geometrically there.
long double rho_unlabeled_precise();

struct LimitLaw {
  long double rho = 0;
  /// probabilities[j - 1] = pi_j.
  std::vector<long double> probabilities;
  long double tail = 0;
};

/// pi_j = rho^j m_j / j!, j = 1..jmax.
LimitLaw pi_distribution(std::size_t jmax);
/// pi^u_j = rho_u^j v_j, j = 1..jmax.
LimitLaw pi_u_distribution(std::size_t jmax);

/// Exact law of kappa for a uniform connected labeled cograph of size n,
/// index j = 0..n-1.
std::vector<long double> kappa_law_labeled(std::size_t n);
std::vector<long double> kappa_law_unlabeled(std::size_t n);

}  // namespace cograph
