#pragma once

#include "aw/core.hpp"
#include "aw/gyd.hpp"
#include "aw/snf.hpp"

// Dictionaries between cyclic-quiver dimension data (v,w), sigma-sequences,
// block weights, and affine weights with exact degree coordinates.
//
// The cyclic quiver has vertex set {1,...,k} with cyclic arrows; index k is
// the affine vertex (carrying omega_0).  All length-k vectors here (v, w,
// weight coefficients w') are stored in that order: vertex i at position i,
// affine vertex last.  Under the McKay correspondence vertex i carries the
// character i of the cyclic group of order k, the affine vertex character 0.
//
// w' = sum w_i omega_i - sum v_i alpha_i is computed through the affine
// Cartan matrix of the cycle.  Determinant triviality means
// w' in N omega_0 + Z[I_0^0], where I_0^0 is the complement among finite
// vertices of the block partial sums I_0^+.  Feasible w' unfold into integer
// sequences sigma with sigma_i - sigma_{i+1} = w'_i whose blocks transpose
// into the level-k_p diagrams lambda^(p); concatenating the transposed
// blocks is affine-Weyl conjugate to the transpose of the block sum.

namespace aw {

struct QuiverData {
  Vec v;
  Vec w;
};

struct BlockPartition {
  Vec blocks;  // (k_1,...,k_n), all >= 1

  Int k() const { return vec_sum(blocks); }
  // Partial sums k_1, k_1+k_2, ..., k_1+...+k_{n-1}.
  Vec i0_plus() const;
  // {1,...,k-1} minus i0_plus().
  Vec i0_zero() const;
};

struct WeightCoeffs {
  Vec coeffs;  // (w'_1,...,w'_k), affine coordinate last
};

struct SigmaResult {
  IntSeq sigma;           // level N, length k
  bool feasible = false;  // dominance on I_0^0 and per-block width <= N
  std::string violation;  // empty when feasible
};

BlockPartition validate_blocks(Vec blocks);
QuiverData validate_quiver(Vec v, Vec w);

// w'_i = w_i - 2 v_i + v_{i-1} + v_{i+1}, cyclic indices.
WeightCoeffs wprime(const QuiverData& q);

// True iff w' - N e_affine lies in the integer span of the affine Cartan
// columns at I_0^0 (N = sum w_i).
bool check_uslovie(const QuiverData& q, const BlockPartition& p);

// The unique sigma with sigma_i - sigma_{i+1} = w'_i (i < k) and first-block
// sum zero.  Requires check_uslovie; throws UsloviePrecondition if any block
// sum fails to vanish.  Dominance/width violations only flag the result.
SigmaResult sigma_sequence(const QuiverData& q, const BlockPartition& p);

// Transposes of the sigma blocks: level-k_p diagrams with N parts each.
std::vector<Gyd> lambda_blocks(const IntSeq& sigma, const BlockPartition& p, Int n_parts);

// Rebuilds tau from the differences tau_i - tau_{i+1} = w_i and sum zero,
// then transposes.  NonIntegralTau when sum(i * w_i) is not divisible by k;
// LevelExceeded when tau has width > N.
Gyd mu_bar_from_w(const Vec& w, Int n_parts);

// Concatenation of the transposed diagrams is conjugate to the transpose of
// the componentwise sum; returns the verdict (always true for valid input).
bool verify_otvr(const std::vector<Gyd>& lams);

// -(2d + (mu,mu) - (lam,lam)) / (2k).
Rat mu_degree(Int k, const Gyd& mu_bar, const Gyd& lam_bar, Int d);

// (k, nu_bar, (2d' - 2d - (nu,nu) + (lam,lam)) / (2k)).
AffineWeight nu_weight(Int d, Int d_prime, const Gyd& nu_bar, const Gyd& lam_bar, Int k);

// Tensor product of cyclic-group classes: reduce both exponent multisets mod
// the common level, form all pairwise sums, lift to the unique sum-zero
// diagram of width <= level.
Gyd tensor_class(const Gyd& a, const Gyd& b);

// Full affine tensor weight: finite part tensor_class(mu,mu'), degree
// m N' + m' N + bracket/(2k) with the bracket over the block diagrams.
AffineWeight tensor_mu(const AffineWeight& mu, const AffineWeight& mu_p,
                       const std::vector<Gyd>& lams, const std::vector<Gyd>& lams_p);

// Character-vector convolution: w'' = w (*) w',
// v'' = v (*) w' + v' (*) w + shift_+1(v (*) v') + shift_-1(v (*) v') - 2 v (*) v'.
// NegativeDimension if v'' acquires a negative entry.
QuiverData tensor_quiver(const QuiverData& q, const QuiverData& q_p);

// The quotient Z^{k-1} / Z[I_0^0]: cokernel of the finite Cartan columns of
// sl(k) indexed by I_0^0.  For the one-block partition this is Z/k.
GroupShape picard_group(Int k, const BlockPartition& p);

// Class of w' in that quotient, affine coordinate dropped.  Zero exactly
// when check_uslovie holds.
GroupElement det_class(const QuiverData& q, const BlockPartition& p);

}  // namespace aw
