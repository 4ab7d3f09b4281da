#pragma once

#include "aw/core.hpp"
#include "aw/quiver.hpp"

#include <string>
#include <vector>

// Deformation and stability parameters for the partial resolutions of the
// cyclic Kleinian surface, all over exact rationals.
//
// A deformation point assigns a rational a_p to each block of the partition
// subject to k_1 a_1 + ... + k_n a_n = 0; expanding a_p to k_p repeated
// values gives (b_1,...,b_k).  The surface deforms xy = z^k into
// xy = prod (z - a_p)^{k_p}, whose singularities are A_{m-1} points at the
// roots of multiplicity m.  Stability vectors live in the hyperplane
// orthogonal to delta = (1,...,1).

namespace aw {

struct DeformationPoint {
  BlockPartition partition;
  std::vector<Rat> a;
};

struct StabilityVector {
  std::vector<Rat> entries;
};

struct SingularPoint {
  Rat root;
  Int type;  // m-1 for a root of multiplicity m; 0 marks a smooth point
};

struct FamilyEquation {
  Vec weights;                    // of the ambient weighted projective space
  std::vector<Rat> coefficients;  // of x^j w^{k-j}, ascending j
  std::string infinity;           // the divisor removed from the affine chart
};

// Checks lengths and the constraint sum k_p a_p = 0 (ConstraintViolated).
DeformationPoint validate_deformation_point(BlockPartition p, std::vector<Rat> a);

// zeta(i) = b_i - b_{i+1} with cyclic wraparound; sums to zero.
StabilityVector zeta_complex(const DeformationPoint& dp);

// 0 on I_0^0, 1 on I_0^+, 1-n at the affine index; orthogonal to delta.
StabilityVector zeta_real_bullet(const BlockPartition& p);

// zeta_real_bullet shifted componentwise by sign * eps, 0 < eps < 1.
StabilityVector zeta_real_pm(const BlockPartition& p, const Rat& eps, int sign);

// Coefficients of prod (z - a_p)^{k_p}, constant term first, leading 1.
std::vector<Rat> surface_poly(const DeformationPoint& dp);

// Distinct roots in order of first appearance with their A-type labels.
std::vector<SingularPoint> singular_locus(const DeformationPoint& dp);

// The compactified family yz = prod (x - a_p w)^{k_p} in P(2,k,k,2);
// requires k even (OddLevel).
FamilyEquation family_equation(const DeformationPoint& dp);

// Indices of the exceptional curves kept by the partial blow-down: I_0^+.
Vec blowdown_kept_curves(const BlockPartition& p);

}  // namespace aw
