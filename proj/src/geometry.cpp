#include "aw/geometry.hpp"

#include <stdexcept>
#include <utility>

namespace aw {

namespace {

// b = (a_1 repeated k_1 times, ..., a_n repeated k_n times)
std::vector<Rat> expand_blocks(const DeformationPoint& dp) {
  std::vector<Rat> b;
  b.reserve(static_cast<std::size_t>(dp.partition.k()));
  for (std::size_t p = 0; p < dp.a.size(); ++p)
    for (Int r = 0; r < dp.partition.blocks[p]; ++r) b.push_back(dp.a[p]);
  return b;
}

void require_constraint(const DeformationPoint& dp) {
  Rat total = 0;
  for (std::size_t p = 0; p < dp.a.size(); ++p) total += Rat(dp.partition.blocks[p]) * dp.a[p];
  if (total != 0)
    throw domain_error("ConstraintViolated",
                       "weighted sum of deformation values must vanish");
}

}  // namespace

DeformationPoint validate_deformation_point(BlockPartition p, std::vector<Rat> a) {
  if (a.size() != p.blocks.size())
    throw domain_error("LengthMismatch",
                       "deformation point has " + std::to_string(a.size()) + " values for " +
                           std::to_string(p.blocks.size()) + " blocks");
  DeformationPoint dp{std::move(p), std::move(a)};
  require_constraint(dp);
  return dp;
}

StabilityVector zeta_complex(const DeformationPoint& dp) {
  require_constraint(dp);
  std::vector<Rat> b = expand_blocks(dp);
  std::size_t k = b.size();
  std::vector<Rat> z(k);
  for (std::size_t i = 0; i < k; ++i) z[i] = b[i] - b[(i + 1) % k];
  return StabilityVector{std::move(z)};
}

StabilityVector zeta_real_bullet(const BlockPartition& p) {
  std::size_t k = static_cast<std::size_t>(p.k());
  std::vector<Rat> z(k, Rat(0));
  for (Int j : p.i0_plus()) z[static_cast<std::size_t>(j - 1)] = 1;
  z[k - 1] = Rat(1) - Rat(static_cast<Int>(p.blocks.size()));
  return StabilityVector{std::move(z)};
}

StabilityVector zeta_real_pm(const BlockPartition& p, const Rat& eps, int sign) {
  if (sign != 1 && sign != -1) throw std::invalid_argument("sign must be +1 or -1");
  if (eps <= 0 || eps >= 1)
    throw domain_error("EpsOutOfRange", "eps must lie strictly between 0 and 1");
  StabilityVector z = zeta_real_bullet(p);
  for (Rat& x : z.entries) x += sign * eps;
  return z;
}

std::vector<Rat> surface_poly(const DeformationPoint& dp) {
  require_constraint(dp);
  std::vector<Rat> coeff{Rat(1)};  // constant term first
  for (std::size_t p = 0; p < dp.a.size(); ++p) {
    for (Int r = 0; r < dp.partition.blocks[p]; ++r) {
      // multiply by (z - a_p)
      std::vector<Rat> next(coeff.size() + 1, Rat(0));
      for (std::size_t j = 0; j < coeff.size(); ++j) {
        next[j] -= dp.a[p] * coeff[j];
        next[j + 1] += coeff[j];
      }
      coeff = std::move(next);
    }
  }
  return coeff;
}

std::vector<SingularPoint> singular_locus(const DeformationPoint& dp) {
  require_constraint(dp);
  std::vector<SingularPoint> out;
  for (std::size_t p = 0; p < dp.a.size(); ++p) {
    bool found = false;
    for (SingularPoint& s : out) {
      if (s.root == dp.a[p]) {
        s.type += dp.partition.blocks[p];
        found = true;
        break;
      }
    }
    if (!found) out.push_back(SingularPoint{dp.a[p], dp.partition.blocks[p]});
  }
  for (SingularPoint& s : out) s.type -= 1;  // multiplicity m labels A_{m-1}
  return out;
}

FamilyEquation family_equation(const DeformationPoint& dp) {
  Int k = dp.partition.k();
  if (k % 2 != 0)
    throw domain_error("OddLevel", "the compactified family needs even k, got " +
                                       std::to_string(k));
  // Homogenizing prod (z - a_p)^{k_p} to degree k in (x,w) reuses the
  // one-variable coefficients: the x^j w^{k-j} coefficient is coeff[j].
  FamilyEquation eq;
  eq.weights = Vec{2, k, k, 2};
  eq.coefficients = surface_poly(dp);
  eq.infinity = "w=0";
  return eq;
}

Vec blowdown_kept_curves(const BlockPartition& p) { return p.i0_plus(); }

}  // namespace aw
