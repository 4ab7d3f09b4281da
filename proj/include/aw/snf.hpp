#pragma once

#include "aw/core.hpp"

#include <vector>

// Smith normal form over the integers, with the lattice quotients built on
// top of it: integer solvability of M x = b, cokernel shape, and the class
// of a vector in the cokernel.
//
// The Picard-type quotient here is P / Z[I_0^0] where P = Z^{k-1} is spanned
// by the finite-vertex weight classes and Z[I_0^0] is the image of the
// finite Cartan columns indexed by I_0^0.  An element is trivial in the
// quotient iff all torsion coordinates vanish mod their invariant factors
// and all free coordinates vanish.

namespace aw {

// Dense integer matrix, row-major, arbitrary-precision entries.
struct IMat {
  std::size_t rows = 0;
  std::size_t cols = 0;
  std::vector<BigInt> a;

  IMat() = default;
  IMat(std::size_t r, std::size_t c) : rows(r), cols(c), a(r * c, 0) {}
  BigInt& at(std::size_t i, std::size_t j) { return a[i * cols + j]; }
  const BigInt& at(std::size_t i, std::size_t j) const { return a[i * cols + j]; }
};

struct SnfResult {
  IMat u;  // rows x rows, |det| = 1
  IMat d;  // rows x cols, diagonal, d_1 | d_2 | ..., all >= 0
  IMat v;  // cols x cols, |det| = 1
};

// U M V = D with unimodular U, V and nonnegative divisibility-chain
// diagonal.  The factorization is re-multiplied and checked before return.
SnfResult smith_normal_form(const IMat& m);

// Does M x = b admit an integer solution?
bool solvable(const IMat& m, const std::vector<BigInt>& b);

struct GroupShape {
  Int free_rank = 0;
  Vec torsion;  // invariant factors >= 2, divisibility order
};

struct GroupElement {
  Vec torsion_coords;  // reduced mod the matching invariant factor
  Vec free_coords;

  bool is_zero() const;
};

// Cokernel Z^rows / col-span(M).
GroupShape cokernel(const IMat& m);

// Class of b in the cokernel, coordinates matching cokernel(m).
GroupElement cokernel_class(const IMat& m, const std::vector<BigInt>& b);

}  // namespace aw
