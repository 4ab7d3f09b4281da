#pragma once

#include "aw/core.hpp"

// Generalized Young diagrams and the affine Weyl group action on integer
// sequences.
//
// A generalized Young diagram (GYD) is a weakly decreasing integer tuple
// (d_1 >= ... >= d_P) with d_1 + ... + d_P = 0 and d_1 - d_P <= level.
// Such tuples with P = N parts at level k parametrize the level-k dominant
// weights of affine sl(N) that we work with; the transpose map exchanges
// (N parts, level k) with (k parts, level N) and is an involution.
//
// The affine Weyl group at level N acts on length-k integer sequences by
// permutations together with paired shifts (s_i + N, s_j - N).  Every orbit
// contains a unique weakly decreasing representative of width <= N; two
// sequences are conjugate iff they have equal sums and equal multisets of
// residues mod N.

namespace aw {

struct Gyd {
  Vec parts;
  Int level = 0;

  bool operator==(const Gyd& o) const { return parts == o.parts && level == o.level; }
};

struct IntSeq {
  Vec entries;
  Int level = 0;  // the N for the paired +-N shift moves

  bool operator==(const IntSeq& o) const { return entries == o.entries && level == o.level; }
};

struct AffineWeight {
  Int level = 0;
  Gyd finite;   // finite.level == level
  Rat degree;   // exact; denominator divides 2*level
};

// Checks the three diagram invariants; throws NotDecreasing, NonzeroSum or
// LevelExceeded naming the violated one.
Gyd validate_gyd(Vec parts, Int level);

// Transpose of a diagram with P parts at level L: the diagram with L parts
// at level P whose entries are, for r the unique index with d_r > 0 >= d_{r+1},
//   r with multiplicity d_r,
//   j with multiplicity d_j - d_{j+1}        for 1 <= j < r,
//   0 with multiplicity L + d_P - d_1,
//   j with multiplicity d_{P+j} - d_{P+j+1}  for r-P < j < 0,
//   r-P with multiplicity -d_{r+1}.
// The zero diagram maps to the zero diagram.
Gyd transpose(const Gyd& d);

// Standard bilinear form sum a_i b_i on equal-length tuples (roots have
// square length 2).
Int pairing(const Vec& a, const Vec& b);
inline Int pairing(const Gyd& a, const Gyd& b) { return pairing(a.parts, b.parts); }

// <lambda, 2 rho-check> = sum d_i (N + 1 - 2i); dimension of the associated
// orbit.
Int orbit_dimension(const Gyd& d);

// Half of orbit_dimension of the componentwise sum; may be a half-integer.
Rat convolution_dimension(const Gyd& d1, const Gyd& d2, const Gyd& d3);

// The unique weakly decreasing sequence of width <= N in the orbit of s:
// sort descending, then while first - last > N replace (first, last) by
// (first - N, last + N) and resort.  Terminates because the sum of squares
// strictly decreases.
IntSeq dominant_representative(IntSeq s);

// Orbit equivalence, decided by the invariant pair (total sum, residue
// multiset mod N) and cross-checked against equality of canonical forms.
bool waff_conjugate(const IntSeq& s1, const IntSeq& s2);

}  // namespace aw
