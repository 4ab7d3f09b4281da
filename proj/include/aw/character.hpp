#pragma once

#include "aw/core.hpp"
#include "aw/gyd.hpp"

#include <map>
#include <utility>
#include <vector>

// Truncated characters of integrable highest-weight modules of affine
// sl(N), exact to a chosen depth.
//
// A module weight is a pair (finite sum-zero tuple, depth), where depth is
// the drop of the delta-coordinate below the module's top weight; the top
// sits at depth 0 with multiplicity 1.  Multiplicities come from the
// Freudenthal recursion over the affine root system: real roots are
// (finite root, n >= 0) with multiplicity 1, imaginary roots (0, n >= 1)
// with multiplicity N-1.  Products of characters convolve layers whose
// depths sum inside the bound, so every reported multiplicity is exact.
//
// decompose peels a character into irreducible tops: walking depths
// upward and finite parts lexicographically downward visits each remaining
// maximal weight before anything it dominates, so greedy subtraction of
// full characters is well defined; a negative intermediate multiplicity
// proves the input was not a character.

namespace aw {

// Map (depth, finite weight) -> multiplicity, truncated at depth_bound.
// Iteration order of the map (depth ascending, then lexicographic) is the
// canonical serialization order.
struct WeightCharacter {
  Int level = 0;
  Int depth_bound = 0;
  Rat top_degree = 0;  // degree coordinate of the depth-0 top weight
  std::map<std::pair<Int, Vec>, Int> entries;
};

// Multiplicities of irreducible summands, keyed like character entries by
// (depth of the summand's top below the ambient top, finite part).
// level = 0 marks a finite-type table (depth is always 0 there).
struct DecompositionTable {
  Int level = 0;
  Int depth_bound = 0;
  Rat top_degree = 0;
  std::map<std::pair<Int, Vec>, Int> entries;
};

// All weights of L(lam) to the given depth; NotDominant unless the finite
// part is weakly decreasing, sum zero, and of width <= level.
WeightCharacter weight_multiplicities(const AffineWeight& lam, Int depth_bound);

// Product character of L(lams[0]) (x) ... at level sum(levels); factors must
// share the parts count.  threads > 1 parallelizes the convolution without
// changing the result.
WeightCharacter tensor_character(const std::vector<AffineWeight>& lams, Int depth_bound,
                                 int threads = 1);

// Greedy peeling of a truncated character into irreducible multiplicities;
// NegativeMultiplicity signals that the input was not a character.
DecompositionTable decompose(const WeightCharacter& ch, Int depth_bound);

// Finite-type sl(N) tensor multiplicities by iterated Littlewood-Richardson
// counting; the depth-0 cross-check for decompose.
DecompositionTable lr_finite(const std::vector<Gyd>& lams);

struct LevelRankRow {
  Int depth = 0;
  Vec weight;       // summand of the primal (rank N) decomposition
  Int mult = 0;
  Vec dual_weight;  // its transpose on the rank-k side
  Int dual_mult = 0;
  bool agree = false;
};

struct LevelRankUnmatched {
  Int depth = 0;
  Vec weight;  // dual-side summand never produced by a primal transpose
  Int mult = 0;
};

struct LevelRankReport {
  Int rank = 0;       // N, parts count of the input diagrams
  Int dual_rank = 0;  // k, total of the input levels
  Vec dual_levels;    // chosen levels of the transposed factors
  bool levels_match = false;  // dual levels sum back to N
  bool all_agree = true;
  std::vector<LevelRankRow> rows;
  std::vector<LevelRankUnmatched> unmatched_dual;
};

// Decomposes the same tensor product on both sides of the transposition
// dictionary (rank N at levels k_p against rank k with transposed weights)
// and reports the multiplicity comparison entry by entry.
LevelRankReport level_rank_check(const std::vector<Gyd>& lams, Int depth_bound);

}  // namespace aw
