#include <doctest.h>

#include <algorithm>
#include <map>
#include <set>

#include "aw/gyd.hpp"

using namespace aw;

namespace {

/*
 * Enumerate every weakly decreasing sum-zero tuple with the given number of
 * parts whose width (first part minus last part) is at most the level.  All
 * entries of such a tuple lie in [-level, level], so a bounded odometer over
 * decreasing tuples terminates.
 */
void collect_gyds(Int parts, Int level, Vec& cur, std::vector<Gyd>& out) {
  if (static_cast<Int>(cur.size()) == parts) {
    if (vec_sum(cur) != 0) return;
    if (!cur.empty() && cur.front() - cur.back() > level) return;
    out.push_back(Gyd{cur, level});
    return;
  }
  Int hi = cur.empty() ? level : cur.back();
  for (Int x = hi; x >= -level; --x) {
    cur.push_back(x);
    collect_gyds(parts, level, cur, out);
    cur.pop_back();
  }
}

std::vector<Gyd> all_gyds(Int parts, Int level) {
  std::vector<Gyd> out;
  Vec cur;
  collect_gyds(parts, level, cur, out);
  return out;
}

}  // namespace

TEST_CASE("validate_gyd accepts decreasing sum-zero tuples within the level") {
  Gyd g = validate_gyd({2, 0, -2}, 4);
  CHECK(g.parts == Vec{2, 0, -2});
  CHECK(g.level == 4);
  CHECK(validate_gyd({}, 1).parts.empty());
  CHECK(validate_gyd({0, 0, 0}, 1).parts == Vec{0, 0, 0});
}

TEST_CASE("validate_gyd rejects malformed diagrams with named errors") {
  CHECK_THROWS_WITH_AS(validate_gyd({0, 1}, 2),
                       "NotDecreasing: parts must be weakly decreasing at index 1",
                       domain_error);
  CHECK_THROWS_WITH_AS(validate_gyd({1, 0}, 2), "NonzeroSum: parts must sum to zero",
                       domain_error);
  CHECK_THROWS_WITH_AS(validate_gyd({1, 0, -1}, 1), "LevelExceeded: width 2 exceeds level 1",
                       domain_error);
  CHECK_THROWS_WITH_AS(validate_gyd({0, 0}, 0), "LevelExceeded: level must be a positive integer",
                       domain_error);
  CHECK_THROWS_WITH_AS(validate_gyd({0, 0}, -3),
                       "LevelExceeded: level must be a positive integer", domain_error);
}

TEST_CASE("transpose swaps the frozen example pair") {
  Gyd a{{1, 0, -1}, 2};
  Gyd b{{1, -1}, 3};
  CHECK(transpose(a) == b);
  CHECK(transpose(b) == a);
}

TEST_CASE("transpose exchanges parts count and level") {
  Gyd g{{2, 1, 0, -1, -2}, 5};
  Gyd t = transpose(g);
  CHECK(t.parts.size() == 5);
  CHECK(t.level == 5);
  CHECK(vec_sum(t.parts) == 0);
  CHECK(std::is_sorted(t.parts.begin(), t.parts.end(), std::greater<Int>()));

  Gyd h{{3, -1, -2}, 6};
  Gyd th = transpose(h);
  CHECK(th.parts.size() == 6);
  CHECK(th.level == 3);
}

TEST_CASE("transpose sends zero diagrams to zero diagrams") {
  Gyd z{{0, 0, 0}, 2};
  Gyd t = transpose(z);
  CHECK(t.parts == Vec{0, 0});
  CHECK(t.level == 3);
}

TEST_CASE("transpose is an involution on small diagrams") {
  for (Int parts = 1; parts <= 3; ++parts) {
    for (Int level = 1; level <= 3; ++level) {
      for (const Gyd& g : all_gyds(parts, level)) {
        Gyd t = transpose(g);
        CHECK(validate_gyd(t.parts, t.level) == t);
        CHECK(transpose(t) == g);
      }
    }
  }
}

TEST_CASE("pairing is the coordinatewise dot product") {
  CHECK(pairing(Vec{1, 0, -1}, Vec{2, 0, -2}) == 4);
  CHECK(pairing(Vec{}, Vec{}) == 0);
  CHECK(pairing(Gyd{{1, -1}, 2}, Gyd{{3, -3}, 6}) == 6);
  CHECK_THROWS_AS(pairing(Vec{1, -1}, Vec{0}), domain_error);
  try {
    pairing(Vec{1, -1}, Vec{0, 0, 0});
  } catch (const domain_error& e) {
    CHECK(e.name == "LengthMismatch");
  }
}

TEST_CASE("orbit_dimension pairs the diagram with twice the staircase weight") {
  // 2*rho for three parts is (2, 0, -2), so the diagram (1, 0, -1) gives 4.
  CHECK(orbit_dimension(Gyd{{1, 0, -1}, 2}) == 4);
  CHECK(orbit_dimension(Gyd{{0, 0, 0}, 1}) == 0);
  CHECK(orbit_dimension(Gyd{{1, -1}, 2}) == 2);
  for (const Gyd& g : all_gyds(4, 3)) {
    Vec rho2{3, 1, -1, -3};
    CHECK(orbit_dimension(g) == pairing(g.parts, rho2));
  }
}

TEST_CASE("convolution_dimension halves the orbit dimension of the sum") {
  Gyd a{{1, 0, -1}, 2};
  Gyd b{{1, 1, -2}, 3};
  Gyd c{{0, 0, 0}, 1};
  Vec sum{2, 1, -3};
  Vec rho2{2, 0, -2};
  CHECK(convolution_dimension(a, b, c) == Rat(pairing(sum, rho2), 2));
  CHECK(convolution_dimension(c, c, c) == Rat(0));
  CHECK_THROWS_AS(convolution_dimension(a, Gyd{{1, -1}, 2}, c), domain_error);
}

TEST_CASE("dominant_representative reduces until the width fits the level") {
  IntSeq s{{5, -2}, 3};
  IntSeq d = dominant_representative(s);
  CHECK(d.entries == Vec{2, 1});
  CHECK(d.level == 3);

  // Already reduced sequences only get sorted.
  CHECK(dominant_representative(IntSeq{{-1, 1}, 2}).entries == Vec{1, -1});
  CHECK(dominant_representative(IntSeq{{0}, 1}).entries == Vec{0});
  CHECK_THROWS_AS(dominant_representative(IntSeq{{1}, 0}), domain_error);
}

TEST_CASE("dominant_representative is idempotent and preserves the invariants") {
  for (Int len = 1; len <= 3; ++len) {
    for (Int level = 1; level <= 3; ++level) {
      Vec cur(static_cast<std::size_t>(len), -3);
      while (true) {
        IntSeq s{cur, level};
        IntSeq d = dominant_representative(s);
        CHECK(dominant_representative(d).entries == d.entries);
        CHECK(vec_sum(d.entries) == vec_sum(cur));
        // Residues modulo the level form the other orbit invariant.
        std::multiset<Int> ra, rb;
        for (Int x : cur) ra.insert(((x % level) + level) % level);
        for (Int x : d.entries) rb.insert(((x % level) + level) % level);
        CHECK(ra == rb);

        std::size_t i = 0;
        while (i < cur.size() && cur[i] == 3) cur[i++] = -3;
        if (i == cur.size()) break;
        ++cur[i];
      }
    }
  }
}

TEST_CASE("waff_conjugate matches equality of sums and residue multisets") {
  CHECK(waff_conjugate(IntSeq{{3, 0}, 2}, IntSeq{{1, 2}, 2}));
  CHECK(waff_conjugate(IntSeq{{5, -2}, 3}, IntSeq{{2, 1}, 3}));
  CHECK_FALSE(waff_conjugate(IntSeq{{3, 0}, 2}, IntSeq{{0, 1}, 2}));
  CHECK_FALSE(waff_conjugate(IntSeq{{2, 0}, 2}, IntSeq{{1, 1}, 2}));
  CHECK(waff_conjugate(IntSeq{{1, -1, 0}, 2}, IntSeq{{0, 1, -1}, 2}));
}

TEST_CASE("waff_conjugate requires matching shapes") {
  CHECK_THROWS_AS(waff_conjugate(IntSeq{{1, -1}, 2}, IntSeq{{0}, 2}), domain_error);
  CHECK_THROWS_AS(waff_conjugate(IntSeq{{1, -1}, 2}, IntSeq{{1, -1}, 3}), domain_error);
}
