#include <doctest.h>

#include <algorithm>

#include "aw/character.hpp"
#include "oracles/kostka.hpp"
#include "oracles/weyl_kac.hpp"

using namespace aw;

namespace {

AffineWeight w(Int level, Vec parts) { return AffineWeight{level, Gyd{std::move(parts), level}, Rat(0)}; }

Int entry(const WeightCharacter& ch, Int depth, Vec weight) {
  auto it = ch.entries.find({depth, std::move(weight)});
  return it == ch.entries.end() ? 0 : it->second;
}

Int entry(const DecompositionTable& t, Int depth, Vec weight) {
  auto it = t.entries.find({depth, std::move(weight)});
  return it == t.entries.end() ? 0 : it->second;
}

Int layer_mass(const WeightCharacter& ch, Int depth) {
  Int s = 0;
  for (const auto& e : ch.entries)
    if (e.first.first == depth) s += e.second;
  return s;
}

}  // namespace

TEST_CASE("weight_multiplicities reproduces the level one string functions") {
  // For the level one vacuum module the multiplicity of the weight j*alpha
  // at depth d is the number of partitions of d - j*j.
  WeightCharacter ch = weight_multiplicities(w(1, {0, 0}), 5);
  CHECK(ch.level == 1);
  CHECK(ch.depth_bound == 5);
  Int partitions[6] = {1, 1, 2, 3, 5, 7};
  for (Int d = 0; d <= 5; ++d) {
    CHECK(entry(ch, d, {0, 0}) == partitions[d]);
    for (Int j = 1; j * j <= d; ++j) {
      CHECK(entry(ch, d, {j, -j}) == partitions[d - j * j]);
      CHECK(entry(ch, d, {-j, j}) == partitions[d - j * j]);
    }
  }
  CHECK(entry(ch, 3, {2, -2}) == 0);
}

TEST_CASE("weight_multiplicities handles the rank one degenerate case") {
  WeightCharacter ch = weight_multiplicities(w(2, {0}), 3);
  CHECK(ch.entries.size() == 1);
  CHECK(entry(ch, 0, {0}) == 1);
}

TEST_CASE("weight_multiplicities agrees with the alternating sum formula") {
  struct Probe {
    Int level;
    Vec lam;
    Int depth;
  };
  std::vector<Probe> probes = {
      {2, {1, -1}, 3},
      {4, {2, -2}, 2},
      {1, {0, 0, 0}, 3},
      {2, {1, 0, -1}, 2},
  };
  for (const Probe& p : probes) {
    WeightCharacter ch = weight_multiplicities(w(p.level, p.lam), p.depth);
    oracle::Table expect = oracle::weyl_kac_character(p.lam, p.level, p.depth);
    std::map<std::pair<Int, Vec>, Int> got(ch.entries.begin(), ch.entries.end());
    CHECK(got == expect);
  }
}

TEST_CASE("weight_multiplicities layers are invariant under coordinate permutations") {
  WeightCharacter ch = weight_multiplicities(w(2, {1, 0, -1}), 2);
  for (const auto& e : ch.entries) {
    Vec sorted = e.first.second;
    std::sort(sorted.begin(), sorted.end(), std::greater<Int>());
    CHECK(entry(ch, e.first.first, sorted) == e.second);
    std::reverse(sorted.begin(), sorted.end());
    CHECK(entry(ch, e.first.first, sorted) == e.second);
  }
}

TEST_CASE("weight_multiplicities validates its arguments") {
  CHECK_THROWS_AS(weight_multiplicities(w(1, {0, 0}), -1), std::invalid_argument);
  CHECK_THROWS_AS(weight_multiplicities(AffineWeight{0, Gyd{{0, 0}, 1}, Rat(0)}, 2),
                  std::invalid_argument);
  CHECK_THROWS_AS(weight_multiplicities(AffineWeight{1, Gyd{{}, 1}, Rat(0)}, 2),
                  std::invalid_argument);
  CHECK_THROWS_AS(weight_multiplicities(AffineWeight{1, Gyd{{1, -1}, 1}, Rat(0)}, 2),
                  domain_error);
  try {
    weight_multiplicities(AffineWeight{1, Gyd{{1, -1}, 1}, Rat(0)}, 2);
  } catch (const domain_error& e) {
    CHECK(e.name == "NotDominant");
  }
}

TEST_CASE("tensor_character convolves truncated characters") {
  std::vector<AffineWeight> factors{w(1, {0, 0}), w(1, {0, 0})};
  WeightCharacter prod = tensor_character(factors, 3, 1);
  CHECK(prod.level == 2);
  CHECK(prod.depth_bound == 3);
  CHECK(prod.top_degree == Rat(0));
  CHECK(entry(prod, 0, {0, 0}) == 1);
  CHECK(entry(prod, 1, {0, 0}) == 2);
  CHECK(entry(prod, 1, {1, -1}) == 2);
  CHECK(entry(prod, 1, {-1, 1}) == 2);

  // Total mass per layer multiplies like the factor masses.
  WeightCharacter one = weight_multiplicities(w(1, {0, 0}), 3);
  for (Int d = 0; d <= 3; ++d) {
    Int conv = 0;
    for (Int e = 0; e <= d; ++e) conv += layer_mass(one, e) * layer_mass(one, d - e);
    CHECK(layer_mass(prod, d) == conv);
  }
}

TEST_CASE("tensor_character sums the top degrees") {
  std::vector<AffineWeight> factors{AffineWeight{1, Gyd{{0, 0}, 1}, Rat(1, 2)},
                                    AffineWeight{1, Gyd{{0, 0}, 1}, Rat(1, 3)}};
  CHECK(tensor_character(factors, 0, 1).top_degree == Rat(5, 6));
}

TEST_CASE("tensor_character is deterministic across thread counts") {
  std::vector<AffineWeight> factors{w(2, {1, -1}), w(1, {0, 0}), w(4, {2, -2})};
  WeightCharacter a = tensor_character(factors, 3, 1);
  WeightCharacter b = tensor_character(factors, 3, 4);
  CHECK(a.entries == b.entries);
  CHECK(a.level == b.level);
}

TEST_CASE("tensor_character validates its arguments") {
  CHECK_THROWS_AS(tensor_character({}, 2, 1), std::invalid_argument);
  CHECK_THROWS_AS(tensor_character({w(1, {0, 0})}, 2, 0), std::invalid_argument);
  CHECK_THROWS_AS(tensor_character({w(1, {0, 0}), w(1, {0, 0, 0})}, 2, 1), domain_error);
}

TEST_CASE("decompose resolves a truncated product into module tops") {
  std::vector<AffineWeight> factors{w(1, {0, 0}), w(1, {0, 0})};
  DecompositionTable t = decompose(tensor_character(factors, 2, 1), 2);
  CHECK(t.level == 2);
  CHECK(t.entries.size() == 4);
  CHECK(entry(t, 0, {0, 0}) == 1);
  CHECK(entry(t, 1, {1, -1}) == 1);
  CHECK(entry(t, 2, {0, 0}) == 1);
  CHECK(entry(t, 2, {1, -1}) == 1);
}

TEST_CASE("decompose of one irreducible character is a single entry") {
  WeightCharacter ch = weight_multiplicities(w(2, {1, -1}), 3);
  DecompositionTable t = decompose(ch, 3);
  CHECK(t.entries.size() == 1);
  CHECK(entry(t, 0, {1, -1}) == 1);
}

TEST_CASE("decompose agrees with the layer peeling oracle") {
  std::vector<AffineWeight> factors{w(1, {0, 0}), w(1, {0, 0})};
  WeightCharacter prod = tensor_character(factors, 3, 1);
  DecompositionTable t = decompose(prod, 3);
  oracle::Table table(prod.entries.begin(), prod.entries.end());
  oracle::Table expect = oracle::oracle_decompose(table, prod.level, 3);
  std::map<std::pair<Int, Vec>, Int> got(t.entries.begin(), t.entries.end());
  CHECK(got == expect);

  std::vector<AffineWeight> f3{w(1, {0, 0, 0}), w(2, {1, 0, -1})};
  WeightCharacter p3 = tensor_character(f3, 2, 1);
  DecompositionTable t3 = decompose(p3, 2);
  oracle::Table table3(p3.entries.begin(), p3.entries.end());
  oracle::Table expect3 = oracle::oracle_decompose(table3, p3.level, 2);
  std::map<std::pair<Int, Vec>, Int> got3(t3.entries.begin(), t3.entries.end());
  CHECK(got3 == expect3);
}

TEST_CASE("decompose rejects characters that are not nonnegative sums") {
  WeightCharacter bad;
  bad.level = 2;
  bad.depth_bound = 1;
  bad.entries[{0, {1, -1}}] = 1;
  // The depth one layer of the module with top (1, -1) is missing.
  CHECK_THROWS_AS(decompose(bad, 1), domain_error);

  WeightCharacter nondom;
  nondom.level = 2;
  nondom.depth_bound = 0;
  nondom.entries[{0, {-1, 1}}] = 1;
  CHECK_THROWS_AS(decompose(nondom, 0), domain_error);

  WeightCharacter neg;
  neg.level = 2;
  neg.depth_bound = 0;
  neg.entries[{0, {0, 0}}] = -1;
  try {
    decompose(neg, 0);
    CHECK(false);
  } catch (const domain_error& e) {
    CHECK(e.name == "NegativeMultiplicity");
  }
}

TEST_CASE("lr_finite matches the hand expanded rank one products") {
  DecompositionTable t = lr_finite({Gyd{{1, -1}, 2}, Gyd{{1, -1}, 2}});
  CHECK(t.level == 0);
  CHECK(t.entries.size() == 3);
  CHECK(entry(t, 0, {0, 0}) == 1);
  CHECK(entry(t, 0, {1, -1}) == 1);
  CHECK(entry(t, 0, {2, -2}) == 1);
}

TEST_CASE("lr_finite matches the hand expanded adjoint square") {
  DecompositionTable t = lr_finite({Gyd{{1, 0, -1}, 2}, Gyd{{1, 0, -1}, 2}});
  CHECK(t.entries.size() == 5);
  CHECK(entry(t, 0, {0, 0, 0}) == 1);
  CHECK(entry(t, 0, {1, 0, -1}) == 2);
  CHECK(entry(t, 0, {1, 1, -2}) == 1);
  CHECK(entry(t, 0, {2, -1, -1}) == 1);
  CHECK(entry(t, 0, {2, 0, -2}) == 1);
}

TEST_CASE("lr_finite is symmetric and counts dimensions correctly") {
  Gyd a{{2, 0, -2}, 4};
  Gyd b{{1, 1, -2}, 3};
  DecompositionTable ab = lr_finite({a, b});
  DecompositionTable ba = lr_finite({b, a});
  CHECK(ab.entries == ba.entries);

  // Weyl dimension formula for three parts.
  auto dim3 = [](const Vec& p) {
    return (p[0] - p[1] + 1) * (p[1] - p[2] + 1) * (p[0] - p[2] + 2) / 2;
  };
  Int total = 0;
  for (const auto& e : ab.entries) total += e.second * dim3(e.first.second);
  CHECK(total == dim3(a.parts) * dim3(b.parts));
}

TEST_CASE("lr_finite keeps single factors and validates input") {
  DecompositionTable t = lr_finite({Gyd{{3, -1, -2}, 5}});
  CHECK(t.entries.size() == 1);
  CHECK(entry(t, 0, {3, -1, -2}) == 1);
  CHECK_THROWS_AS(lr_finite({}), std::invalid_argument);
  CHECK_THROWS_AS(lr_finite({Gyd{{}, 1}}), std::invalid_argument);
  CHECK_THROWS_AS(lr_finite({Gyd{{0, 1}, 2}}), domain_error);
}

TEST_CASE("lr_finite agrees with tableau counting") {
  Gyd a{{2, -1, -1}, 3};
  Gyd b{{1, 0, -1}, 2};
  DecompositionTable t = lr_finite({a, b});
  // Expand the product over the weight diagram of b and re-peel it.
  std::map<Vec, Int> layer;
  for (Int x = -3; x <= 3; ++x)
    for (Int y = -3; y <= 3; ++y) {
      Vec mu{x, y, -x - y};
      Int kb = oracle::kostka_multiplicity(b.parts, mu);
      if (kb == 0) continue;
      for (Int u = -4; u <= 4; ++u)
        for (Int v = -4; v <= 4; ++v) {
          Vec nu{u, v, -u - v};
          Vec diff{nu[0] - mu[0], nu[1] - mu[1], nu[2] - mu[2]};
          Int ka = oracle::kostka_multiplicity(a.parts, diff);
          if (ka != 0) layer[nu] += ka * kb;
        }
    }
  std::map<Vec, Int> peeled = oracle::peel_finite_layer(layer);
  for (const auto& e : t.entries) CHECK(peeled[e.first.second] == e.second);
  Int total_modules = 0;
  for (const auto& e : peeled) total_modules += e.second;
  Int listed = 0;
  for (const auto& e : t.entries) listed += e.second;
  CHECK(total_modules == listed);
}

TEST_CASE("level_rank_check matches vacuum factors across the duality") {
  LevelRankReport r = level_rank_check({Gyd{{0, 0}, 1}, Gyd{{0, 0}, 1}}, 2);
  CHECK(r.rank == 2);
  CHECK(r.dual_rank == 2);
  CHECK(r.dual_levels == Vec{1, 1});
  CHECK(r.levels_match);
  CHECK(r.all_agree);
  CHECK(r.unmatched_dual.empty());
  REQUIRE(r.rows.size() == 4);
  CHECK(r.rows[0].depth == 0);
  CHECK(r.rows[0].weight == Vec{0, 0});
  CHECK(r.rows[0].dual_weight == Vec{0, 0});
  CHECK(r.rows[0].mult == 1);
  CHECK(r.rows[0].dual_mult == 1);
  CHECK(r.rows[0].agree);
  CHECK(r.rows[1].depth == 1);
  CHECK(r.rows[1].weight == Vec{1, -1});
  CHECK(r.rows[1].dual_weight == Vec{1, -1});
}

TEST_CASE("level_rank_check reports agreement row by row for mixed levels") {
  // Up to depth one the rank two levels (1,2) table matches the rank three
  // levels (1,1) table of the transposed factors.
  LevelRankReport shallow = level_rank_check({Gyd{{0, 0}, 1}, Gyd{{0, 0}, 2}}, 1);
  CHECK(shallow.rank == 2);
  CHECK(shallow.dual_rank == 3);
  CHECK(shallow.dual_levels == Vec{1, 1});
  CHECK(shallow.levels_match);
  CHECK(shallow.all_agree);
  CHECK(shallow.unmatched_dual.empty());
  bool found = false;
  for (const auto& row : shallow.rows)
    if (row.depth == 1 && row.weight == Vec{1, -1}) {
      found = true;
      CHECK(row.dual_weight == Vec{1, 0, -1});
      CHECK(row.mult == 1);
      CHECK(row.dual_mult == 1);
    }
  CHECK(found);

  // At depth two the tables genuinely differ, and the report says so
  // instead of papering over the mismatch.
  LevelRankReport deep = level_rank_check({Gyd{{0, 0}, 1}, Gyd{{0, 0}, 2}}, 2);
  CHECK_FALSE(deep.all_agree);
  for (const auto& row : deep.rows)
    if (row.depth == 2 && row.weight == Vec{1, -1}) {
      CHECK(row.mult == 1);
      CHECK(row.dual_mult == 2);
      CHECK_FALSE(row.agree);
    }
}
