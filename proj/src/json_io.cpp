#include "aw/json_io.hpp"

#include <limits>
#include <stdexcept>
#include <string>

namespace aw {

namespace {

Int bigint_to_int(const BigInt& x) {
  if (x > std::numeric_limits<Int>::max() || x < std::numeric_limits<Int>::min())
    throw std::overflow_error("value exceeds the 64-bit signed range");
  return x.convert_to<Int>();
}

}  // namespace

Int json_int(const Json& j, const char* what) {
  if (!j.is_number_integer())
    throw std::invalid_argument(std::string(what) + " must be an integer");
  if (j.is_number_unsigned() &&
      j.get<std::uint64_t>() > static_cast<std::uint64_t>(std::numeric_limits<Int>::max()))
    throw std::invalid_argument(std::string(what) + " exceeds the 64-bit signed range");
  return j.get<Int>();
}

Vec json_vec(const Json& j, const char* what) {
  if (!j.is_array())
    throw std::invalid_argument(std::string(what) + " must be an array of integers");
  Vec out;
  out.reserve(j.size());
  for (const auto& e : j) out.push_back(json_int(e, what));
  return out;
}

const Json& json_field(const Json& j, const char* key) {
  if (!j.is_object())
    throw std::invalid_argument(std::string("expected an object with field \"") + key + "\"");
  auto it = j.find(key);
  if (it == j.end()) throw std::invalid_argument(std::string("missing field \"") + key + "\"");
  return *it;
}

Rat rat_from_json(const Json& j) {
  if (j.is_number_integer()) return Rat(json_int(j, "rational"));
  if (!j.is_object())
    throw std::invalid_argument("rational must be an integer or {\"num\",\"den\"}");
  Int num = json_int(json_field(j, "num"), "num");
  Int den = json_int(json_field(j, "den"), "den");
  if (den == 0) throw std::invalid_argument("den must be nonzero");
  return Rat(num, den);
}

Json rat_to_json(const Rat& r) {
  return Json{{"num", bigint_to_int(numerator(r))}, {"den", bigint_to_int(denominator(r))}};
}

Json vec_to_json(const Vec& v) {
  Json arr = Json::array();
  for (Int x : v) arr.push_back(x);
  return arr;
}

Json rats_to_json(const std::vector<Rat>& v) {
  Json arr = Json::array();
  for (const Rat& r : v) arr.push_back(rat_to_json(r));
  return arr;
}

Gyd gyd_from_json(const Json& j) {
  return validate_gyd(json_vec(json_field(j, "parts"), "parts"),
                      json_int(json_field(j, "level"), "level"));
}

Json gyd_to_json(const Gyd& g) {
  return Json{{"parts", vec_to_json(g.parts)}, {"level", g.level}};
}

IntSeq intseq_from_json(const Json& j) {
  return IntSeq{json_vec(json_field(j, "entries"), "entries"),
                json_int(json_field(j, "level"), "level")};
}

Json intseq_to_json(const IntSeq& s) {
  return Json{{"entries", vec_to_json(s.entries)}, {"level", s.level}};
}

AffineWeight weight_from_json(const Json& j) {
  Int level = json_int(json_field(j, "level"), "level");
  Vec finite = json_vec(json_field(j, "finite"), "finite");
  Rat degree = j.is_object() && j.contains("degree") ? rat_from_json(j.at("degree")) : Rat(0);
  return AffineWeight{level, Gyd{std::move(finite), level}, degree};
}

Json weight_to_json(const AffineWeight& w) {
  return Json{{"level", w.level},
              {"finite", vec_to_json(w.finite.parts)},
              {"degree", rat_to_json(w.degree)}};
}

QuiverData quiver_from_json(const Json& j) {
  return validate_quiver(json_vec(json_field(j, "v"), "v"), json_vec(json_field(j, "w"), "w"));
}

Json quiver_to_json(const QuiverData& q) {
  return Json{{"v", vec_to_json(q.v)}, {"w", vec_to_json(q.w)}};
}

BlockPartition blocks_from_json(const Json& j) {
  return validate_blocks(json_vec(json_field(j, "blocks"), "blocks"));
}

Json blocks_to_json(const BlockPartition& p) { return Json{{"blocks", vec_to_json(p.blocks)}}; }

DeformationPoint point_from_json(const Json& j) {
  BlockPartition p = blocks_from_json(j);
  const Json& a = json_field(j, "a");
  if (!a.is_array()) throw std::invalid_argument("a must be an array of rationals");
  std::vector<Rat> rats;
  rats.reserve(a.size());
  for (const auto& e : a) rats.push_back(rat_from_json(e));
  return validate_deformation_point(std::move(p), std::move(rats));
}

Json group_to_json(const GroupShape& g) {
  return Json{{"free_rank", g.free_rank}, {"torsion", vec_to_json(g.torsion)}};
}

Json element_to_json(const GroupElement& e) {
  return Json{{"torsion_coords", vec_to_json(e.torsion_coords)},
              {"free_coords", vec_to_json(e.free_coords)},
              {"is_zero", e.is_zero()}};
}

Json entries_to_json(const std::map<std::pair<Int, Vec>, Int>& entries) {
  Json arr = Json::array();
  for (const auto& e : entries)
    arr.push_back(Json{{"depth", e.first.first},
                       {"weight", vec_to_json(e.first.second)},
                       {"mult", e.second}});
  return arr;
}

Json singular_to_json(const std::vector<SingularPoint>& pts) {
  Json arr = Json::array();
  for (const SingularPoint& p : pts)
    arr.push_back(Json{{"root", rat_to_json(p.root)}, {"type", p.type}});
  return arr;
}

Json family_to_json(const FamilyEquation& eq) {
  return Json{{"weights", vec_to_json(eq.weights)},
              {"coefficients", rats_to_json(eq.coefficients)},
              {"infinity", eq.infinity}};
}

Json report_to_json(const LevelRankReport& r) {
  Json rows = Json::array();
  for (const LevelRankRow& row : r.rows)
    rows.push_back(Json{{"depth", row.depth},
                        {"weight", vec_to_json(row.weight)},
                        {"mult", row.mult},
                        {"dual_weight", vec_to_json(row.dual_weight)},
                        {"dual_mult", row.dual_mult},
                        {"agree", row.agree}});
  Json unmatched = Json::array();
  for (const LevelRankUnmatched& u : r.unmatched_dual)
    unmatched.push_back(
        Json{{"depth", u.depth}, {"weight", vec_to_json(u.weight)}, {"mult", u.mult}});
  return Json{{"rank", r.rank},
              {"dual_rank", r.dual_rank},
              {"dual_levels", vec_to_json(r.dual_levels)},
              {"levels_match", r.levels_match},
              {"all_agree", r.all_agree},
              {"rows", rows},
              {"unmatched_dual", unmatched}};
}

}  // namespace aw
