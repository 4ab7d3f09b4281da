#pragma once

#include "aw/character.hpp"
#include "aw/geometry.hpp"
#include "aw/gyd.hpp"
#include "aw/quiver.hpp"
#include "aw/snf.hpp"

#include <json.hpp>

// JSON wire formats for everything the command line reads or writes.
// Schema violations (wrong type, missing field, out-of-range number) throw
// std::invalid_argument; mathematically invalid values keep throwing
// domain_error from the library, so the two failure modes stay distinct.

namespace aw {

using Json = nlohmann::json;

Int json_int(const Json& j, const char* what);
Vec json_vec(const Json& j, const char* what);
const Json& json_field(const Json& j, const char* key);

// {"num","den"} in lowest terms with positive den on output; input also
// accepts a bare integer.
Rat rat_from_json(const Json& j);
Json rat_to_json(const Rat& r);

Json vec_to_json(const Vec& v);
Json rats_to_json(const std::vector<Rat>& v);

// {"parts":[...],"level":L}; input runs the full diagram validation.
Gyd gyd_from_json(const Json& j);
Json gyd_to_json(const Gyd& g);

// {"entries":[...],"level":N}
IntSeq intseq_from_json(const Json& j);
Json intseq_to_json(const IntSeq& s);

// {"level":k,"finite":[...],"degree":{"num","den"}}; degree defaults to 0 on
// input, and only the shape is checked so dominance failures surface from
// the consuming operation.
AffineWeight weight_from_json(const Json& j);
Json weight_to_json(const AffineWeight& w);

// {"v":[...],"w":[...]}
QuiverData quiver_from_json(const Json& j);
Json quiver_to_json(const QuiverData& q);

// {"blocks":[...]}
BlockPartition blocks_from_json(const Json& j);
Json blocks_to_json(const BlockPartition& p);

// {"blocks":[...],"a":[rat,...]}
DeformationPoint point_from_json(const Json& j);

// {"free_rank":r,"torsion":[...]}
Json group_to_json(const GroupShape& g);
// {"torsion_coords":[...],"free_coords":[...],"is_zero":b}
Json element_to_json(const GroupElement& e);

// Bare array of {"depth":d,"weight":[...],"mult":m}, depth then weight
// lexicographic ascending.
Json entries_to_json(const std::map<std::pair<Int, Vec>, Int>& entries);

Json singular_to_json(const std::vector<SingularPoint>& pts);
Json family_to_json(const FamilyEquation& eq);
Json report_to_json(const LevelRankReport& r);

}  // namespace aw
