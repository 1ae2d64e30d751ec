#pragma once

#include <json.hpp>

#include "irrcount/assignment.hpp"
#include "irrcount/counting.hpp"
#include "irrcount/painting.hpp"
#include "irrcount/sym_char.hpp"

namespace irrcount {

using Json = nlohmann::ordered_json;

Json toJson(const YoungDiagram& d);
YoungDiagram diagramFromJson(const Json& j);

// {"shape":[2,1],"rows":[["•","s"],["s"]]}; "*" is accepted for "•" on input.
Json toJson(const Painting& p, bool ascii = false);
Painting paintingFromJson(const Json& j);

// {"shape":[4,4],"rows":[[1,1,1,2],[2,2,3,3]]}
Json toJson(const Assignment& a);
Assignment assignmentFromJson(const Json& j);

// {"degree":3,"values":{"[1,1,1]":"6","[2,1]":"0","[3]":"0"}}
Json toJson(const ClassFunction& f);

// {"degree":4,"mult":{"[2,2]":1,"[1,1,1,1]":1}}
Json toJson(const FormalRepSum& s);

Json toJson(const OrbitSpec& orbit);
Json toJson(const NuSpec& nu);
Json toJson(const BreakdownTerm& term);

// {"group":"U(2,1)","nu":["1","1","2"],"orbit":[2,1],"count":2,"breakdown":[...]}
Json countResultJson(const GroupSpec& group, const NuSpec& nu, const OrbitSpec& orbit,
                     const CountResult& result, bool withBreakdown = true);

}  // namespace irrcount
