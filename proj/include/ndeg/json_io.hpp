#pragma once

#include <map>
#include <vector>

#include "json.hpp"
#include "ndeg/gring.hpp"
#include "ndeg/motivic.hpp"
#include "ndeg/polytope.hpp"
#include "ndeg/probe.hpp"
#include "ndeg/report.hpp"
#include "ndeg/strata.hpp"

namespace ndeg {

using nlohmann::json;

// Subsets are written 1-based, matching the variable names x1..xd.
json to_json_subset(Subset s);
Subset subset_from_json(const json& j);
json to_json_face(const std::vector<IVec>& vertices);

json to_json(const Atom& a);
Atom atom_from_json(const json& j);
json to_json(const GClass& c);
GClass gclass_from_json(const json& j);

json to_json(const FracPoly& p);
json to_json(const FaceDesc& f);
json to_json(const NewtonPolyhedron& G);
json to_json(const ProbeReport& r);
json to_json(const Report& r);
json to_json(const StratumInfo& s);

}  // namespace ndeg
