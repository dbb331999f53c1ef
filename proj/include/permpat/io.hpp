#pragma once

#include "permpat/gap_reduction.hpp"
#include "permpat/permutation.hpp"
#include "permpat/psi_reduction.hpp"

#include <json.hpp>

#include <string>
#include <string_view>

namespace permpat::io {

using nlohmann::json;

/// Reads a permutation either from the file at `argument` or, if no such
/// file exists, from the argument text itself.
Permutation load_permutation(std::string_view argument);

json to_json(const PointSet& points);
PointSet point_set_from_json(const json& doc);

/// {"G": {"k": int, "edges": [[a,b],...]}, "H": {"n": int, "edges": [...]}, "chi": [...]}
PsiInstance psi_instance_from_json(const json& doc);
json to_json(const PsiInstance& instance);
PsiInstance load_psi_instance(const std::string& path);

json to_json(const PsiGadget& gadget);
json to_json(const GapInstance& gap);
json to_json(const BoundsReport& report);

} // namespace permpat::io
