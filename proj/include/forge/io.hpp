// JSON file formats and report serialization. Formats:
//   group:    {"name": str, "order": n, "table": [[int;n];n]}
//   family:   {"group": path-or-inline, "type": [u,v], "F": [[ids]], "Fstar": [[ids]]}
//   geometry: {"points": n, "lines": [[point ids]], "labels": {...}}
//   plane:    geometry + {"parallel_classes": [[line ids]]}
#pragma once

#include <filesystem>
#include <string>

#include "json.hpp"
#include "forge/planes.hpp"
#include "forge/suites.hpp"

namespace forge::io {

using Json = nlohmann::json;

Json group_to_json(const GroupTable& g);
GroupPtr group_from_json(const Json& j);

Json family_to_json(const KantorFamily& fam);  // group inlined
KantorFamily family_from_json(const Json& j, const std::filesystem::path& base_dir);

Json geometry_to_json(const IncidenceGeometry& geom);
IncidenceGeometry geometry_from_json(const Json& j);

Json plane_to_json(const AffinePlane& plane);
AffinePlane plane_from_json(const Json& j);

Json family_report_to_json(const FamilyReport& rep);
Json frohardt_to_json(const FrohardtReport& rep);
Json gq_check_to_json(const GqCheck& check);
Json benson_to_json(const BensonReport& rep);
Json suite_report_to_json(const SuiteReport& rep);

std::string read_file(const std::filesystem::path& path);
void write_file(const std::filesystem::path& path, const std::string& content);
Json load_json(const std::filesystem::path& path);
void save_json(const std::filesystem::path& path, const Json& j);
std::string file_hash(const std::filesystem::path& path);

}  // namespace forge::io
