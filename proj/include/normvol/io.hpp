#pragma once

#include "normvol/geometry.hpp"
#include "normvol/harness.hpp"
#include "normvol/normed_volume.hpp"
#include "normvol/shadow.hpp"

#include <json.hpp>

#include <string>
#include <vector>

namespace normvol::io {

using Json = nlohmann::ordered_json;

/// {"dim": d, "vertices": [[...], ...], "symmetric": bool}
Json body_to_json(const Polytope& body);
/// Rejects dimensions outside 2..6 and ragged vertex rows (kParse /
/// kInvalidArgument); "symmetric": true on a body that is not o-symmetric is
/// kNotSymmetric.
Polytope body_from_json(const Json& j);

/// {"base": [[...], ...], "speeds": [...], "direction": [...]}
ShadowSystem shadow_system_from_json(const Json& j);
Json shadow_system_to_json(const ShadowSystem& s);

struct CascadeInput {
  std::vector<Vector> normals;
  std::vector<Vector> points;
};

/// {"normals": [[...], ...], "points": [[...], ...]}
CascadeInput cascade_input_from_json(const Json& j);

Json witness_to_json(const ExtremalWitness& w);
Json mu_to_json(const MuResult& r);
Json report_to_json(const VerificationReport& r);
Json convexity_to_json(const ConvexityReport& r);
Json cascade_to_json(const CascadeResult& r);
Json search_record_to_json(const SearchRecord& r);

std::string csv_header();
std::string csv_row(const SearchRecord& r);

Json parse_json(const std::string& text);
Json read_json_file(const std::string& path);
std::string read_text_file(const std::string& path);
void write_text_file(const std::string& path, const std::string& text);

}  // namespace normvol::io
