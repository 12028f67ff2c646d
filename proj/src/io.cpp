#include "normvol/io.hpp"

#include "normvol/error.hpp"

#include <cstdio>
#include <fstream>
#include <sstream>

namespace normvol::io {
namespace {

Vector vector_from_json(const Json& j, const char* what) {
  if (!j.is_array()) fail(ErrorCode::kParse, std::string(what) + ": expected an array of numbers");
  Vector v(static_cast<Eigen::Index>(j.size()));
  for (std::size_t i = 0; i < j.size(); ++i) {
    if (!j[i].is_number()) fail(ErrorCode::kParse, std::string(what) + ": non-numeric coordinate");
    v[static_cast<Eigen::Index>(i)] = j[i].get<double>();
  }
  return v;
}

std::vector<Vector> rows_from_json(const Json& j, const char* what) {
  if (!j.is_array()) fail(ErrorCode::kParse, std::string(what) + ": expected an array of points");
  std::vector<Vector> rows;
  for (const auto& r : j) rows.push_back(vector_from_json(r, what));
  for (const auto& r : rows)
    if (r.size() != rows.front().size()) fail(ErrorCode::kParse, std::string(what) + ": rows of unequal length");
  return rows;
}

Json vector_to_json(const Vector& v) {
  Json a = Json::array();
  for (Eigen::Index i = 0; i < v.size(); ++i) a.push_back(v[i] == 0.0 ? 0.0 : v[i]);
  return a;
}

Json rows_to_json(const std::vector<Vector>& rows) {
  Json a = Json::array();
  for (const auto& r : rows) a.push_back(vector_to_json(r));
  return a;
}

const Json& field(const Json& j, const char* key, const char* what) {
  if (!j.is_object() || !j.contains(key))
    fail(ErrorCode::kParse, std::string(what) + ": missing field '" + key + "'");
  return j.at(key);
}

std::string csv_number(double x) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", x);
  return buf;
}

}  // namespace

Json body_to_json(const Polytope& body) {
  std::vector<Vector> rows;
  for (std::size_t i = 0; i < body.size(); ++i) rows.push_back(body.vertex(i));
  Json j;
  j["dim"] = body.dim();
  j["vertices"] = rows_to_json(rows);
  j["symmetric"] = body.symmetric();
  return j;
}

Polytope body_from_json(const Json& j) {
  const auto& dim = field(j, "dim", "body");
  if (!dim.is_number_integer()) fail(ErrorCode::kParse, "body: 'dim' must be an integer");
  const int d = dim.get<int>();
  if (d < kMinDim || d > kMaxDim) fail(ErrorCode::kInvalidArgument, "body: dimension must be in 2..6");
  const auto rows = rows_from_json(field(j, "vertices", "body"), "body vertices");
  for (const auto& r : rows)
    if (r.size() != d) fail(ErrorCode::kParse, "body: vertex length differs from 'dim'");
  Polytope p = convex_hull(rows);
  if (j.contains("symmetric")) {
    if (!j["symmetric"].is_boolean()) fail(ErrorCode::kParse, "body: 'symmetric' must be a boolean");
    if (j["symmetric"].get<bool>() && !p.symmetric())
      fail(ErrorCode::kNotSymmetric, "body: marked symmetric but the vertex set is not o-symmetric");
  }
  return p;
}

ShadowSystem shadow_system_from_json(const Json& j) {
  ShadowSystem s;
  s.base = rows_from_json(field(j, "base", "shadow system"), "shadow system base");
  const auto& speeds = field(j, "speeds", "shadow system");
  const Vector sp = vector_from_json(speeds, "shadow system speeds");
  s.speeds.assign(sp.data(), sp.data() + sp.size());
  s.direction = vector_from_json(field(j, "direction", "shadow system"), "shadow system direction");
  s.validate();
  return s;
}

Json shadow_system_to_json(const ShadowSystem& s) {
  Json j;
  j["base"] = rows_to_json(s.base);
  j["speeds"] = s.speeds;
  j["direction"] = vector_to_json(s.direction);
  return j;
}

CascadeInput cascade_input_from_json(const Json& j) {
  CascadeInput c;
  c.normals = rows_from_json(field(j, "normals", "cascade"), "cascade normals");
  c.points = rows_from_json(field(j, "points", "cascade"), "cascade points");
  return c;
}

Json witness_to_json(const ExtremalWitness& w) {
  Json j;
  j["body"] = body_to_json(w.object);
  j["value"] = w.value;
  j["exact"] = w.exact;
  j["indices"] = w.indices;
  return j;
}

Json mu_to_json(const MuResult& r) {
  Json j;
  j["kind"] = std::string(to_string(r.kind));
  j["n"] = r.n;
  j["value"] = r.value;
  j["normalizer"] = r.normalizer;
  j["exact"] = r.exact;
  j["witness"] = witness_to_json(r.witness);
  return j;
}

Json report_to_json(const VerificationReport& r) {
  Json j;
  j["claim_id"] = r.claim_id;
  j["relation"] = to_string(r.relation);
  j["computed"] = r.computed;
  j["expected"] = r.expected;
  j["rel_err"] = r.rel_err;
  j["tol"] = r.tol;
  j["pass"] = r.pass;
  j["witness_path"] = r.witness_path ? Json(*r.witness_path) : Json(nullptr);
  if (!r.note.empty()) j["note"] = r.note;
  return j;
}

Json convexity_to_json(const ConvexityReport& r) {
  Json j;
  j["grid"] = r.grid;
  j["values"] = r.values;
  j["min_second_difference"] = r.min_second_difference;
  j["tol"] = r.tol;
  j["pass"] = r.pass;
  return j;
}

Json cascade_to_json(const CascadeResult& r) {
  Json j;
  j["status"] = to_string(r.status);
  j["steps"] = r.chosen.size();
  j["trace"] = r.trace;
  j["chosen"] = r.chosen;
  j["points"] = rows_to_json(r.points);
  return j;
}

Json search_record_to_json(const SearchRecord& r) {
  Json j;
  j["sample_id"] = r.sample_id;
  j["seed"] = r.seed;
  j["generator_params"] = {{"k_dirs", r.k_dirs}};
  j["area_q6"] = r.area_q6;
  j["area_polar"] = r.area_polar;
  j["product"] = r.product;
  j["margin"] = r.margin;
  j["body_hash"] = r.body_hash;
  return j;
}

std::string csv_header() { return "sample_id,seed,k_dirs,area_Q6,area_polar,product,margin,body_hash\n"; }

std::string csv_row(const SearchRecord& r) {
  return std::to_string(r.sample_id) + "," + std::to_string(r.seed) + "," + std::to_string(r.k_dirs) + "," +
         csv_number(r.area_q6) + "," + csv_number(r.area_polar) + "," + csv_number(r.product) + "," +
         csv_number(r.margin) + "," + r.body_hash + "\n";
}

Json parse_json(const std::string& text) {
  try {
    return Json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    fail(ErrorCode::kParse, std::string("invalid JSON: ") + e.what());
  }
}

std::string read_text_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) fail(ErrorCode::kIo, "cannot open '" + path + "' for reading");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

Json read_json_file(const std::string& path) { return parse_json(read_text_file(path)); }

void write_text_file(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) fail(ErrorCode::kIo, "cannot open '" + path + "' for writing");
  out << text;
  if (!out) fail(ErrorCode::kIo, "write to '" + path + "' failed");
}

}  // namespace normvol::io
