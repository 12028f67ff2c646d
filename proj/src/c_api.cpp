#include "normvol/normvol.h"

#include "normvol/bodies.hpp"
#include "normvol/error.hpp"
#include "normvol/harness.hpp"
#include "normvol/io.hpp"
#include "normvol/normed_volume.hpp"
#include "normvol/rng.hpp"
#include "normvol/shadow.hpp"
#include "normvol/solvers.hpp"
#include "normvol/svg.hpp"

#include <cmath>
#include <cstdlib>
#include <cstring>
#include <new>
#include <string>

struct nv_body {
  normvol::Polytope polytope;
};

namespace {

using normvol::io::Json;

thread_local std::string g_last_error;

nv_status record(nv_status s, const std::string& message) {
  g_last_error = message;
  return s;
}

template <class F>
nv_status guarded(F&& f) {
  try {
    g_last_error.clear();
    f();
    return NV_OK;
  } catch (const normvol::Error& e) {
    return record(static_cast<nv_status>(e.code()), e.what());
  } catch (const std::bad_alloc&) {
    return record(NV_ERR_INTERNAL, "out of memory");
  } catch (const std::exception& e) {
    return record(NV_ERR_INTERNAL, e.what());
  }
}

char* dup(const std::string& s) {
  auto* p = static_cast<char*>(std::malloc(s.size() + 1));
  if (!p) throw std::bad_alloc();
  std::memcpy(p, s.c_str(), s.size() + 1);
  return p;
}

void require(const void* p, const char* what) {
  if (!p) normvol::fail(normvol::ErrorCode::kInvalidArgument, std::string(what) + " is null");
}

normvol::SolverBudget to_budget(const nv_budget* b) {
  normvol::SolverBudget out;
  if (b) {
    out.max_subsets = b->max_subsets;
    out.restarts = b->restarts;
    out.max_iters = b->max_iters;
    out.rng_seed = b->rng_seed;
  }
  out.validate();
  return out;
}

normvol::VolumeKind to_kind(nv_volume_kind k) {
  switch (k) {
    case NV_BUSEMANN: return normvol::VolumeKind::kBusemann;
    case NV_HOLMES_THOMPSON: return normvol::VolumeKind::kHolmesThompson;
    case NV_MASS: return normvol::VolumeKind::kMass;
    case NV_MASS_STAR: return normvol::VolumeKind::kMassStar;
  }
  normvol::fail(normvol::ErrorCode::kInvalidArgument, "unknown volume kind");
}

nv_body* wrap(normvol::Polytope p) { return new nv_body{std::move(p)}; }

}  // namespace

extern "C" {

const char* nv_version(void) { return "1.0.0"; }

const char* nv_rng_algorithm(void) { return normvol::CounterRng::kAlgorithm; }

const char* nv_status_name(nv_status status) {
  if (status == NV_OK) return "ok";
  if (status == NV_ERR_INTERNAL) return "internal error";
  if (status >= NV_ERR_INVALID_ARGUMENT && status <= NV_ERR_UNSUPPORTED)
    return normvol::to_string(static_cast<normvol::ErrorCode>(status));
  return "unknown";
}

const char* nv_last_error(void) { return g_last_error.c_str(); }

void nv_string_free(char* s) { std::free(s); }

nv_budget nv_budget_default(void) {
  const normvol::SolverBudget b;
  return {b.max_subsets, b.restarts, b.max_iters, b.rng_seed};
}

nv_status nv_parse_volume_kind(const char* tag, nv_volume_kind* out) {
  return guarded([&] {
    require(tag, "tag");
    require(out, "out");
    const auto k = normvol::parse_volume_kind(tag);
    if (!k) normvol::fail(normvol::ErrorCode::kInvalidArgument, std::string("unknown volume kind '") + tag + "'");
    *out = static_cast<nv_volume_kind>(*k);
  });
}

nv_status nv_body_make(const char* kind, int dim, int n, double radius, nv_body** out) {
  return guarded([&] {
    require(kind, "kind");
    require(out, "out");
    const std::string k = kind;
    auto check_dim = [&] {
      if (dim < normvol::kMinDim || dim > normvol::kMaxDim)
        normvol::fail(normvol::ErrorCode::kInvalidArgument, "dimension must be in 2..6");
    };
    if (k == "simplex") {
      check_dim();
      *out = wrap(normvol::regular_simplex(dim));
    } else if (k == "cross") {
      check_dim();
      *out = wrap(normvol::cross_polytope(dim));
    } else if (k == "cube") {
      check_dim();
      *out = wrap(normvol::cube(dim));
    } else if (k == "ngon") {
      *out = wrap(normvol::regular_ngon(n, radius > 0.0 ? radius : 1.0));
    } else if (k == "symmetral") {
      check_dim();
      *out = wrap(normvol::simplex_symmetral(dim));
    } else if (k == "pair") {
      check_dim();
      *out = wrap(normvol::simplex_pair_body(dim, n));
    } else if (k == "radon-hexagon") {
      *out = wrap(normvol::radon_hexagon());
    } else {
      normvol::fail(normvol::ErrorCode::kInvalidArgument, "unknown body kind '" + k + "'");
    }
  });
}

nv_status nv_body_from_vertices(int dim, size_t count, const double* coords, nv_body** out) {
  return guarded([&] {
    require(coords, "coords");
    require(out, "out");
    if (dim < normvol::kMinDim || dim > normvol::kMaxDim)
      normvol::fail(normvol::ErrorCode::kInvalidArgument, "dimension must be in 2..6");
    std::vector<normvol::Vector> pts;
    for (size_t i = 0; i < count; ++i)
      pts.push_back(Eigen::Map<const normvol::Vector>(coords + i * static_cast<size_t>(dim), dim));
    *out = wrap(normvol::convex_hull(pts));
  });
}

nv_status nv_body_from_json(const char* json, nv_body** out) {
  return guarded([&] {
    require(json, "json");
    require(out, "out");
    *out = wrap(normvol::io::body_from_json(normvol::io::parse_json(json)));
  });
}

nv_status nv_body_read(const char* path, nv_body** out) {
  return guarded([&] {
    require(path, "path");
    require(out, "out");
    *out = wrap(normvol::io::body_from_json(normvol::io::read_json_file(path)));
  });
}

nv_status nv_body_write(const nv_body* body, const char* path) {
  return guarded([&] {
    require(body, "body");
    require(path, "path");
    normvol::io::write_text_file(path, normvol::io::body_to_json(body->polytope).dump(2) + "\n");
  });
}

nv_status nv_body_to_json(const nv_body* body, char** out) {
  return guarded([&] {
    require(body, "body");
    require(out, "out");
    *out = dup(normvol::io::body_to_json(body->polytope).dump());
  });
}

void nv_body_free(nv_body* body) { delete body; }

int nv_body_dim(const nv_body* body) { return body ? body->polytope.dim() : 0; }

size_t nv_body_vertex_count(const nv_body* body) { return body ? body->polytope.size() : 0; }

nv_status nv_body_vertex(const nv_body* body, size_t index, double* out) {
  return guarded([&] {
    require(body, "body");
    require(out, "out");
    if (index >= body->polytope.size()) normvol::fail(normvol::ErrorCode::kInvalidArgument, "vertex index out of range");
    const auto& v = body->polytope.vertex(index);
    for (Eigen::Index i = 0; i < v.size(); ++i) out[i] = v[i];
  });
}

int nv_body_is_symmetric(const nv_body* body) { return body && body->polytope.symmetric() ? 1 : 0; }

nv_status nv_body_volume(const nv_body* body, double* out) {
  return guarded([&] {
    require(body, "body");
    require(out, "out");
    *out = body->polytope.volume();
  });
}

nv_status nv_body_polar(const nv_body* body, nv_body** out) {
  return guarded([&] {
    require(body, "body");
    require(out, "out");
    *out = wrap(normvol::polar(body->polytope));
  });
}

nv_status nv_body_hash(const nv_body* body, char** out) {
  return guarded([&] {
    require(body, "body");
    require(out, "out");
    *out = dup(normvol::content_hash(body->polytope));
  });
}

nv_status nv_body_linear_image(const nv_body* body, const double* row_major, nv_body** out) {
  return guarded([&] {
    require(body, "body");
    require(row_major, "matrix");
    require(out, "out");
    const int d = body->polytope.dim();
    normvol::Matrix m(d, d);
    for (int i = 0; i < d; ++i)
      for (int j = 0; j < d; ++j) m(i, j) = row_major[i * d + j];
    *out = wrap(normvol::linear_image(body->polytope, m));
  });
}

nv_status nv_compute_qn(const nv_body* body, int n, const nv_budget* budget, char** json_out) {
  return guarded([&] {
    require(body, "body");
    require(json_out, "json_out");
    const auto w = normvol::max_inscribed_polytope(body->polytope, n, to_budget(budget));
    *json_out = dup(normvol::io::witness_to_json(w).dump());
  });
}

nv_status nv_compute_cross(const nv_body* body, const nv_budget* budget, char** json_out) {
  return guarded([&] {
    require(body, "body");
    require(json_out, "json_out");
    const auto w = normvol::max_cross_polytope(body->polytope, to_budget(budget));
    *json_out = dup(normvol::io::witness_to_json(w).dump());
  });
}

nv_status nv_compute_para(const nv_body* body, const nv_budget* budget, char** json_out) {
  return guarded([&] {
    require(body, "body");
    require(json_out, "json_out");
    const auto w = normvol::min_circumscribed_parallelotope(body->polytope, to_budget(budget));
    *json_out = dup(normvol::io::witness_to_json(w).dump());
  });
}

nv_status nv_compute_santalo(const nv_body* body, const nv_budget* budget, char** json_out) {
  return guarded([&] {
    require(body, "body");
    require(json_out, "json_out");
    const auto s = normvol::santalo_point(body->polytope, to_budget(budget));
    Json j;
    j["point"] = std::vector<double>(s.data(), s.data() + s.size());
    j["polar_volume"] = normvol::polar_volume_about(body->polytope, s);
    *json_out = dup(j.dump());
  });
}

nv_status nv_compute_mu(const nv_body* body, int n, nv_volume_kind kind, const nv_budget* budget, double* value,
                        char** json_out) {
  return guarded([&] {
    require(body, "body");
    const auto r = normvol::mu(body->polytope, n, to_kind(kind), to_budget(budget));
    if (value) *value = r.value;
    if (json_out) *json_out = dup(normvol::io::mu_to_json(r).dump());
  });
}

nv_status nv_max_ngon_disk(int n, const nv_budget* budget, double* out) {
  return guarded([&] {
    require(out, "out");
    *out = normvol::max_inscribed_ngon_disk(n, to_budget(budget));
  });
}

nv_status nv_suite_names(char** json_out) {
  return guarded([&] {
    require(json_out, "json_out");
    *json_out = dup(Json(normvol::suite_names()).dump());
  });
}

nv_status nv_verify_suite(const char* suite, double tol, const nv_budget* budget, int* all_pass, char** json_out) {
  return guarded([&] {
    require(suite, "suite");
    const auto reports = normvol::run_suite(suite, tol, to_budget(budget));
    bool ok = true;
    Json arr = Json::array();
    for (const auto& r : reports) {
      ok = ok && r.pass;
      arr.push_back(normvol::io::report_to_json(r));
    }
    if (all_pass) *all_pass = ok ? 1 : 0;
    if (json_out) *json_out = dup(arr.dump());
  });
}

nv_status nv_search_conjecture(uint64_t samples, uint64_t seed, int k_min, int k_max, const nv_budget* budget,
                               nv_row_sink sink, void* user, char** summary_json) {
  return guarded([&] {
    normvol::SearchParams params{k_min, k_max};
    if (sink) sink(normvol::io::csv_header().c_str(), user);
    auto forward = [&](const normvol::SearchRecord& r) {
      if (sink) sink(normvol::io::csv_row(r).c_str(), user);
    };
    const auto s = normvol::conjecture_search(samples, seed, params, forward, to_budget(budget));
    if (!summary_json) return;
    Json j;
    j["samples"] = samples;
    j["seed"] = seed;
    j["generator_params"] = {{"k_min", k_min}, {"k_max", k_max}};
    j["evaluated"] = s.evaluated;
    j["skipped"] = s.skipped;
    j["control"] = normvol::io::search_record_to_json(s.control);
    j["min"] = s.min ? normvol::io::search_record_to_json(*s.min) : Json(nullptr);
    Json ce = Json::array();
    for (std::size_t i = 0; i < s.counterexamples.size(); ++i) {
      Json c = normvol::io::search_record_to_json(s.counterexamples[i]);
      c["body"] = normvol::io::body_to_json(s.counterexample_bodies[i]);
      ce.push_back(std::move(c));
    }
    j["counterexamples"] = std::move(ce);
    *summary_json = dup(j.dump());
  });
}

nv_status nv_shadow_profile(const char* system_json, nv_profile_kind kind, double t_min, double t_max, int steps,
                            double tol, const nv_budget* budget, int* pass, char** json_out) {
  return guarded([&] {
    require(system_json, "system_json");
    const auto sys = normvol::io::shadow_system_from_json(normvol::io::parse_json(system_json));
    normvol::ConvexityReport r;
    if (kind == NV_PROFILE_VOLUME) {
      r = normvol::volume_profile(sys, t_min, t_max, steps, tol > 0.0 ? tol : 1e-8);
    } else if (kind == NV_PROFILE_RECIPROCAL_POLAR) {
      r = normvol::mr_profile(sys, t_min, t_max, steps, tol > 0.0 ? tol : 1e-6, to_budget(budget));
    } else {
      normvol::fail(normvol::ErrorCode::kInvalidArgument, "unknown profile kind");
    }
    if (pass) *pass = r.pass ? 1 : 0;
    if (json_out) *json_out = dup(normvol::io::convexity_to_json(r).dump());
  });
}

nv_status nv_shadow_cascade(const char* input_json, double eps, int max_steps, char** json_out) {
  return guarded([&] {
    require(input_json, "input_json");
    require(json_out, "json_out");
    if (max_steps < 0) normvol::fail(normvol::ErrorCode::kInvalidArgument, "max_steps must be non-negative");
    const auto in = normvol::io::cascade_input_from_json(normvol::io::parse_json(input_json));
    const auto r = normvol::projection_cascade(in.normals, in.points, eps, max_steps);
    *json_out = dup(normvol::io::cascade_to_json(r).dump());
  });
}

nv_status nv_svg_bodies(const nv_body* const* bodies, size_t count, char** svg_out) {
  return guarded([&] {
    require(bodies, "bodies");
    require(svg_out, "svg_out");
    std::vector<normvol::Polytope> layers;
    for (size_t i = 0; i < count; ++i) {
      require(bodies[i], "body");
      layers.push_back(bodies[i]->polytope);
    }
    *svg_out = dup(normvol::svg::polygons(layers));
  });
}

nv_status nv_svg_profile(const double* xs, const double* ys, size_t count, const char* x_label, const char* y_label,
                         char** svg_out) {
  return guarded([&] {
    require(xs, "xs");
    require(ys, "ys");
    require(svg_out, "svg_out");
    *svg_out = dup(normvol::svg::profile(std::vector<double>(xs, xs + count), std::vector<double>(ys, ys + count),
                                         x_label ? x_label : "", y_label ? y_label : ""));
  });
}

}  // extern "C"
