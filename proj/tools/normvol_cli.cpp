// normvol: command-line front end over the C API in libnormvol.

#include "normvol/normvol.h"

#include <CLI11.hpp>
#include <json.hpp>

#include <cstdio>
#include <fstream>
#include <iostream>
#include <memory>
#include <sstream>
#include <string>
#include <vector>

namespace {

using Json = nlohmann::ordered_json;

constexpr int kExitOk = 0;
constexpr int kExitFail = 1;
constexpr int kExitInput = 2;

struct CliError {
  nv_status status;
  std::string message;
};

void check(nv_status s) {
  if (s != NV_OK) throw CliError{s, nv_last_error()};
}

std::string take(char* s) {
  std::string out(s ? s : "");
  nv_string_free(s);
  return out;
}

using Body = std::unique_ptr<nv_body, decltype(&nv_body_free)>;

Body load_body(const std::string& path) {
  nv_body* b = nullptr;
  check(nv_body_read(path.c_str(), &b));
  return Body(b, nv_body_free);
}

Body body_from_json(const Json& j) {
  nv_body* b = nullptr;
  check(nv_body_from_json(j.dump().c_str(), &b));
  return Body(b, nv_body_free);
}

std::string num(double x) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.15g", x);
  return buf;
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw CliError{NV_ERR_IO, "cannot open '" + path + "' for reading"};
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_file(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out || !(out << text)) throw CliError{NV_ERR_IO, "cannot write '" + path + "'"};
}

Json parse(const std::string& text) {
  try {
    return Json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    throw CliError{NV_ERR_PARSE, e.what()};
  }
}

struct Options {
  // bodies
  std::string kind;
  int dim = 2;
  int k = 1;
  double radius = 1.0;
  // shared
  std::string body;
  int n = 0;
  std::string vol;
  std::uint64_t seed = 0;
  std::string out;
  std::string svg;
  // budget
  std::uint64_t max_subsets = 0;
  int restarts = 0;
  int max_iters = 0;
  // verify
  std::string suite;
  double tol = 1e-6;
  std::string json;
  // search
  std::uint64_t samples = 10000;
  std::string csv;
  int k_min = 3;
  int k_max = 8;
  // shadow
  std::string system;
  double t_min = -1.0;
  double t_max = 1.0;
  int steps = 201;
  double shadow_tol = 0.0;
  double eps = 1e-9;
  int max_steps = 10000;
};

nv_budget budget_from(const Options& o) {
  nv_budget b = nv_budget_default();
  if (o.max_subsets) b.max_subsets = o.max_subsets;
  if (o.restarts) b.restarts = o.restarts;
  if (o.max_iters) b.max_iters = o.max_iters;
  b.rng_seed = o.seed;
  return b;
}

void collect(const CLI::App* app, Json& params) {
  for (const CLI::Option* opt : app->get_options()) {
    if (opt->count() == 0) continue;
    const std::string name = opt->get_lnames().empty() ? opt->get_name() : opt->get_lnames().front();
    if (name == "help") continue;
    const auto& res = opt->results();
    params[name] = res.size() == 1 ? Json(res.front()) : Json(res);
  }
}

Json run_config(const CLI::App& root, const std::string& command, const std::string& action, const Options& o,
                Json outputs) {
  Json params = Json::object();
  collect(&root, params);
  for (const CLI::App* sub : root.get_subcommands()) {
    collect(sub, params);
    for (const CLI::App* leaf : sub->get_subcommands()) collect(leaf, params);
  }
  const nv_budget b = budget_from(o);
  Json j;
  j["command"] = command;
  j["action"] = action;
  j["parameters"] = params;
  j["seed"] = o.seed;
  j["budget"] = {{"max_subsets", b.max_subsets}, {"restarts", b.restarts}, {"max_iters", b.max_iters}};
  j["outputs"] = std::move(outputs);
  j["rng_algorithm"] = nv_rng_algorithm();
  j["version"] = nv_version();
  return j;
}

void write_svg_bodies(const std::string& path, const std::vector<const nv_body*>& layers) {
  char* svg = nullptr;
  check(nv_svg_bodies(layers.data(), layers.size(), &svg));
  write_file(path, take(svg));
}

void write_svg_profile(const std::string& path, const std::vector<double>& xs, const std::vector<double>& ys,
                       const char* x_label, const char* y_label) {
  char* svg = nullptr;
  check(nv_svg_profile(xs.data(), ys.data(), xs.size(), x_label, y_label, &svg));
  write_file(path, take(svg));
}

int cmd_bodies_make(const CLI::App& root, const Options& o) {
  nv_body* raw = nullptr;
  const int n = o.kind == "pair" ? o.k : o.n;
  check(nv_body_make(o.kind.c_str(), o.dim, n, o.radius, &raw));
  Body b(raw, nv_body_free);
  char* text = nullptr;
  check(nv_body_to_json(b.get(), &text));
  Json j = parse(take(text));
  if (o.out.empty()) {
    std::cout << j.dump(2) << "\n";
    return kExitOk;
  }
  j["run"] = run_config(root, "bodies", "make", o, {{"out", o.out}});
  write_file(o.out, j.dump(2) + "\n");
  std::cout << o.out << "\n";
  return kExitOk;
}

int cmd_compute(const CLI::App& root, const std::string& action, const Options& o) {
  Body body = load_body(o.body);
  const nv_budget budget = budget_from(o);
  char* text = nullptr;
  Json result;
  if (action == "qn") {
    check(nv_compute_qn(body.get(), o.n, &budget, &text));
  } else if (action == "cross") {
    check(nv_compute_cross(body.get(), &budget, &text));
  } else if (action == "para") {
    check(nv_compute_para(body.get(), &budget, &text));
  } else if (action == "santalo") {
    check(nv_compute_santalo(body.get(), &budget, &text));
  } else {
    nv_volume_kind kind{};
    check(nv_parse_volume_kind(o.vol.c_str(), &kind));
    check(nv_compute_mu(body.get(), o.n, kind, &budget, nullptr, &text));
  }
  result = parse(take(text));

  if (action == "santalo") {
    std::string line;
    for (const auto& x : result["point"]) line += (line.empty() ? "" : " ") + num(x.get<double>());
    std::cout << line << "\n";
  } else {
    std::cout << num(result["value"].get<double>()) << "\n";
  }

  if (!o.svg.empty()) {
    std::vector<const nv_body*> layers{body.get()};
    Body overlay(nullptr, nv_body_free);
    const Json* wit = action == "mu" ? &result["witness"] : (result.contains("body") ? &result : nullptr);
    if (wit) {
      overlay = body_from_json((*wit)["body"]);
      layers.push_back(overlay.get());
    }
    write_svg_bodies(o.svg, layers);
  }
  if (!o.out.empty()) {
    Json outputs = {{"out", o.out}};
    if (!o.svg.empty()) outputs["svg"] = o.svg;
    Json j;
    j["run"] = run_config(root, "compute", action, o, outputs);
    j["result"] = result;
    write_file(o.out, j.dump(2) + "\n");
  }
  return kExitOk;
}

int cmd_verify(const CLI::App& root, const Options& o) {
  const nv_budget budget = budget_from(o);
  int all_pass = 0;
  char* text = nullptr;
  check(nv_verify_suite(o.suite.c_str(), o.tol, &budget, &all_pass, &text));
  const Json reports = parse(take(text));
  std::size_t passed = 0;
  for (const auto& r : reports) {
    const bool ok = r["pass"].get<bool>();
    passed += ok;
    std::cout << (ok ? "PASS " : "FAIL ") << r["claim_id"].get<std::string>()
              << " computed=" << num(r["computed"].get<double>()) << " expected=" << num(r["expected"].get<double>())
              << " rel_err=" << num(r["rel_err"].get<double>()) << " tol=" << num(r["tol"].get<double>()) << "\n";
  }
  std::cout << "suite " << o.suite << ": " << passed << "/" << reports.size() << " passed\n";
  if (!o.json.empty()) {
    Json j;
    j["run"] = run_config(root, "verify", o.suite, o, {{"json", o.json}});
    j["reports"] = reports;
    write_file(o.json, j.dump(2) + "\n");
  }
  return all_pass ? kExitOk : kExitFail;
}

void csv_sink(const char* row, void* user) { *static_cast<std::ofstream*>(user) << row; }

int cmd_search(const CLI::App& root, const Options& o) {
  const nv_budget budget = budget_from(o);
  std::ofstream csv;
  if (!o.csv.empty()) {
    csv.open(o.csv, std::ios::binary | std::ios::trunc);
    if (!csv) throw CliError{NV_ERR_IO, "cannot write '" + o.csv + "'"};
  }
  char* text = nullptr;
  check(nv_search_conjecture(o.samples, o.seed, o.k_min, o.k_max, &budget, csv.is_open() ? csv_sink : nullptr,
                             csv.is_open() ? &csv : nullptr, &text));
  csv.close();
  Json summary = parse(take(text));
  std::cout << "control product: " << num(summary["control"]["product"].get<double>()) << "\n";
  if (!summary["min"].is_null())
    std::cout << "min product: " << num(summary["min"]["product"].get<double>()) << " (sample "
              << summary["min"]["sample_id"].get<std::uint64_t>() << ")\n";
  std::cout << "evaluated: " << summary["evaluated"].get<std::uint64_t>()
            << " skipped: " << summary["skipped"].get<std::uint64_t>() << "\n";
  const auto flagged = summary["counterexamples"].size();
  Json outputs = Json::object();
  if (!o.csv.empty()) outputs["csv"] = o.csv;
  if (flagged > 0) {
    const std::string path = (o.csv.empty() ? std::string("conjecture") : o.csv) + ".counterexamples.json";
    Json art;
    art["run"] = run_config(root, "search", "conjecture", o, outputs);
    art["counterexamples"] = summary["counterexamples"];
    write_file(path, art.dump(2) + "\n");
    outputs["counterexamples"] = path;
    std::cout << "counterexamples: " << flagged << " flagged, written to " << path << "\n";
  } else {
    std::cout << "counterexamples: 0\n";
  }
  if (!o.out.empty()) {
    outputs["out"] = o.out;
    Json j;
    j["run"] = run_config(root, "search", "conjecture", o, outputs);
    j["summary"] = summary;
    write_file(o.out, j.dump(2) + "\n");
  }
  return kExitOk;
}

int cmd_shadow(const CLI::App& root, const std::string& action, const Options& o) {
  const std::string input = read_file(o.system);
  const nv_budget budget = budget_from(o);
  char* text = nullptr;
  Json result;
  int code = kExitOk;
  if (action == "cascade") {
    check(nv_shadow_cascade(input.c_str(), o.eps, o.max_steps, &text));
    result = parse(take(text));
    const auto trace = result["trace"].get<std::vector<double>>();
    std::cout << "status: " << result["status"].get<std::string>() << "\n"
              << "steps: " << result["steps"].get<std::size_t>() << "\n"
              << "f: " << num(trace.front()) << " -> " << num(trace.back()) << "\n";
    if (!o.svg.empty()) {
      std::vector<double> xs;
      for (std::size_t i = 0; i < trace.size(); ++i) xs.push_back(static_cast<double>(i));
      write_svg_profile(o.svg, xs, trace, "step", "f(Y)");
    }
  } else {
    int pass = 0;
    const nv_profile_kind kind = action == "mr" ? NV_PROFILE_RECIPROCAL_POLAR : NV_PROFILE_VOLUME;
    check(nv_shadow_profile(input.c_str(), kind, o.t_min, o.t_max, o.steps, o.shadow_tol, &budget, &pass, &text));
    result = parse(take(text));
    std::cout << "min second difference: " << num(result["min_second_difference"].get<double>()) << "\n"
              << (pass ? "convex: pass" : "convex: FAIL") << "\n";
    if (!o.svg.empty())
      write_svg_profile(o.svg, result["grid"].get<std::vector<double>>(), result["values"].get<std::vector<double>>(),
                        "t", action == "mr" ? "1/vol((C(t)-s)°)" : "vol(C(t))");
    code = pass ? kExitOk : kExitFail;
  }
  if (!o.out.empty()) {
    Json outputs = {{"out", o.out}};
    if (!o.svg.empty()) outputs["svg"] = o.svg;
    Json j;
    j["run"] = run_config(root, "shadow", action, o, outputs);
    j["result"] = result;
    write_file(o.out, j.dump(2) + "\n");
  }
  return code;
}

void add_budget(CLI::App* app, Options& o) {
  app->add_option("--seed", o.seed, "Seed for every randomized step");
  app->add_option("--max-subsets", o.max_subsets, "Exhaustive enumeration cap");
  app->add_option("--restarts", o.restarts, "Restarts for heuristic solvers");
  app->add_option("--max-iters", o.max_iters, "Iteration cap for iterative solvers");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Normed volumes of inscribed polytopes: extremal solvers and verification suites"};
  app.require_subcommand(1);
  app.set_version_flag("--version", std::string("normvol ") + nv_version() + " (" + nv_rng_algorithm() + ")");
  Options o;

  auto* bodies = app.add_subcommand("bodies", "Construct special bodies");
  bodies->require_subcommand(1);
  auto* make = bodies->add_subcommand("make", "Write a body as JSON");
  make->add_option("--kind", o.kind, "simplex|cross|cube|ngon|symmetral|pair|radon-hexagon")
      ->required()
      ->check(CLI::IsMember({"simplex", "cross", "cube", "ngon", "symmetral", "pair", "radon-hexagon"}));
  make->add_option("--dim", o.dim, "Dimension (2..6)");
  make->add_option("--n", o.n, "Vertex count for ngon");
  make->add_option("--k", o.k, "First simplex dimension for pair");
  make->add_option("--radius", o.radius, "Circumradius for ngon");
  make->add_option("--out", o.out, "Output path (stdout if omitted)");

  auto* compute = app.add_subcommand("compute", "Extremal objects and normed volumes");
  compute->require_subcommand(1);
  std::vector<CLI::App*> compute_subs;
  for (const char* name : {"qn", "cross", "para", "santalo", "mu"}) {
    auto* sub = compute->add_subcommand(name);
    sub->add_option("--body", o.body, "Body JSON")->required();
    if (std::string(name) == "qn" || std::string(name) == "mu") sub->add_option("--n", o.n, "Vertex budget")->required();
    if (std::string(name) == "mu")
      sub->add_option("--vol", o.vol, "bus|ht|mass|mass-star")
          ->required()
          ->check(CLI::IsMember({"bus", "ht", "mass", "mass-star"}));
    sub->add_option("--out", o.out, "Result JSON path");
    sub->add_option("--svg", o.svg, "SVG of the body and witness (plane only)");
    add_budget(sub, o);
    compute_subs.push_back(sub);
  }
  compute_subs[0]->description("Largest inscribed polytope with at most n vertices");
  compute_subs[1]->description("Largest inscribed cross-polytope");
  compute_subs[2]->description("Smallest circumscribed parallelotope");
  compute_subs[3]->description("Santalo point");
  compute_subs[4]->description("Normed volume of Q_n");

  auto* verify = app.add_subcommand("verify", "Run a verification suite");
  verify->add_option("--suite", o.suite, "bus-max|bus-plane|macbeath|ht-plane|mass|mass-star|ht-simplex|combinatorics|shadow|all")
      ->required();
  verify->add_option("--tol", o.tol, "Tolerance (checks with a tighter pinned tolerance keep it)");
  verify->add_option("--json", o.json, "Reports JSON path");
  add_budget(verify, o);

  auto* search = app.add_subcommand("search", "Randomized searches");
  search->require_subcommand(1);
  auto* conj = search->add_subcommand("conjecture", "lambda(Q_6(B)) lambda(B°) >= 8 over random symmetric polygons");
  conj->add_option("--samples", o.samples, "Random samples besides the control")->check(CLI::PositiveNumber);
  conj->add_option("--csv", o.csv, "CSV stream path");
  conj->add_option("--k-min", o.k_min, "Fewest random directions");
  conj->add_option("--k-max", o.k_max, "Most random directions");
  conj->add_option("--out", o.out, "Summary JSON path");
  add_budget(conj, o);

  auto* shadow = app.add_subcommand("shadow", "Shadow systems");
  shadow->require_subcommand(1);
  std::vector<CLI::App*> shadow_subs;
  for (const char* name : {"profile", "mr", "cascade"}) {
    auto* sub = shadow->add_subcommand(name);
    sub->add_option("--system", o.system, "System JSON")->required();
    sub->add_option("--svg", o.svg, "SVG of the profile or trace");
    sub->add_option("--out", o.out, "Result JSON path");
    if (std::string(name) == "cascade") {
      sub->add_option("--eps", o.eps, "Stop once f <= eps");
      sub->add_option("--max-steps", o.max_steps, "Projection cap");
    } else {
      sub->add_option("--t-min", o.t_min, "Grid start");
      sub->add_option("--t-max", o.t_max, "Grid end");
      sub->add_option("--steps", o.steps, "Grid points");
      sub->add_option("--tol", o.shadow_tol, "Convexity tolerance (default 1e-8 volume, 1e-6 mr)");
    }
    add_budget(sub, o);
    shadow_subs.push_back(sub);
  }
  shadow_subs[0]->description("Volume profile t -> vol(C(t)) with convexity check");
  shadow_subs[1]->description("Reciprocal Santalo-centred polar volume profile with convexity check");
  shadow_subs[2]->description("Greedy projection cascade");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitInput;
  }

  try {
    if (make->parsed()) return cmd_bodies_make(app, o);
    for (auto* sub : compute_subs)
      if (sub->parsed()) return cmd_compute(app, sub->get_name(), o);
    if (verify->parsed()) return cmd_verify(app, o);
    if (conj->parsed()) return cmd_search(app, o);
    for (auto* sub : shadow_subs)
      if (sub->parsed()) return cmd_shadow(app, sub->get_name(), o);
  } catch (const CliError& e) {
    std::cerr << "error: " << nv_status_name(e.status) << ": " << e.message << "\n";
    return kExitInput;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInput;
  }
  std::cerr << app.help();
  return kExitInput;
}
