// Copyright 2026 The cubesep Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.


#include "cubesep/experiment.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <cstdlib>
#include <map>
#include <mutex>
#include <sstream>
#include <thread>
#include <utility>

#include <boost/multiprecision/cpp_int.hpp>

#include "cubesep/construction.hpp"
#include "cubesep/cuts.hpp"
#include "cubesep/decomposition.hpp"
#include "cubesep/error.hpp"
#include "cubesep/oracles.hpp"
#include "cubesep/spectral.hpp"
#include "cubesep/sse.hpp"

namespace cubesep {
namespace {

using BigInt = boost::multiprecision::cpp_int;

std::int64_t i64(std::size_t v) { return static_cast<std::int64_t>(v); }

// ---------------------------------------------------------------- spec

const Json& param(const ExperimentSpec& spec, const char* name) {
  static const Json kNull;
  return spec.params.contains(name) ? spec.params.at(name) : kNull;
}

std::int64_t int_param(const ExperimentSpec& spec, const char* name, std::int64_t fallback) {
  const Json& v = param(spec, name);
  if (v.is_null()) return fallback;
  if (!v.is_number_integer()) {
    throw InvalidArgument(std::string("$.params.") + name + ": expected an integer");
  }
  return v.get<std::int64_t>();
}

double real_param(const ExperimentSpec& spec, const char* name, double fallback) {
  const Json& v = param(spec, name);
  if (v.is_null()) return fallback;
  if (!v.is_number()) throw InvalidArgument(std::string("$.params.") + name + ": expected a number");
  return v.get<double>();
}

Fraction fraction_param(const ExperimentSpec& spec, const char* name, const Fraction& fallback) {
  const Json& v = param(spec, name);
  if (v.is_null()) return fallback;
  try {
    return fraction_from_json(v);
  } catch (const Error& e) {
    throw InvalidArgument(std::string("$.params.") + name + ": " + e.what());
  }
}

std::string string_param(const ExperimentSpec& spec, const char* name, const std::string& fallback) {
  const Json& v = param(spec, name);
  if (v.is_null()) return fallback;
  if (!v.is_string()) throw InvalidArgument(std::string("$.params.") + name + ": expected a string");
  return v.get<std::string>();
}

// ---------------------------------------------------------------- checks

struct CheckDefault {
  const char* anchor;
  bool hard;
};

const std::map<std::string, CheckDefault>& check_catalogue() {
  static const std::map<std::string, CheckDefault> kChecks = {
      {"max-degree-cap", {"construction-degree-cap", true}},
      {"short-cycle-free", {"construction-girth", true}},
      {"average-degree", {"construction-average-degree", true}},
      {"cut-recount", {"cut-bookkeeping", true}},
      {"coordinate-cut-expansion-bound", {"coordinate-cut-expansion-bound", true}},
      {"average-distance-bound", {"coordinate-cut-distance-averaging", true}},
      {"separator-balance", {"separator-two-thirds-balance", true}},
      {"boost-max-ratio", {"boost-max-ratio-inequality", true}},
      {"sse-disjoint", {"small-set-family-disjoint", true}},
      {"sse-size-window", {"small-set-size-window", true}},
      {"sse-family-size", {"small-set-family-size", true}},
      {"sse-double-counting", {"small-set-boundary-double-counting", true}},
      {"sse-step-accounting", {"small-set-step-bound", true}},
      {"sse-averaging-certified", {"small-set-averaging-selection", false}},
      {"decomposition-threshold", {"decomposition-expansion-threshold", true}},
      {"decomposition-edge-budget", {"decomposition-removed-edge-budget", false}},
      {"spectrum-top-eigenvalue", {"regularized-top-eigenvalue", true}},
      {"spectrum-trace", {"regularized-trace", true}},
      {"rank-bound-consistent", {"threshold-rank-certified-bound", true}},
      {"cheeger-inequality", {"higher-order-cheeger", true}},
      {"oracle-separator-balance", {"separator-two-thirds-balance", true}},
      {"vertex-separator-not-above-edge-separator", {"vertex-vs-edge-separator", true}},
      {"boost-not-below-oracle", {"separator-oracle-minimum", true}},
      {"girth-expansion-bound", {"girth-from-expansion", true}},
      {"sparse-component-formula", {"sparse-component-expansion", true}},
  };
  return kChecks;
}

class CheckList {
 public:
  explicit CheckList(const ExperimentSpec& spec) : spec_(spec) {}

  void add(const std::string& name, bool passed, std::string detail = {}) {
    const auto& entry = check_catalogue().at(name);
    const bool hard = spec_.assertions ? spec_.assertions->contains(name) : entry.hard;
    checks_.push_back({name, entry.anchor, passed, hard, std::move(detail)});
  }

  Json to_json() const {
    Json out = Json::array();
    for (const auto& c : checks_) out.push_back(cubesep::to_json(c));
    return out;
  }

  std::vector<std::string> hard_failures() const {
    std::vector<std::string> out;
    for (const auto& c : checks_) {
      if (c.hard && !c.passed) out.push_back(c.name + (c.detail.empty() ? "" : ": " + c.detail));
    }
    return out;
  }

 private:
  const ExperimentSpec& spec_;
  std::vector<Check> checks_;
};

// ---------------------------------------------------------------- helpers

VertexSet largest_component(const Graph& g) {
  const auto parts = components(g);
  const Component* pick = &parts.front();
  for (const auto& c : parts) {
    if (c.vertices.size() > pick->vertices.size()) pick = &c;
  }
  return pick->vertices;
}

VertexSet to_host(const VertexSet& local, const VertexSet& host) {
  std::vector<Vertex> out;
  out.reserve(local.size());
  for (Vertex v : local) out.push_back(host[v]);
  return VertexSet(std::move(out));
}

std::vector<Edge> edges_to_host(const std::vector<Edge>& local, const VertexSet& host) {
  std::vector<Edge> out;
  out.reserve(local.size());
  for (const Edge& e : local) out.emplace_back(host[e.u], host[e.v]);
  std::sort(out.begin(), out.end());
  return out;
}

SparseCutStrategy cut_strategy_for(const Graph& h) {
  if (h.num_vertices() <= kExactExpansionBudget) return exact_cut_strategy();
  if (h.has_labels()) return coordinate_cut_strategy();
  return spectral_sweep_strategy();
}

struct Context {
  const ExperimentSpec& spec;
  std::uint64_t seed;
  Graph graph;
  std::optional<ConstructionTrace> trace;
  VertexSet component;  // largest component, host ids
  Graph component_graph;
  Json steps = Json::object();
  CheckList checks;
  std::optional<std::size_t> boost_size;
};

Graph acquire_graph(const ExperimentSpec& spec, std::uint64_t seed,
                    std::optional<ConstructionTrace>& trace) {
  const std::string source = string_param(spec, "source", "gnk");
  if (source == "file") {
    const std::string rel = string_param(spec, "graph", "");
    if (rel.empty()) throw InvalidArgument("$.params.graph: required when source is 'file'");
    return load_graph(spec.base_dir / rel);
  }
  const auto d = int_param(spec, "d", 12);
  if (source == "cube") return full_cube(CubeDim(static_cast<int>(d)));
  if (source != "gnk") {
    throw InvalidArgument("$.params.source: expected gnk|cube|file, got '" + source + "'");
  }
  if (d < 1 || d > 63) throw InvalidArgument("$.params.d: must lie in [1, 63]");
  ConstructionParams params;
  params.d = CubeDim(static_cast<int>(d));
  params.k = static_cast<int>(int_param(spec, "k", 2));
  params.seed = seed;
  const std::int64_t full = d < 63 ? (std::int64_t{1} << d) : 0;
  params.n = static_cast<std::uint64_t>(int_param(spec, "n", full));
  auto out = build_gnk(params, static_cast<int>(int_param(spec, "retry_budget", kDefaultRetryBudget)));
  trace = out.trace;
  return std::move(out.graph);
}

void step_generate(Context& ctx) {
  if (!ctx.trace) {
    ctx.steps["generate"] = Json{{"source", string_param(ctx.spec, "source", "gnk")}};
    return;
  }
  const auto& t = *ctx.trace;
  ctx.steps["generate"] = to_json(t);
  const int k = static_cast<int>(int_param(ctx.spec, "k", 2));
  ctx.checks.add("max-degree-cap", ctx.graph.max_degree() <= static_cast<std::size_t>(6 * k),
                 "max degree " + std::to_string(ctx.graph.max_degree()));
  const auto limit = t.cycle_length_limit;
  const auto floor_limit = static_cast<std::size_t>(limit.numerator() / limit.denominator());
  ctx.checks.add("short-cycle-free", !has_cycle_at_most(ctx.graph, floor_limit),
                 "limit " + to_string(limit));
  ctx.checks.add("average-degree", average_degree(ctx.graph) >= Fraction(k),
                 "average degree " + to_string(average_degree(ctx.graph)));
}

void step_cut(Context& ctx) {
  const Graph& h = ctx.component_graph;
  if (h.num_vertices() < 2 || h.num_edges() == 0) {
    throw InvalidArgument("cut: largest component has no edge");
  }
  std::string method =
      string_param(ctx.spec, "cut_method", h.has_labels() ? "coordinate" : "exact");
  CutResult local;
  Json extra = Json::object();
  if (method == "coordinate") {
    const CoordinateCut cc = coordinate_cut(h);
    local = cc.cut;
    extra["coordinate"] = cc.coordinate;
    // Σ_i y_i is the sum of Hamming distances over all pairs.
    BigInt pair_distance_sum = 0;
    for (const auto& s : cc.scores) pair_distance_sum += s.separated_pairs;
    const std::size_t t = h.num_vertices();
    const Fraction r = average_degree(h);
    const Fraction& phi = local.expansion;
    if (t >= 3) {
      const bool ok = log_product_leq(phi, Fraction(i64(t), 2), 2 * r,
                                      Fraction(h.label_dim()));
      ctx.checks.add("coordinate-cut-expansion-bound", ok,
                     "phi " + to_string(phi) + ", r " + to_string(r) + ", t " + std::to_string(t));
    }
    // mean pair distance <= r / phi
    const BigInt pairs = BigInt(t) * BigInt(t - 1) / 2;
    const BigInt lhs = pair_distance_sum * phi.numerator() * r.denominator();
    const BigInt rhs = BigInt(r.numerator()) * phi.denominator() * pairs;
    ctx.checks.add("average-distance-bound", lhs <= rhs);
  } else if (method == "exact") {
    local = min_edge_expansion(h);
  } else if (method == "spectral") {
    local = spectral_sweep_cut(h);
  } else {
    throw InvalidArgument("$.params.cut_method: expected coordinate|exact|spectral");
  }
  const VertexSet host = to_host(local.set, ctx.component);
  const CutResult recount = edge_expansion_of_set(ctx.graph, host);
  ctx.checks.add("cut-recount", recount.boundary_size == local.boundary_size &&
                                    recount.expansion == local.expansion);
  Json j = to_json(ctx.graph, CutResult{host, local.boundary_size, local.expansion});
  j["method"] = method;
  j["component_size"] = h.num_vertices();
  for (auto& [key, value] : extra.items()) j[key] = value;
  ctx.steps["cut"] = std::move(j);
}

std::size_t largest_piece(const Graph& g, const VertexSet& region, const std::vector<Edge>& removed) {
  GraphBuilder b(g);
  for (const Edge& e : removed) b.remove_edge(e.u, e.v);
  std::size_t best = 0;
  for (const auto& c : components(b.build())) {
    if (region.contains(c.vertices[0])) best = std::max(best, c.vertices.size());
  }
  return best;
}

void step_boost(Context& ctx) {
  const Graph& h = ctx.component_graph;
  if (h.num_vertices() < 2) throw InvalidArgument("boost: largest component is a single vertex");
  const BoostResult b = boost_separator(h, cut_strategy_for(h));
  const auto removed = edges_to_host(b.separator.removed_edges, ctx.component);
  const std::size_t t = h.num_vertices();
  const std::size_t piece = largest_piece(ctx.graph, ctx.component, removed);
  ctx.checks.add("separator-balance", piece <= balance_limit(t),
                 "largest piece " + std::to_string(piece) + " of " + std::to_string(t));
  ctx.checks.add("boost-max-ratio", b.max_ratio_certified);
  ctx.boost_size = removed.size();
  Json j;
  j["component"] = vertex_set_json(ctx.component);
  j["removed_edges"] = edges_json(removed);
  j["size"] = removed.size();
  j["side"] = vertex_set_json(to_host(b.separator.side, ctx.component));
  j["max_step_expansion"] = fraction_json(b.max_step_expansion);
  j["max_ratio_certified"] = b.max_ratio_certified;
  j["steps"] = to_json(b)["steps"];
  ctx.steps["boost"] = std::move(j);
}

void step_sse(Context& ctx) {
  const Graph& h = ctx.component_graph;
  const Fraction mu = fraction_param(ctx.spec, "mu", Fraction(1, 8));
  const SseResult r = extract_disjoint_family(h, mu, default_separator_strategy());
  const std::size_t t = h.num_vertices();

  std::vector<bool> seen(t, false);
  bool disjoint = true;
  bool window = true;
  for (const auto& s : r.sets) {
    window = window && s.size() >= r.window_low && s.size() <= r.window_high;
    for (Vertex v : s) {
      disjoint = disjoint && !seen[v];
      seen[v] = true;
    }
  }
  ctx.checks.add("sse-disjoint", disjoint);
  ctx.checks.add("sse-size-window", window);
  const Fraction quarter = 1 / (4 * mu);
  const auto needed = static_cast<std::size_t>(
      (quarter.numerator() + quarter.denominator() - 1) / quarter.denominator());
  ctx.checks.add("sse-family-size", r.sets.size() >= needed,
                 std::to_string(r.sets.size()) + " of " + std::to_string(needed));
  ctx.checks.add("sse-double-counting", r.boundary_sum_in_h <= 2 * r.boundary_sum_in_residual);
  bool steps_ok = true;
  for (const auto& e : r.extracted) {
    for (const auto& s : e.trace.steps) {
      const Fraction mediant(i64(s.parent_boundary + 2 * s.separator_size), i64(s.parent_size));
      steps_ok = steps_ok && s.child_expansion <= s.step_bound &&
                 std::min(s.child_expansion, s.sibling_expansion) <= mediant;
    }
  }
  ctx.checks.add("sse-step-accounting", steps_ok);
  ctx.checks.add("sse-averaging-certified", r.averaging_certified);

  Json j = to_json(r);
  j["component"] = vertex_set_json(ctx.component);
  Json sets = Json::array();
  for (const auto& s : r.sets) sets.push_back(vertex_set_json(to_host(s, ctx.component)));
  j["sets"] = std::move(sets);
  for (std::size_t i = 0; i < r.extracted.size(); ++i) {
    j["extracted"][i]["set"] = vertex_set_json(to_host(r.extracted[i].set, ctx.component));
  }
  ctx.steps["sse"] = std::move(j);
}

void step_decompose(Context& ctx) {
  const Fraction eps = fraction_param(ctx.spec, "epsilon", Fraction(1, 2));
  const DecomposeMode mode = parse_decompose_mode(string_param(ctx.spec, "mode", "heuristic"));
  const DecompositionResult r = trevisan_decompose(ctx.graph, eps, mode);
  bool certified_ok = true;
  for (const auto& c : r.components) {
    if (c.status == ComponentStatus::kCertified && c.best_expansion) {
      certified_ok = certified_ok &&
                     !below_decomposition_threshold(*c.best_expansion, eps, ctx.graph.num_vertices());
    }
  }
  ctx.checks.add("decomposition-threshold", certified_ok);
  ctx.checks.add("decomposition-edge-budget", r.within_epsilon_budget,
                 "removed " + to_string(r.removed_fraction));
  ctx.steps["decompose"] = to_json(r);
}

void step_spectrum(Context& ctx) {
  const int target = static_cast<int>(
      int_param(ctx.spec, "regularize", static_cast<std::int64_t>(ctx.graph.max_degree())));
  const double tau = real_param(ctx.spec, "tau", 0.5);
  const SpectrumReport report = spectrum(regularize(ctx.graph, target));
  const double tol = report.residual_tolerance * std::max(1, target);
  ctx.checks.add("spectrum-top-eigenvalue",
                 report.eigenvalues.empty() || report.eigenvalues.front() <= target + tol);
  double sum = 0.0;
  for (double l : report.eigenvalues) sum += l;
  double loops = 0.0;
  for (Vertex v = 0; v < ctx.graph.num_vertices(); ++v) {
    loops += target - static_cast<double>(ctx.graph.degree(v));
  }
  ctx.checks.add("spectrum-trace",
                 std::fabs(sum - loops) <= tol * std::max<double>(1.0, ctx.graph.num_vertices()));
  Json j = to_json(report);
  j["tau"] = tau;
  j["threshold_rank"] = to_json(threshold_rank(report, tau));
  ctx.steps["spectrum"] = std::move(j);
}

void step_rank(Context& ctx) {
  const double eta = real_param(ctx.spec, "eta", 0.5);
  const double remove = real_param(ctx.spec, "remove", 0.0);
  std::optional<Fraction> mu;
  if (!param(ctx.spec, "rank_mu").is_null()) mu = fraction_param(ctx.spec, "rank_mu", Fraction(1));
  const RankExperimentRecord r = rank_experiment(ctx.graph, eta, remove, ctx.seed, mu);
  if (r.spectrum_computed) {
    ctx.checks.add("rank-bound-consistent", r.bound_consistent,
                   "b " + std::to_string(r.certified_lower_bound) + ", rank high " +
                       std::to_string(r.measured_rank->high));
  }
  if (r.cheeger) ctx.checks.add("cheeger-inequality", r.cheeger->holds);
  ctx.steps["rank-experiment"] = to_json(r);
}

void step_oracle(Context& ctx) {
  const Graph& g = ctx.graph;
  Json j = Json::object();
  const SeparatorResult edge = exact_edge_separator(g);
  const SeparatorResult vertex = exact_vertex_separator(g, VertexBalance::kOriginal);
  const std::size_t limit = balance_limit(g.num_vertices());
  ctx.checks.add("oracle-separator-balance",
                 largest_component_after_edge_removal(g, edge.removed_edges) <= limit &&
                     largest_component_after_vertex_removal(g, vertex.removed_vertices) <= limit);
  ctx.checks.add("vertex-separator-not-above-edge-separator", vertex.size() <= edge.size());
  if (ctx.boost_size && ctx.component.size() == g.num_vertices()) {
    ctx.checks.add("boost-not-below-oracle", *ctx.boost_size >= edge.size());
  }
  j["edge_separator"] = to_json(edge);
  j["vertex_separator"] = to_json(vertex);
  if (g.num_vertices() >= 2) j["min_expansion"] = to_json(g, reference_min_edge_expansion(g));
  if (g.num_vertices() <= kOracleGirthBudget) j["girth"] = girth_json(reference_girth(g));
  ctx.steps["oracle"] = std::move(j);
}

void step_girth_audit(Context& ctx) {
  const GirthAudit a = girth_expansion_audit(ctx.graph);
  ctx.checks.add("girth-expansion-bound", a.holds);
  ctx.steps["girth-audit"] = to_json(a);
}

void step_sparse_demo(Context& ctx) {
  const int k = static_cast<int>(int_param(ctx.spec, "k", 2));
  const SparseComponentDemo d =
      sparse_component_demo(ctx.graph, k, ctx.seed, fraction_param(ctx.spec, "target_degree", Fraction(4)));
  ctx.checks.add("sparse-component-formula", d.below_formula);
  ctx.steps["sparse-demo"] = to_json(d);
}

using StepFn = void (*)(Context&);

const std::map<std::string, StepFn>& step_table() {
  static const std::map<std::string, StepFn> kSteps = {
      {"generate", step_generate},    {"cut", step_cut},
      {"boost", step_boost},          {"sse", step_sse},
      {"decompose", step_decompose},  {"spectrum", step_spectrum},
      {"rank-experiment", step_rank}, {"oracle", step_oracle},
      {"girth-audit", step_girth_audit}, {"sparse-demo", step_sparse_demo},
  };
  return kSteps;
}

// known_girth comes from the construction trace of the same graph.
Json graph_summary(const Graph& g, const std::optional<Girth>& known_girth) {
  return {{"n", g.num_vertices()},
          {"m", g.num_edges()},
          {"max_degree", g.max_degree()},
          {"avg_degree", fraction_json(average_degree(g))},
          {"girth", girth_json(known_girth ? *known_girth : girth(g))}};
}

std::string seed_stem(std::uint64_t seed) { return "seed-" + std::to_string(seed) + ".json"; }

// ---------------------------------------------------------------- verify

// Edges with exactly one endpoint flagged, counted directly.
std::size_t crossing(const Graph& g, const std::vector<bool>& inside) {
  std::size_t count = 0;
  for (const Edge& e : g.edges()) count += inside[e.u] != inside[e.v] ? 1 : 0;
  return count;
}

std::vector<bool> membership(std::size_t n, const VertexSet& s) {
  std::vector<bool> inside(n, false);
  for (Vertex v : s) {
    if (v >= n) throw InvalidArgument("vertex " + std::to_string(v) + " out of range");
    inside[v] = true;
  }
  return inside;
}

// Sizes of the pieces left in `region` after deleting edges, by union-find.
std::vector<std::size_t> piece_sizes(const Graph& g, const std::vector<bool>& region,
                                     const std::set<Edge>& removed,
                                     const std::vector<bool>& dropped_vertices = {}) {
  const std::size_t n = g.num_vertices();
  std::vector<Vertex> parent(n);
  for (Vertex v = 0; v < n; ++v) parent[v] = v;
  const auto find = [&](Vertex v) {
    while (parent[v] != v) v = parent[v] = parent[parent[v]];
    return v;
  };
  const auto gone = [&](Vertex v) { return !dropped_vertices.empty() && dropped_vertices[v]; };
  for (const Edge& e : g.edges()) {
    if (removed.contains(e) || gone(e.u) || gone(e.v)) continue;
    parent[find(e.u)] = find(e.v);
  }
  std::map<Vertex, std::size_t> sizes;
  for (Vertex v = 0; v < n; ++v) {
    if (region[v] && !gone(v)) ++sizes[find(v)];
  }
  std::vector<std::size_t> out;
  for (const auto& [root, size] : sizes) out.push_back(size);
  return out;
}

std::size_t max_of(const std::vector<std::size_t>& v) {
  return v.empty() ? 0 : *std::max_element(v.begin(), v.end());
}

class Verifier {
 public:
  Verifier(const Graph& g, RecordVerdict& verdict) : g_(g), verdict_(verdict) {}

  void expect(bool ok, const std::string& what) {
    if (!ok) verdict_.problems.push_back(what);
  }

  void graph_summary_matches(const Json& s) {
    expect(s.at("n").get<std::size_t>() == g_.num_vertices(), "graph.n mismatch");
    expect(s.at("m").get<std::size_t>() == g_.num_edges(), "graph.m mismatch");
    expect(s.at("max_degree").get<std::size_t>() == g_.max_degree(), "graph.max_degree mismatch");
    expect(fraction_from_json(s.at("avg_degree")) ==
               Fraction(2 * i64(g_.num_edges()), std::max<std::int64_t>(1, i64(g_.num_vertices()))) ||
               g_.num_vertices() == 0,
           "graph.avg_degree mismatch");
  }

  void cut(const Json& c) {
    const VertexSet set = vertex_set_from_json(c.at("set"));
    const std::size_t boundary = crossing(g_, membership(g_.num_vertices(), set));
    expect(boundary == c.at("boundary_size").get<std::size_t>(), "cut.boundary_size recount differs");
    expect(!set.empty() && fraction_from_json(c.at("expansion")) == Fraction(i64(boundary), i64(set.size())),
           "cut.expansion recount differs");
    expect(c.at("boundary_edges").size() == boundary, "cut.boundary_edges count differs");
  }

  void boost(const Json& b) {
    const VertexSet comp = vertex_set_from_json(b.at("component"));
    const auto region = membership(g_.num_vertices(), comp);
    const auto removed_list = edges_from_json(b.at("removed_edges"));
    const std::set<Edge> removed(removed_list.begin(), removed_list.end());
    for (const Edge& e : removed) expect(g_.has_edge(e.u, e.v), "boost removes a non-edge");
    const std::size_t largest = max_of(piece_sizes(g_, region, removed));
    expect(3 * largest <= 2 * comp.size(), "boost separator is not 2/3-balanced");
    const VertexSet side = vertex_set_from_json(b.at("side"));
    const auto inside = membership(g_.num_vertices(), side);
    std::size_t across = 0;
    for (const Edge& e : g_.edges()) across += region[e.u] && inside[e.u] != inside[e.v] ? 1 : 0;
    expect(across == removed.size(), "boost separator differs from the side boundary");
  }

  void sse(const Json& s) {
    const VertexSet comp = vertex_set_from_json(s.at("component"));
    const Fraction mu = fraction_from_json(s.at("mu"));
    const auto t = i64(comp.size());
    const Fraction hi = mu * t;
    const Fraction lo = mu * t / 3;
    std::vector<bool> used(g_.num_vertices(), false);
    const auto& sets = s.at("sets");
    const auto& expansions = s.at("expansions_in_h");
    expect(sets.size() == expansions.size(), "sse.sets and expansions differ in length");
    const Fraction quarter = 1 / (4 * mu);
    expect(Fraction(i64(sets.size())) >= quarter, "sse family smaller than 1/(4 mu)");
    for (std::size_t i = 0; i < sets.size(); ++i) {
      const VertexSet a = vertex_set_from_json(sets[i]);
      expect(Fraction(i64(a.size())) >= lo && Fraction(i64(a.size())) <= hi,
             "sse set " + std::to_string(i) + " outside the size window");
      for (Vertex v : a) {
        expect(v < g_.num_vertices() && comp.contains(v) && !used[v],
               "sse set " + std::to_string(i) + " overlaps or leaves the component");
        if (v < g_.num_vertices()) used[v] = true;
      }
      if (i < expansions.size() && !a.empty()) {
        const std::size_t b = crossing(g_, membership(g_.num_vertices(), a));
        expect(fraction_from_json(expansions[i]) == Fraction(i64(b), i64(a.size())),
               "sse expansion " + std::to_string(i) + " recount differs");
      }
    }
    // Σ ∂_H(A_i) <= 2 Σ ∂_residual(A_i), with residuals rebuilt in order.
    std::vector<bool> residual = membership(g_.num_vertices(), comp);
    std::size_t sum_h = 0;
    std::size_t sum_res = 0;
    for (const auto& item : s.at("extracted")) {
      const VertexSet a = vertex_set_from_json(item.at("set"));
      const auto inside = membership(g_.num_vertices(), a);
      for (const Edge& e : g_.edges()) {
        if (inside[e.u] == inside[e.v]) continue;
        ++sum_h;
        sum_res += residual[e.u] && residual[e.v] ? 1 : 0;
      }
      for (Vertex v : a) residual[v] = false;
    }
    expect(sum_h == s.at("boundary_sum_in_h").get<std::size_t>(), "sse boundary_sum_in_h differs");
    expect(sum_res == s.at("boundary_sum_in_residual").get<std::size_t>(),
           "sse boundary_sum_in_residual differs");
    expect(sum_h <= 2 * sum_res, "sse double counting fails");
  }

  void decompose(const Json& d) {
    const auto removed_list = edges_from_json(d.at("removed_edges"));
    const std::set<Edge> removed(removed_list.begin(), removed_list.end());
    for (const Edge& e : removed) expect(g_.has_edge(e.u, e.v), "decomposition removes a non-edge");
    std::vector<std::size_t> recorded;
    for (const auto& c : d.at("components")) recorded.push_back(c.at("vertices").size());
    auto actual = piece_sizes(g_, std::vector<bool>(g_.num_vertices(), true), removed);
    std::sort(recorded.begin(), recorded.end());
    std::sort(actual.begin(), actual.end());
    expect(recorded == actual, "decomposition components differ from the recount");
    expect(fraction_from_json(d.at("removed_fraction")) ==
               (g_.num_edges() == 0 ? Fraction(0) : Fraction(i64(removed.size()), i64(g_.num_edges()))),
           "decomposition removed_fraction differs");
  }

  void spectrum(const Json& s) {
    const auto& eig = s.at("eigenvalues");
    const int target = s.at("degree_target").get<int>();
    const double tol = s.at("residual_tolerance").get<double>() * std::max(1, target);
    expect(eig.size() == g_.num_vertices(), "spectrum has the wrong number of eigenvalues");
    double sum = 0.0;
    double prev = 0.0;
    for (std::size_t i = 0; i < eig.size(); ++i) {
      const double l = eig[i].get<double>();
      expect(i == 0 || l <= prev, "spectrum is not sorted");
      prev = l;
      sum += l;
    }
    double trace = 0.0;
    for (Vertex v = 0; v < g_.num_vertices(); ++v) trace += target - static_cast<double>(g_.degree(v));
    expect(std::fabs(sum - trace) <= tol * std::max<double>(1.0, g_.num_vertices()),
           "spectrum trace differs from the loop count");
    expect(eig.empty() || eig[0].get<double>() <= target + tol, "top eigenvalue exceeds the degree");
  }

  void rank(const Json& r) {
    const double eta = r.at("eta").get<double>();
    const int target = r.at("degree_target").get<int>();
    expect(static_cast<std::size_t>(target) == g_.max_degree(), "rank degree_target is not max degree");
    std::size_t count = 0;
    for (const auto& f : r.at("family_expansions")) {
      count += 2.0 * to_double(fraction_from_json(f)) < eta * target ? 1 : 0;
    }
    const std::size_t b = r.at("certified_lower_bound").get<std::size_t>();
    expect(b == std::max<std::size_t>(1, count), "certified lower bound recount differs");
    if (!r.at("measured_rank").is_null()) {
      expect(b <= r.at("measured_rank").at("high").get<std::size_t>(),
             "certified lower bound exceeds the measured rank");
    }
  }

  void oracle(const Json& o) {
    const std::vector<bool> all(g_.num_vertices(), true);
    const std::size_t n = g_.num_vertices();
    const auto edges = edges_from_json(o.at("edge_separator").at("removed_edges"));
    const std::size_t largest = max_of(piece_sizes(g_, all, std::set<Edge>(edges.begin(), edges.end())));
    expect(n <= 1 || 3 * largest <= 2 * n, "oracle edge separator is not balanced");
    const auto& vs = o.at("vertex_separator").at("removed_vertices");
    std::vector<bool> dropped(n, false);
    for (const auto& v : vs) dropped.at(v.get<Vertex>()) = true;
    const std::size_t largest_v = max_of(piece_sizes(g_, all, {}, dropped));
    expect(n <= 1 || 3 * largest_v <= 2 * n, "oracle vertex separator is not balanced");
    expect(vs.size() <= edges.size(), "vertex separator larger than edge separator");
    if (o.contains("min_expansion")) cut(o.at("min_expansion"));
  }

  void girth_audit(const Json& a) {
    const Girth actual = girth(g_);
    expect(!actual.is_acyclic() && *actual.length == a.at("girth").get<std::size_t>(),
           "girth audit: girth recount differs");
    const GirthBound bound = girth_bound(fraction_from_json(a.at("alpha")),
                                         static_cast<double>(g_.num_vertices()));
    expect(!actual.is_acyclic() && static_cast<double>(*actual.length) <= bound.general,
           "girth audit: bound violated");
  }

 private:
  const Graph& g_;
  RecordVerdict& verdict_;
};

}  // namespace

// ---------------------------------------------------------------- public

const std::vector<std::string>& known_steps() {
  static const std::vector<std::string> kNames = [] {
    std::vector<std::string> out;
    for (const auto& [name, fn] : step_table()) out.push_back(name);
    return out;
  }();
  return kNames;
}

ExperimentSpec parse_experiment_spec(const Json& j, const std::filesystem::path& base_dir) {
  if (!j.is_object()) throw InvalidArgument("$: experiment spec must be an object");
  if (!j.contains("schema") || !j.at("schema").is_number_integer() ||
      j.at("schema").get<int>() != kExperimentSchema) {
    throw InvalidArgument("$.schema: must be " + std::to_string(kExperimentSchema));
  }
  for (const auto& [key, value] : j.items()) {
    if (key != "schema" && key != "pipeline" && key != "params" && key != "seeds" &&
        key != "assertions") {
      throw InvalidArgument("$." + key + ": unknown field");
    }
  }
  ExperimentSpec spec;
  spec.base_dir = base_dir;
  if (!j.contains("pipeline") || !j.at("pipeline").is_array()) {
    throw InvalidArgument("$.pipeline: must be an array of step names");
  }
  const auto& pipeline = j.at("pipeline");
  for (std::size_t i = 0; i < pipeline.size(); ++i) {
    const std::string where = "$.pipeline[" + std::to_string(i) + "]";
    if (!pipeline[i].is_string()) throw InvalidArgument(where + ": must be a string");
    const auto name = pipeline[i].get<std::string>();
    if (!step_table().contains(name)) throw InvalidArgument(where + ": unknown step '" + name + "'");
    spec.pipeline.push_back(name);
  }
  if (j.contains("params")) {
    if (!j.at("params").is_object()) throw InvalidArgument("$.params: must be an object");
    spec.params = j.at("params");
  }
  if (!j.contains("seeds") || !j.at("seeds").is_array()) {
    throw InvalidArgument("$.seeds: must be an array of unsigned integers");
  }
  const auto& seeds = j.at("seeds");
  for (std::size_t i = 0; i < seeds.size(); ++i) {
    if (!seeds[i].is_number_unsigned()) {
      throw InvalidArgument("$.seeds[" + std::to_string(i) + "]: must be an unsigned integer");
    }
    spec.seeds.push_back(seeds[i].get<std::uint64_t>());
  }
  if (std::set<std::uint64_t>(spec.seeds.begin(), spec.seeds.end()).size() != spec.seeds.size()) {
    throw InvalidArgument("$.seeds: duplicate seed");
  }
  if (j.contains("assertions")) {
    const auto& a = j.at("assertions");
    if (!a.is_array()) throw InvalidArgument("$.assertions: must be an array of check names");
    std::set<std::string> names;
    for (std::size_t i = 0; i < a.size(); ++i) {
      const std::string where = "$.assertions[" + std::to_string(i) + "]";
      if (!a[i].is_string()) throw InvalidArgument(where + ": must be a string");
      const auto name = a[i].get<std::string>();
      if (!check_catalogue().contains(name)) {
        throw InvalidArgument(where + ": unknown check '" + name + "'");
      }
      names.insert(name);
    }
    spec.assertions = std::move(names);
  }
  return spec;
}

ExperimentSpec load_experiment_spec(const std::filesystem::path& path) {
  return parse_experiment_spec(read_json_file(path), path.parent_path());
}

Json to_json(const Check& c) {
  return {{"name", c.name},
          {"anchor", c.anchor},
          {"passed", c.passed},
          {"hard", c.hard},
          {"detail", c.detail}};
}

Json run_pipeline(const ExperimentSpec& spec, std::uint64_t seed,
                  const std::filesystem::path& graph_path) {
  Context ctx{spec, seed, {}, std::nullopt, {}, {}, Json::object(), CheckList(spec), std::nullopt};
  Json record;
  record["seed"] = seed;
  record["graph_file"] = nullptr;
  std::string current = "graph";
  try {
    ctx.graph = acquire_graph(spec, seed, ctx.trace);
    save_graph(graph_path, ctx.graph);
    record["graph_file"] = graph_path.filename().string();
    record["graph"] = graph_summary(
        ctx.graph, ctx.trace ? std::optional<Girth>(ctx.trace->final_girth) : std::nullopt);
    if (ctx.graph.num_vertices() > 0) {
      ctx.component = largest_component(ctx.graph);
      ctx.component_graph = ctx.component.size() == ctx.graph.num_vertices()
                                ? ctx.graph
                                : induced_subgraph(ctx.graph, ctx.component);
    }
    for (const auto& step : spec.pipeline) {
      current = step;
      step_table().at(step)(ctx);
    }
    record["error"] = nullptr;
  } catch (const std::exception& e) {
    record["error"] = current + ": " + e.what();
  }
  record["steps"] = std::move(ctx.steps);
  record["checks"] = ctx.checks.to_json();
  const auto failures = ctx.checks.hard_failures();
  record["failed_checks"] = failures;
  record["status"] = !record["error"].is_null() ? "error" : failures.empty() ? "pass" : "fail";
  return record;
}

std::size_t thread_cap_from_env() {
  const unsigned hw = std::max(1U, std::thread::hardware_concurrency());
  const char* raw = std::getenv("CUBESEP_THREADS");
  if (raw == nullptr) return hw;
  char* end = nullptr;
  const long v = std::strtol(raw, &end, 10);
  if (end == raw || *end != '\0' || v < 1) return hw;
  return static_cast<std::size_t>(v);
}

BundleReport run_experiment(const ExperimentSpec& spec, const std::filesystem::path& out_dir,
                            std::size_t threads) {
  namespace fs = std::filesystem;
  fs::create_directories(out_dir / "runs");
  fs::create_directories(out_dir / "graphs");
  std::vector<Json> records(spec.seeds.size());
  std::atomic<std::size_t> next{0};
  const auto worker = [&] {
    for (std::size_t i = next++; i < spec.seeds.size(); i = next++) {
      const std::uint64_t seed = spec.seeds[i];
      Json rec = run_pipeline(spec, seed, out_dir / "graphs" / seed_stem(seed));
      write_text_atomic(out_dir / "runs" / seed_stem(seed), rec.dump(1) + "\n");
      records[i] = std::move(rec);
    }
  };
  const std::size_t count = std::max<std::size_t>(1, std::min(threads, spec.seeds.size()));
  if (count == 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    for (std::size_t t = 0; t < count; ++t) pool.emplace_back(worker);
    for (auto& th : pool) th.join();
  }

  BundleReport report;
  report.dir = out_dir;
  report.runs = spec.seeds.size();
  Json runs = Json::array();
  std::ostringstream csv;
  csv << "seed,status,n,m,max_degree,avg_degree,girth,attempts,failed_checks,error\n";
  for (std::size_t i = 0; i < records.size(); ++i) {
    const Json& rec = records[i];
    const std::uint64_t seed = spec.seeds[i];
    const std::string status = rec.at("status").get<std::string>();
    if (status != "pass") {
      ++report.failed_runs;
      if (!rec.at("error").is_null()) {
        report.failures.push_back("seed " + std::to_string(seed) + ": error: " +
                                  rec.at("error").get<std::string>());
      }
      for (const auto& f : rec.at("failed_checks")) {
        report.failures.push_back("seed " + std::to_string(seed) + ": check " + f.get<std::string>());
      }
    }
    runs.push_back({{"seed", seed}, {"record", "runs/" + seed_stem(seed)}, {"status", status}});
    const Json g = rec.value("graph", Json::object());
    const auto cell = [&](const char* key) {
      return g.contains(key) ? (g.at(key).is_string() ? g.at(key).get<std::string>() : g.at(key).dump())
                             : std::string();
    };
    std::string failed;
    for (const auto& f : rec.at("failed_checks")) {
      if (!failed.empty()) failed += ';';
      failed += f.get<std::string>().substr(0, f.get<std::string>().find(':'));
    }
    std::string error = rec.at("error").is_null() ? "" : rec.at("error").get<std::string>();
    std::replace(error.begin(), error.end(), ',', ';');
    std::replace(error.begin(), error.end(), '\n', ' ');
    const Json& gen = rec.at("steps").value("generate", Json::object());
    csv << seed << ',' << status << ',' << cell("n") << ',' << cell("m") << ','
        << cell("max_degree") << ',' << cell("avg_degree") << ',' << cell("girth") << ','
        << (gen.contains("attempts") ? gen.at("attempts").dump() : "") << ',' << failed << ','
        << error << '\n';
  }
  Json spec_copy{{"schema", kExperimentSchema},
                 {"pipeline", spec.pipeline},
                 {"params", spec.params},
                 {"seeds", spec.seeds}};
  if (spec.assertions) spec_copy["assertions"] = *spec.assertions;
  const Json manifest{{"schema", kExperimentSchema},
                      {"spec", spec_copy},
                      {"runs", runs},
                      {"failed_runs", report.failed_runs},
                      {"failures", report.failures}};
  write_text_atomic(out_dir / "summary.csv", csv.str());
  write_text_atomic(out_dir / "manifest.json", manifest.dump(1) + "\n");
  return report;
}

std::string to_string(VerdictStatus s) {
  switch (s) {
    case VerdictStatus::kPass: return "pass";
    case VerdictStatus::kFail: return "fail";
    case VerdictStatus::kCorrupt: return "corrupt";
  }
  return "corrupt";
}

bool VerifyReport::passed() const {
  return bundle_problems.empty() &&
         std::all_of(records.begin(), records.end(),
                     [](const RecordVerdict& r) { return r.status == VerdictStatus::kPass; });
}

Json to_json(const VerifyReport& r) {
  Json records = Json::array();
  for (const auto& v : r.records) {
    records.push_back({{"record", v.record}, {"status", to_string(v.status)}, {"problems", v.problems}});
  }
  return {{"passed", r.passed()}, {"bundle_problems", r.bundle_problems}, {"records", records}};
}

VerifyReport verify_bundle(const std::filesystem::path& dir) {
  VerifyReport report;
  Json manifest;
  try {
    manifest = read_json_file(dir / "manifest.json");
    if (manifest.at("schema").get<int>() != kExperimentSchema) {
      report.bundle_problems.push_back("manifest schema is not " + std::to_string(kExperimentSchema));
    }
  } catch (const std::exception& e) {
    report.bundle_problems.push_back(std::string("manifest unreadable: ") + e.what());
    return report;
  }
  for (const auto& run : manifest.value("runs", Json::array())) {
    RecordVerdict verdict;
    verdict.record = run.value("record", std::string("?"));
    Json rec;
    Graph g;
    try {
      rec = read_json_file(dir / verdict.record);
      if (rec.at("seed") != run.at("seed")) throw InvalidArgument("seed differs from the manifest");
      if (!rec.at("graph_file").is_null()) {
        g = load_graph(dir / "graphs" / rec.at("graph_file").get<std::string>());
      }
    } catch (const std::exception& e) {
      verdict.status = VerdictStatus::kCorrupt;
      verdict.problems.push_back(e.what());
      report.records.push_back(std::move(verdict));
      continue;
    }
    try {
      Verifier v(g, verdict);
      if (rec.contains("graph")) v.graph_summary_matches(rec.at("graph"));
      const Json& steps = rec.at("steps");
      if (steps.contains("cut")) v.cut(steps.at("cut"));
      if (steps.contains("boost")) v.boost(steps.at("boost"));
      if (steps.contains("sse")) v.sse(steps.at("sse"));
      if (steps.contains("decompose")) v.decompose(steps.at("decompose"));
      if (steps.contains("spectrum")) v.spectrum(steps.at("spectrum"));
      if (steps.contains("rank-experiment")) v.rank(steps.at("rank-experiment"));
      if (steps.contains("oracle")) v.oracle(steps.at("oracle"));
      if (steps.contains("girth-audit")) v.girth_audit(steps.at("girth-audit"));
      bool hard_failed = false;
      for (const auto& c : rec.at("checks")) {
        hard_failed = hard_failed || (c.at("hard").get<bool>() && !c.at("passed").get<bool>());
      }
      v.expect(!hard_failed, "record carries failed hard checks");
      v.expect(rec.at("error").is_null(), "record carries an error");
      if (!verdict.problems.empty()) verdict.status = VerdictStatus::kFail;
    } catch (const std::exception& e) {
      verdict.status = VerdictStatus::kCorrupt;
      verdict.problems.push_back(std::string("malformed record: ") + e.what());
    }
    report.records.push_back(std::move(verdict));
  }
  return report;
}

}  // namespace cubesep
