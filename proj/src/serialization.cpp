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


#include "cubesep/serialization.hpp"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <sstream>
#include <system_error>

#include "cubesep/error.hpp"
#include "cubesep/hypercube.hpp"

namespace cubesep {
namespace {

const Json& field(const Json& j, const char* name) {
  if (!j.is_object() || !j.contains(name)) {
    throw InvalidArgument(std::string("graph json: missing field '") + name + "'");
  }
  return j.at(name);
}

Json optional_double(const std::optional<double>& v) {
  return v ? Json(*v) : Json(nullptr);
}

Json fractions_json(const std::vector<Fraction>& values) {
  Json out = Json::array();
  for (const auto& f : values) out.push_back(fraction_json(f));
  return out;
}

std::string csv_escape(const std::string& text) {
  if (text.find_first_of(",\"\n") == std::string::npos) return text;
  std::string out = "\"";
  for (char c : text) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

std::string scalar_text(const Json& v) {
  if (v.is_string()) return v.get<std::string>();
  if (v.is_null()) return "";
  return v.dump();
}

void flatten(const Json& j, const std::string& prefix,
             std::vector<std::pair<std::string, std::string>>& cells) {
  for (const auto& [key, value] : j.items()) {
    const std::string name = prefix.empty() ? key : prefix + "." + key;
    if (value.is_object()) {
      flatten(value, name, cells);
    } else if (value.is_array()) {
      const bool scalars = std::all_of(value.begin(), value.end(), [](const Json& x) {
        return !x.is_object() && !x.is_array();
      });
      if (scalars) {
        std::string joined;
        for (const auto& x : value) {
          if (!joined.empty()) joined += ';';
          joined += scalar_text(x);
        }
        cells.emplace_back(name, joined);
      } else {
        cells.emplace_back(name + ".count", std::to_string(value.size()));
      }
    } else {
      cells.emplace_back(name, scalar_text(value));
    }
  }
}

}  // namespace

Json graph_to_json(const Graph& g) {
  Json j;
  j["n"] = g.num_vertices();
  j["edges"] = edges_json(g.edges());
  if (g.has_labels()) {
    Json labels = Json::array();
    for (std::uint64_t l : g.labels()) labels.push_back(to_bit_string(l, g.label_dim()));
    j["labels"] = std::move(labels);
  }
  return j;
}

Graph graph_from_json(const Json& j) {
  const Json& n_field = field(j, "n");
  if (!n_field.is_number_unsigned() && !n_field.is_number_integer()) {
    throw InvalidArgument("graph json: 'n' must be a non-negative integer");
  }
  const auto n = n_field.get<std::int64_t>();
  if (n < 0) throw InvalidArgument("graph json: 'n' must be a non-negative integer");
  const auto edges = edges_from_json(field(j, "edges"));
  if (!j.contains("labels")) return Graph(static_cast<std::size_t>(n), edges);
  const Json& labels = j.at("labels");
  if (!labels.is_array()) throw InvalidArgument("graph json: 'labels' must be an array");
  std::vector<std::uint64_t> words;
  int dim = 0;
  for (std::size_t i = 0; i < labels.size(); ++i) {
    if (!labels[i].is_string()) {
      throw InvalidArgument("graph json: labels[" + std::to_string(i) + "] must be a bit string");
    }
    const auto text = labels[i].get<std::string>();
    if (i == 0) dim = static_cast<int>(text.size());
    if (static_cast<int>(text.size()) != dim) {
      throw InvalidArgument("graph json: labels[" + std::to_string(i) + "] has the wrong length");
    }
    words.push_back(parse_bit_string(text));
  }
  return Graph(static_cast<std::size_t>(n), edges, std::move(words), dim);
}

// Same bytes as graph_to_json(g).dump(), written without the DOM.
std::string dump_graph(const Graph& g) {
  std::string out;
  out.reserve(16 * g.num_edges() + (g.label_dim() + 3) * g.num_vertices() + 32);
  char buf[24];
  const auto put = [&](std::size_t v) {
    const auto res = std::to_chars(buf, buf + sizeof buf, v);
    out.append(buf, res.ptr);
  };
  out += "{\"edges\":[";
  bool first = true;
  for (const Edge& e : g.edges()) {
    out += first ? "[" : ",[";
    first = false;
    put(e.u);
    out += ',';
    put(e.v);
    out += ']';
  }
  out += ']';
  if (g.has_labels()) {
    out += ",\"labels\":[";
    for (std::size_t v = 0; v < g.num_vertices(); ++v) {
      if (v > 0) out += ',';
      out += '"';
      out += to_bit_string(g.label(static_cast<Vertex>(v)), g.label_dim());
      out += '"';
    }
    out += ']';
  }
  out += ",\"n\":";
  put(g.num_vertices());
  out += '}';
  return out;
}

Json read_json_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw Error("cannot open " + path.string());
  try {
    return Json::parse(in);
  } catch (const Json::parse_error& e) {
    throw InvalidArgument(path.string() + ": " + e.what());
  }
}

Graph load_graph(const std::filesystem::path& path) {
  return graph_from_json(read_json_file(path));
}

void save_graph(const std::filesystem::path& path, const Graph& g) {
  write_text_atomic(path, dump_graph(g) + "\n");
}

void write_text_atomic(const std::filesystem::path& path, std::string_view text) {
  if (path.has_parent_path()) std::filesystem::create_directories(path.parent_path());
  std::filesystem::path tmp = path;
  tmp += ".tmp";
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) throw Error("cannot write " + tmp.string());
    out << text;
    if (!out.flush()) throw Error("write failed for " + tmp.string());
  }
  std::filesystem::rename(tmp, path);
}

Json fraction_json(const Fraction& f) { return to_string(f); }

Fraction fraction_from_json(const Json& j) {
  if (j.is_string()) return parse_fraction(j.get<std::string>());
  if (j.is_number_integer()) return Fraction(j.get<std::int64_t>());
  throw InvalidArgument("expected a fraction string, got " + j.dump());
}

Json edges_json(std::span<const Edge> edges) {
  Json out = Json::array();
  for (const Edge& e : edges) out.push_back({e.u, e.v});
  return out;
}

std::vector<Edge> edges_from_json(const Json& j) {
  if (!j.is_array()) throw InvalidArgument("edges must be an array of [u, v] pairs");
  std::vector<Edge> out;
  out.reserve(j.size());
  for (std::size_t i = 0; i < j.size(); ++i) {
    const Json& e = j[i];
    if (!e.is_array() || e.size() != 2 || !e[0].is_number_unsigned() ||
        !e[1].is_number_unsigned()) {
      throw InvalidArgument("edges[" + std::to_string(i) + "] must be a pair of vertex ids");
    }
    out.emplace_back(e[0].get<Vertex>(), e[1].get<Vertex>());
  }
  return out;
}

Json vertex_set_json(const VertexSet& s) { return s.members(); }

VertexSet vertex_set_from_json(const Json& j) {
  if (!j.is_array()) throw InvalidArgument("vertex set must be an array");
  std::vector<Vertex> members;
  for (const auto& v : j) {
    if (!v.is_number_unsigned()) throw InvalidArgument("vertex ids must be non-negative");
    members.push_back(v.get<Vertex>());
  }
  return VertexSet(std::move(members));
}

Json girth_json(const Girth& g) {
  return g.is_acyclic() ? Json("acyclic") : Json(*g.length);
}

Json to_json(const ConstructionTrace& t) {
  return {{"seed", t.seed},
          {"attempts", t.attempts},
          {"edges_sampled", t.edges_sampled},
          {"short_cycles_hit", t.short_cycles_hit},
          {"excess_edges_trimmed", t.excess_edges_trimmed},
          {"excess_degree_total", t.excess_degree_total},
          {"cycle_length_limit", fraction_json(t.cycle_length_limit)},
          {"girth_constraint_vacuous", t.girth_constraint_vacuous},
          {"degree_cap", t.degree_cap},
          {"final_avg_degree", fraction_json(t.final_avg_degree)},
          {"final_max_degree", t.final_max_degree},
          {"final_girth", girth_json(t.final_girth)}};
}

Json to_json(const Graph& g, const CutResult& c) {
  return {{"set", vertex_set_json(c.set)},
          {"size", c.set.size()},
          {"boundary_size", c.boundary_size},
          {"boundary_edges", edges_json(edge_boundary(g, c.set))},
          {"expansion", fraction_json(c.expansion)}};
}

Json to_json(const Graph& g, const CoordinateCut& c) {
  Json j = to_json(g, c.cut);
  j["coordinate"] = c.coordinate;
  Json scores = Json::array();
  for (const auto& s : c.scores) {
    scores.push_back({{"coordinate", s.coordinate},
                      {"x", s.crossing_edges},
                      {"y", s.separated_pairs}});
  }
  j["scores"] = std::move(scores);
  return j;
}

Json to_json(const SeparatorResult& s) {
  Json j;
  j["kind"] = s.kind == SeparatorKind::kEdge ? "edge" : "vertex";
  j["size"] = s.size();
  if (s.kind == SeparatorKind::kEdge) {
    j["removed_edges"] = edges_json(s.removed_edges);
    j["side"] = vertex_set_json(s.side);
  } else {
    j["removed_vertices"] = s.removed_vertices;
  }
  j["side_sizes"] = {s.side_a, s.side_b};
  j["largest_component"] = s.largest_component;
  return j;
}

Json to_json(const BoostResult& b) {
  Json steps = Json::array();
  for (const auto& s : b.steps) {
    steps.push_back({{"residual_vertices", s.residual_vertices},
                     {"set_size", s.set_size},
                     {"residual_boundary", s.residual_boundary},
                     {"residual_expansion", fraction_json(s.residual_expansion)},
                     {"f_value", optional_double(s.f_value)}});
  }
  return {{"separator", to_json(b.separator)},
          {"accumulated", vertex_set_json(b.accumulated)},
          {"steps", std::move(steps)},
          {"max_step_expansion", fraction_json(b.max_step_expansion)},
          {"max_ratio_certified", b.max_ratio_certified},
          {"f_condition_met", b.f_condition_met},
          {"f_size_bound", optional_double(b.f_size_bound)}};
}

Json to_json(const ShrinkTrace& t) {
  Json steps = Json::array();
  for (const auto& s : t.steps) {
    steps.push_back({{"parent_size", s.parent_size},
                     {"child_size", s.child_size},
                     {"sibling_size", s.sibling_size},
                     {"separator_size", s.separator_size},
                     {"parent_boundary", s.parent_boundary},
                     {"child_boundary", s.child_boundary},
                     {"sibling_boundary", s.sibling_boundary},
                     {"parent_expansion", fraction_json(s.parent_expansion)},
                     {"child_expansion", fraction_json(s.child_expansion)},
                     {"sibling_expansion", fraction_json(s.sibling_expansion)},
                     {"step_bound", fraction_json(s.step_bound)},
                     {"f_term", optional_double(s.f_term)}});
  }
  return {{"steps", std::move(steps)},
          {"accumulated_bound", fraction_json(t.accumulated_bound)}};
}

Json to_json(const SseResult& r) {
  Json extracted = Json::array();
  for (const auto& e : r.extracted) {
    extracted.push_back({{"set", vertex_set_json(e.set)},
                         {"residual_vertices", e.residual_vertices},
                         {"residual_boundary", e.residual_boundary},
                         {"residual_expansion", fraction_json(e.residual_expansion)},
                         {"boundary_in_h", e.boundary_in_h},
                         {"expansion_in_h", fraction_json(e.expansion_in_h)},
                         {"trace", to_json(e.trace)}});
  }
  Json sets = Json::array();
  for (const auto& s : r.sets) sets.push_back(vertex_set_json(s));
  return {{"mu", fraction_json(r.mu)},
          {"t", r.t},
          {"window", {r.window_low, r.window_high}},
          {"rounds_planned", r.rounds_planned},
          {"stopped_early", r.stopped_early},
          {"below_sqrt_t", r.below_sqrt_t},
          {"extracted", std::move(extracted)},
          {"sets", std::move(sets)},
          {"expansions_in_h", fractions_json(r.expansions_in_h)},
          {"per_step_bounds", fractions_json(r.per_step_bounds)},
          {"boundary_sum_in_h", r.boundary_sum_in_h},
          {"boundary_sum_in_residual", r.boundary_sum_in_residual},
          {"max_residual_expansion", fraction_json(r.max_residual_expansion)},
          {"averaging_certified", r.averaging_certified}};
}

Json to_json(const SpectrumReport& r) {
  return {{"degree_target", r.degree_target},
          {"eigenvalues", r.eigenvalues},
          {"residual_tolerance", r.residual_tolerance},
          {"max_relative_residual", r.max_relative_residual}};
}

Json to_json(const ThresholdRank& r) {
  return {{"low", r.low}, {"high", r.high}, {"ambiguous", r.ambiguous()}};
}

Json to_json(const CheegerReport& r) {
  return {{"k", r.k},
          {"lambda_k", r.lambda_k},
          {"lhs", r.lhs},
          {"max_expansion", fraction_json(r.max_expansion)},
          {"rhs", r.rhs},
          {"holds", r.holds}};
}

Json to_json(const RankExperimentRecord& r) {
  return {{"sampling", "sampled"},
          {"seed", r.seed},
          {"eta", r.eta},
          {"edge_fraction_removed", r.edge_fraction_removed},
          {"edges_before", r.edges_before},
          {"edges_after", r.edges_after},
          {"degree_target", r.degree_target},
          {"component", vertex_set_json(r.component)},
          {"component_avg_degree", fraction_json(r.component_avg_degree)},
          {"mu", fraction_json(r.mu)},
          {"family_size", r.family_size},
          {"family_expansions", fractions_json(r.family_expansions)},
          {"certified_lower_bound", r.certified_lower_bound},
          {"spectrum_computed", r.spectrum_computed},
          {"measured_rank", r.measured_rank ? to_json(*r.measured_rank) : Json(nullptr)},
          {"cheeger", r.cheeger ? to_json(*r.cheeger) : Json(nullptr)},
          {"bound_consistent", r.bound_consistent}};
}

Json to_json(const DecompositionResult& r) {
  Json comps = Json::array();
  for (const auto& c : r.components) {
    comps.push_back({{"vertices", vertex_set_json(c.vertices)},
                     {"status", to_string(c.status)},
                     {"best_expansion", c.best_expansion ? fraction_json(*c.best_expansion)
                                                         : Json(nullptr)}});
  }
  return {{"epsilon", fraction_json(r.epsilon)},
          {"mode", to_string(r.mode)},
          {"threshold", r.threshold},
          {"edges_before", r.edges_before},
          {"removed_edges", edges_json(r.removed_edges)},
          {"removed_fraction", fraction_json(r.removed_fraction)},
          {"within_epsilon_budget", r.within_epsilon_budget},
          {"cuts_applied", r.cuts_applied},
          {"components", std::move(comps)}};
}

Json to_json(const GirthAudit& a) {
  return {{"n", a.n},
          {"alpha", fraction_json(a.alpha)},
          {"girth", a.girth},
          {"bound", a.bound.general},
          {"bound_simplified", optional_double(a.bound.simplified)},
          {"holds", a.holds}};
}

Json to_json(const SparseComponentDemo& d) {
  return {{"seed", d.seed},
          {"k", d.k},
          {"n", d.n},
          {"edges_before", d.edges_before},
          {"edges_after", d.edges_after},
          {"component_size", d.component.size()},
          {"component_avg_degree", fraction_json(d.component_avg_degree)},
          {"cut_expansion", d.cut ? fraction_json(d.cut->expansion) : Json(nullptr)},
          {"cut_size", d.cut ? Json(d.cut->set.size()) : Json(nullptr)},
          {"formula", d.formula},
          {"below_formula", d.below_formula}};
}

std::string json_to_csv(const Json& j) {
  if (!j.is_object()) throw InvalidArgument("csv output needs a JSON object");
  std::vector<std::pair<std::string, std::string>> cells;
  flatten(j, "", cells);
  std::ostringstream header;
  std::ostringstream row;
  for (std::size_t i = 0; i < cells.size(); ++i) {
    if (i > 0) {
      header << ',';
      row << ',';
    }
    header << csv_escape(cells[i].first);
    row << csv_escape(cells[i].second);
  }
  return header.str() + "\n" + row.str() + "\n";
}

}  // namespace cubesep
