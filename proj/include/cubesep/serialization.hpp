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


// JSON forms of graphs and results. Fractions travel as "P/Q" strings,
// eigenvalues as JSON numbers printed with round-trip precision.

#ifndef CUBESEP_SERIALIZATION_HPP_
#define CUBESEP_SERIALIZATION_HPP_

#include <filesystem>
#include <string>
#include <string_view>

#include <nlohmann/json.hpp>

#include "cubesep/construction.hpp"
#include "cubesep/cuts.hpp"
#include "cubesep/decomposition.hpp"
#include "cubesep/graph.hpp"
#include "cubesep/spectral.hpp"
#include "cubesep/sse.hpp"

namespace cubesep {

using Json = nlohmann::json;

// {"n": int, "edges": [[u, v], ...], "labels": ["0101", ...]} with edges
// sorted; labels are omitted for unlabeled graphs.
Json graph_to_json(const Graph& g);
// Throws InvalidArgument naming the offending field.
Graph graph_from_json(const Json& j);
std::string dump_graph(const Graph& g);

Graph load_graph(const std::filesystem::path& path);
void save_graph(const std::filesystem::path& path, const Graph& g);

Json read_json_file(const std::filesystem::path& path);
// Writes to a sibling temporary file and renames it into place.
void write_text_atomic(const std::filesystem::path& path, std::string_view text);

Json fraction_json(const Fraction& f);
Fraction fraction_from_json(const Json& j);
Json edges_json(std::span<const Edge> edges);
std::vector<Edge> edges_from_json(const Json& j);
Json vertex_set_json(const VertexSet& s);
VertexSet vertex_set_from_json(const Json& j);
Json girth_json(const Girth& g);

Json to_json(const ConstructionTrace& t);
// Includes the boundary edges, hence the graph.
Json to_json(const Graph& g, const CutResult& c);
Json to_json(const Graph& g, const CoordinateCut& c);
Json to_json(const SeparatorResult& s);
Json to_json(const BoostResult& b);
Json to_json(const ShrinkTrace& t);
Json to_json(const SseResult& r);
Json to_json(const SpectrumReport& r);
Json to_json(const ThresholdRank& r);
Json to_json(const CheegerReport& r);
Json to_json(const RankExperimentRecord& r);
Json to_json(const DecompositionResult& r);
Json to_json(const GirthAudit& a);
Json to_json(const SparseComponentDemo& d);

// Flattens an object into a CSV header line and one value line. Nested
// objects become dotted columns, scalar arrays are joined with ';' and
// arrays of objects are reported by length.
std::string json_to_csv(const Json& j);

}  // namespace cubesep

#endif  // CUBESEP_SERIALIZATION_HPP_
