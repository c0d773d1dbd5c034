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


// cubesep command-line front end.

#include <cstdint>
#include <filesystem>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "cubesep/construction.hpp"
#include "cubesep/cuts.hpp"
#include "cubesep/decomposition.hpp"
#include "cubesep/error.hpp"
#include "cubesep/experiment.hpp"
#include "cubesep/oracles.hpp"
#include "cubesep/serialization.hpp"
#include "cubesep/spectral.hpp"
#include "cubesep/sse.hpp"

namespace {

using cubesep::Fraction;
using cubesep::Graph;
using cubesep::Json;

struct Globals {
  std::uint64_t seed = 0;
  std::string out;
  std::string format = "json";
};

void emit_text(const Globals& g, const std::string& text) {
  if (g.out.empty()) {
    std::cout << text;
  } else {
    cubesep::write_text_atomic(g.out, text);
  }
}

void emit(const Globals& g, const Json& j) {
  emit_text(g, g.format == "csv" ? cubesep::json_to_csv(j) : j.dump(2) + "\n");
}

std::string edge_list_csv(const Graph& graph) {
  std::ostringstream out;
  out << "u,v\n";
  for (const auto& e : graph.edges()) out << e.u << ',' << e.v << '\n';
  return out.str();
}

cubesep::SeparatorStrategy separator_by_name(const std::string& name) {
  if (name == "exact") return cubesep::exact_separator_strategy();
  if (name == "boosted-coordinate") {
    return cubesep::boosted_separator_strategy(cubesep::coordinate_cut_strategy());
  }
  if (name == "boosted-spectral") {
    return cubesep::boosted_separator_strategy(cubesep::spectral_sweep_strategy());
  }
  return cubesep::default_separator_strategy();
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"cubesep: hypercube-subgraph separators, expansion and spectra"};
  app.require_subcommand(1);
  app.fallthrough();
  Globals globals;
  app.add_option("--seed", globals.seed, "RNG seed")->capture_default_str();
  app.add_option("--out", globals.out, "Output file (directory for run)");
  app.add_option("--format", globals.format, "Output format")
      ->check(CLI::IsMember({"json", "csv"}))
      ->capture_default_str();

  int exit_status = 0;
  std::string in_path;

  auto* generate = app.add_subcommand("generate", "Build a pruned random cube subgraph");
  int gen_d = 0;
  int gen_k = 2;
  std::optional<std::uint64_t> gen_n;
  std::string trace_path;
  int retry_budget = cubesep::kDefaultRetryBudget;
  generate->add_option("--d", gen_d, "Cube dimension")->required();
  generate->add_option("--k", gen_k, "Degree parameter")->capture_default_str();
  generate->add_option("--n", gen_n, "Vertex count, 2^(d-1) < n <= 2^d (default 2^d)");
  generate->add_option("--trace", trace_path, "Write the construction trace here");
  generate->add_option("--retries", retry_budget, "Retry budget")->capture_default_str();
  generate->callback([&] {
    cubesep::ConstructionParams p;
    p.d = cubesep::CubeDim(gen_d);
    p.k = gen_k;
    p.seed = globals.seed;
    p.n = gen_n.value_or(p.d.vertex_count());
    const auto built = cubesep::build_gnk(p, retry_budget);
    if (!trace_path.empty()) {
      cubesep::write_text_atomic(trace_path, cubesep::to_json(built.trace).dump(2) + "\n");
    }
    emit_text(globals, globals.format == "csv" ? edge_list_csv(built.graph)
                                               : cubesep::dump_graph(built.graph) + "\n");
  });

  auto* cut = app.add_subcommand("cut", "Sparse cut or boosted separator");
  std::string cut_method = "coordinate";
  cut->add_option("--in", in_path, "Graph JSON")->required()->check(CLI::ExistingFile);
  cut->add_option("--method", cut_method)
      ->check(CLI::IsMember({"coordinate", "exact", "boost", "spectral"}))
      ->capture_default_str();
  cut->callback([&] {
    const Graph g = cubesep::load_graph(in_path);
    Json j;
    if (cut_method == "coordinate") {
      j = cubesep::to_json(g, cubesep::coordinate_cut(g));
    } else if (cut_method == "exact") {
      j = cubesep::to_json(g, cubesep::min_edge_expansion(g));
    } else if (cut_method == "spectral") {
      j = cubesep::to_json(g, cubesep::spectral_sweep_cut(g));
    } else {
      const auto strategy = g.num_vertices() <= cubesep::kExactExpansionBudget
                                ? cubesep::exact_cut_strategy()
                            : g.has_labels() ? cubesep::coordinate_cut_strategy()
                                             : cubesep::spectral_sweep_strategy();
      j = cubesep::to_json(cubesep::boost_separator(g, strategy));
    }
    j["method"] = cut_method;
    emit(globals, j);
  });

  auto* sse = app.add_subcommand("sse", "Disjoint family of small non-expanding sets");
  std::string mu_text = "1/8";
  std::string sep_name = "default";
  sse->add_option("--in", in_path, "Graph JSON")->required()->check(CLI::ExistingFile);
  sse->add_option("--mu", mu_text, "Set measure P/Q")->capture_default_str();
  sse->add_option("--separator", sep_name)
      ->check(CLI::IsMember({"default", "exact", "boosted-coordinate", "boosted-spectral"}))
      ->capture_default_str();
  sse->callback([&] {
    const Graph g = cubesep::load_graph(in_path);
    emit(globals, cubesep::to_json(cubesep::extract_disjoint_family(
                      g, cubesep::parse_fraction(mu_text), separator_by_name(sep_name))));
  });

  auto* decompose = app.add_subcommand("decompose", "Recursive sparse-cut decomposition");
  std::string eps_text = "1/2";
  std::string mode = "heuristic";
  decompose->add_option("--in", in_path, "Graph JSON")->required()->check(CLI::ExistingFile);
  decompose->add_option("--epsilon", eps_text, "Edge budget P/Q")->capture_default_str();
  decompose->add_option("--mode", mode)
      ->check(CLI::IsMember({"exact", "heuristic"}))
      ->capture_default_str();
  decompose->callback([&] {
    const Graph g = cubesep::load_graph(in_path);
    emit(globals, cubesep::to_json(cubesep::trevisan_decompose(
                      g, cubesep::parse_fraction(eps_text), cubesep::parse_decompose_mode(mode))));
  });

  auto* spectrum = app.add_subcommand("spectrum", "Regularized adjacency spectrum");
  std::optional<int> reg_target;
  double tau = 0.5;
  spectrum->add_option("--in", in_path, "Graph JSON")->required()->check(CLI::ExistingFile);
  spectrum->add_option("--regularize", reg_target, "Degree target (default max degree)");
  spectrum->add_option("--tau", tau, "Threshold fraction")->capture_default_str();
  spectrum->callback([&] {
    const Graph g = cubesep::load_graph(in_path);
    const auto report = cubesep::spectrum(
        cubesep::regularize(g, reg_target.value_or(static_cast<int>(g.max_degree()))));
    Json j = cubesep::to_json(report);
    j["tau"] = tau;
    j["threshold_rank"] = cubesep::to_json(cubesep::threshold_rank(report, tau));
    emit(globals, j);
  });

  auto* rank = app.add_subcommand("rank-experiment", "Certified versus measured threshold rank");
  double eta = 0.5;
  double remove = 0.0;
  std::string rank_mu;
  rank->add_option("--in", in_path, "Graph JSON")->required()->check(CLI::ExistingFile);
  rank->add_option("--eta", eta)->capture_default_str();
  rank->add_option("--remove", remove, "Fraction of edges deleted")->capture_default_str();
  rank->add_option("--mu", rank_mu, "Set measure P/Q for the family");
  rank->callback([&] {
    const Graph g = cubesep::load_graph(in_path);
    std::optional<Fraction> mu;
    if (!rank_mu.empty()) mu = cubesep::parse_fraction(rank_mu);
    const auto rec = cubesep::rank_experiment(g, eta, remove, globals.seed, mu);
    emit(globals, cubesep::to_json(rec));
    if (!rec.bound_consistent) exit_status = 1;
  });

  auto* oracle = app.add_subcommand("oracle", "Exhaustive ground truth on small graphs");
  std::string what = "edge-sep";
  std::string balance = "original";
  std::size_t lo = 1;
  std::optional<std::size_t> hi;
  oracle->add_option("--in", in_path, "Graph JSON")->required()->check(CLI::ExistingFile);
  oracle->add_option("--what", what)
      ->check(CLI::IsMember({"edge-sep", "vertex-sep", "min-expansion", "girth"}))
      ->capture_default_str();
  oracle->add_option("--balance", balance, "Vertex separator convention")
      ->check(CLI::IsMember({"original", "remaining"}))
      ->capture_default_str();
  oracle->add_option("--lo", lo, "Smallest set size for min-expansion")->capture_default_str();
  oracle->add_option("--hi", hi, "Largest set size for min-expansion (default n/2)");
  oracle->callback([&] {
    const Graph g = cubesep::load_graph(in_path);
    Json j;
    if (what == "edge-sep") {
      j = cubesep::to_json(cubesep::exact_edge_separator(g));
    } else if (what == "vertex-sep") {
      j = cubesep::to_json(cubesep::exact_vertex_separator(
          g, balance == "original" ? cubesep::VertexBalance::kOriginal
                                   : cubesep::VertexBalance::kRemaining));
      j["balance"] = balance;
    } else if (what == "min-expansion") {
      j = cubesep::to_json(
          g, cubesep::exact_min_expansion_set(g, lo, hi.value_or(g.num_vertices() / 2)));
    } else {
      j["girth"] = cubesep::girth_json(cubesep::reference_girth(g));
      if (cubesep::is_connected(g) && !cubesep::is_forest(g)) {
        j["audit"] = cubesep::to_json(cubesep::girth_expansion_audit(g));
      }
    }
    j["what"] = what;
    emit(globals, j);
  });

  auto* run = app.add_subcommand("run", "Run an experiment spec into a bundle directory");
  std::string spec_path;
  run->add_option("spec", spec_path, "Experiment spec JSON")->required()->check(CLI::ExistingFile);
  run->callback([&] {
    if (globals.out.empty()) throw cubesep::InvalidArgument("run needs --out DIR");
    const auto spec = cubesep::load_experiment_spec(spec_path);
    const auto report = cubesep::run_experiment(spec, globals.out);
    std::cout << report.runs << " runs, " << report.failed_runs << " failed; bundle in "
              << report.dir.string() << "\n";
    for (const auto& f : report.failures) std::cout << "  " << f << "\n";
    exit_status = report.exit_code();
  });

  auto* verify = app.add_subcommand("verify", "Recheck a bundle from its stored graphs");
  std::string bundle;
  verify->add_option("bundle", bundle, "Bundle directory")->required()->check(CLI::ExistingDirectory);
  verify->callback([&] {
    const auto report = cubesep::verify_bundle(bundle);
    emit(globals, cubesep::to_json(report));
    exit_status = report.passed() ? 0 : 1;
  });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  } catch (const cubesep::Error& e) {
    std::cerr << "cubesep: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "cubesep: " << e.what() << "\n";
    return 2;
  }
  return exit_status;
}
