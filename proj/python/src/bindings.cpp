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


// Python bindings. Graphs and results cross the boundary as plain dicts in
// the same JSON shapes the CLI writes.

#include <cstdint>
#include <optional>
#include <string>

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>
#include <pybind11/stl/filesystem.h>

#include "cubesep/construction.hpp"
#include "cubesep/cuts.hpp"
#include "cubesep/decomposition.hpp"
#include "cubesep/experiment.hpp"
#include "cubesep/hypercube.hpp"
#include "cubesep/oracles.hpp"
#include "cubesep/serialization.hpp"
#include "cubesep/spectral.hpp"
#include "cubesep/sse.hpp"

namespace py = pybind11;

namespace cubesep {
namespace {

Json to_cpp(const py::handle& obj) {
  const auto text = py::module_::import("json").attr("dumps")(obj).cast<std::string>();
  return Json::parse(text);
}

py::object to_py(const Json& j) { return py::module_::import("json").attr("loads")(j.dump()); }

Graph graph_arg(const py::handle& obj) { return graph_from_json(to_cpp(obj)); }

Fraction fraction_arg(const py::handle& obj) {
  if (py::isinstance<py::int_>(obj)) return Fraction(obj.cast<std::int64_t>());
  return parse_fraction(py::str(obj).cast<std::string>());
}

SparseCutStrategy cut_strategy(const std::string& name) {
  if (name == "coordinate") return coordinate_cut_strategy();
  if (name == "exact") return exact_cut_strategy();
  if (name == "spectral") return spectral_sweep_strategy();
  throw InvalidArgument("cut strategy must be coordinate|exact|spectral, got '" + name + "'");
}

SeparatorStrategy separator_strategy(const std::string& name) {
  if (name == "default") return default_separator_strategy();
  if (name == "exact") return exact_separator_strategy();
  if (name == "boosted-coordinate") return boosted_separator_strategy(coordinate_cut_strategy());
  if (name == "boosted-spectral") return boosted_separator_strategy(spectral_sweep_strategy());
  throw InvalidArgument("separator must be default|exact|boosted-coordinate|boosted-spectral");
}

py::object generate(int d, int k, std::optional<std::uint64_t> n, std::uint64_t seed,
                    int retry_budget) {
  ConstructionParams params;
  params.d = CubeDim(d);
  params.k = k;
  params.seed = seed;
  params.n = n.value_or(params.d.vertex_count());
  const auto out = build_gnk(params, retry_budget);
  return to_py(Json{{"graph", graph_to_json(out.graph)}, {"trace", to_json(out.trace)}});
}

py::object cut(const py::dict& graph, const std::string& method) {
  const Graph g = graph_arg(graph);
  if (method == "coordinate") return to_py(to_json(g, coordinate_cut(g)));
  if (method == "exact") return to_py(to_json(g, min_edge_expansion(g)));
  if (method == "spectral") return to_py(to_json(g, spectral_sweep_cut(g)));
  if (method == "boost") return to_py(to_json(boost_separator(g, coordinate_cut_strategy())));
  throw InvalidArgument("method must be coordinate|exact|spectral|boost, got '" + method + "'");
}

py::object spectrum_of(const py::dict& graph, std::optional<int> degree_target, double tau) {
  const Graph g = graph_arg(graph);
  const auto report =
      spectrum(regularize(g, degree_target.value_or(static_cast<int>(g.max_degree()))));
  Json j = to_json(report);
  j["tau"] = tau;
  j["threshold_rank"] = to_json(threshold_rank(report, tau));
  return to_py(j);
}

py::object oracle(const py::dict& graph, const std::string& what, const std::string& balance) {
  const Graph g = graph_arg(graph);
  if (what == "edge-sep") return to_py(to_json(exact_edge_separator(g)));
  if (what == "vertex-sep") {
    if (balance != "original" && balance != "remaining") {
      throw InvalidArgument("balance must be original|remaining");
    }
    return to_py(to_json(exact_vertex_separator(
        g, balance == "original" ? VertexBalance::kOriginal : VertexBalance::kRemaining)));
  }
  if (what == "min-expansion") return to_py(to_json(g, reference_min_edge_expansion(g)));
  if (what == "girth") return to_py(Json{{"girth", girth_json(reference_girth(g))}});
  throw InvalidArgument("what must be edge-sep|vertex-sep|min-expansion|girth");
}

py::object run(const py::dict& spec, const std::filesystem::path& out_dir,
               const std::filesystem::path& base_dir, std::optional<std::size_t> threads) {
  const auto parsed = parse_experiment_spec(to_cpp(spec), base_dir);
  BundleReport report;
  {
    py::gil_scoped_release release;
    report = run_experiment(parsed, out_dir, threads.value_or(thread_cap_from_env()));
  }
  return to_py(Json{{"dir", report.dir.string()},
                    {"runs", report.runs},
                    {"failed_runs", report.failed_runs},
                    {"failures", report.failures},
                    {"exit_code", report.exit_code()}});
}

}  // namespace
}  // namespace cubesep

PYBIND11_MODULE(_core, m) {
  using namespace cubesep;
  m.doc() = "Hypercube-subgraph separators, expansion and spectra.";

  static py::exception<Error> base(m, "CubesepError", PyExc_RuntimeError);
  static py::exception<BudgetExceeded> budget(m, "BudgetExceeded", base.ptr());
  py::register_exception_translator([](std::exception_ptr p) {
    try {
      if (p) std::rethrow_exception(p);
    } catch (const InvalidArgument& e) {
      PyErr_SetString(PyExc_ValueError, e.what());
    } catch (const BudgetExceeded& e) {
      PyErr_SetString(budget.ptr(), e.what());
    } catch (const Error& e) {
      PyErr_SetString(base.ptr(), e.what());
    }
  });

  m.def("full_cube", [](int d) { return to_py(graph_to_json(full_cube(CubeDim(d)))); },
        py::arg("d"));
  m.def("generate", &generate, py::arg("d"), py::arg("k") = 2, py::arg("n") = py::none(),
        py::arg("seed") = 0, py::arg("retry_budget") = kDefaultRetryBudget,
        "Builds G_{n,k}; returns {'graph': ..., 'trace': ...}.");
  m.def("cut", &cut, py::arg("graph"), py::arg("method") = "coordinate");
  m.def(
      "edge_expansion",
      [](const py::dict& graph, const std::vector<Vertex>& set) {
        const Graph g = graph_arg(graph);
        return to_py(to_json(g, edge_expansion_of_set(g, VertexSet(set))));
      },
      py::arg("graph"), py::arg("set"));
  m.def(
      "sse",
      [](const py::dict& graph, const py::object& mu, const std::string& separator) {
        return to_py(to_json(
            extract_disjoint_family(graph_arg(graph), fraction_arg(mu), separator_strategy(separator))));
      },
      py::arg("graph"), py::arg("mu") = "1/8", py::arg("separator") = "default");
  m.def(
      "decompose",
      [](const py::dict& graph, const py::object& epsilon, const std::string& mode) {
        return to_py(to_json(
            trevisan_decompose(graph_arg(graph), fraction_arg(epsilon), parse_decompose_mode(mode))));
      },
      py::arg("graph"), py::arg("epsilon") = "1/2", py::arg("mode") = "heuristic");
  m.def("spectrum", &spectrum_of, py::arg("graph"), py::arg("degree_target") = py::none(),
        py::arg("tau") = 0.5);
  m.def(
      "rank_experiment",
      [](const py::dict& graph, double eta, double remove, std::uint64_t seed,
         const py::object& mu) {
        std::optional<Fraction> m;
        if (!mu.is_none()) m = fraction_arg(mu);
        return to_py(to_json(rank_experiment(graph_arg(graph), eta, remove, seed, m)));
      },
      py::arg("graph"), py::arg("eta") = 0.5, py::arg("remove") = 0.0, py::arg("seed") = 0,
      py::arg("mu") = py::none());
  m.def("oracle", &oracle, py::arg("graph"), py::arg("what") = "edge-sep",
        py::arg("balance") = "original");
  m.def(
      "boost",
      [](const py::dict& graph, const std::string& strategy) {
        return to_py(to_json(boost_separator(graph_arg(graph), cut_strategy(strategy))));
      },
      py::arg("graph"), py::arg("strategy") = "coordinate");
  m.def("run", &run, py::arg("spec"), py::arg("out_dir"), py::arg("base_dir") = ".",
        py::arg("threads") = py::none());
  m.def(
      "verify",
      [](const std::filesystem::path& dir) {
        VerifyReport report;
        {
          py::gil_scoped_release release;
          report = verify_bundle(dir);
        }
        Json j = to_json(report);
        j["passed"] = report.passed();
        return to_py(j);
      },
      py::arg("bundle"));
}
