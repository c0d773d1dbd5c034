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


// Seed sweeps over a declared pipeline, written out as a bundle that can be
// re-checked later without trusting the code that produced it.
//
// Bundle layout:
//   manifest.json           spec copy, run index, failures
//   runs/seed-<S>.json      one record per seed
//   graphs/seed-<S>.json    the graph each record refers to
//   summary.csv             one row per seed, in seed-list order

#ifndef CUBESEP_EXPERIMENT_HPP_
#define CUBESEP_EXPERIMENT_HPP_

#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "cubesep/serialization.hpp"

namespace cubesep {

inline constexpr int kExperimentSchema = 1;

struct ExperimentSpec {
  std::vector<std::string> pipeline;
  Json params = Json::object();
  std::vector<std::uint64_t> seeds;
  // Checks treated as hard. Unset means every check's default.
  std::optional<std::set<std::string>> assertions;
  std::filesystem::path base_dir;  // resolves relative graph paths
};

// Throws InvalidArgument with a JSON path ("$.seeds[2]: ...") on schema
// violations.
ExperimentSpec parse_experiment_spec(const Json& j, const std::filesystem::path& base_dir);
ExperimentSpec load_experiment_spec(const std::filesystem::path& path);

// Pipeline steps understood by run_pipeline.
const std::vector<std::string>& known_steps();

struct Check {
  std::string name;
  std::string anchor;  // the claim the check exercises
  bool passed = false;
  bool hard = true;
  std::string detail;
};

Json to_json(const Check& c);

// Runs every step for one seed. Step failures are captured in the record's
// "error" field; the graph (when one was produced) is written to graph_path.
Json run_pipeline(const ExperimentSpec& spec, std::uint64_t seed,
                  const std::filesystem::path& graph_path);

struct BundleReport {
  std::filesystem::path dir;
  std::size_t runs = 0;
  std::size_t failed_runs = 0;
  std::vector<std::string> failures;  // "seed S: check|error ..."

  int exit_code() const { return failed_runs == 0 ? 0 : 1; }
};

// CUBESEP_THREADS when set to a positive integer, else the hardware count.
std::size_t thread_cap_from_env();

BundleReport run_experiment(const ExperimentSpec& spec, const std::filesystem::path& out_dir,
                            std::size_t threads = thread_cap_from_env());

enum class VerdictStatus { kPass, kFail, kCorrupt };
std::string to_string(VerdictStatus s);

struct RecordVerdict {
  std::string record;
  VerdictStatus status = VerdictStatus::kPass;
  std::vector<std::string> problems;
};

struct VerifyReport {
  std::vector<RecordVerdict> records;
  std::vector<std::string> bundle_problems;
  bool passed() const;
};

Json to_json(const VerifyReport& r);

// Recomputes boundaries, expansions, balances and spectral sums from the
// stored graphs. Corrupt records are listed and verification continues.
VerifyReport verify_bundle(const std::filesystem::path& dir);

}  // namespace cubesep

#endif  // CUBESEP_EXPERIMENT_HPP_
