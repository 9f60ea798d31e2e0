// Copyright 2026 The matchaug Authors.
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


// Parameter sweeps over (topology, demand, algorithm) and their CSV output.

#ifndef MATCHAUG_EXPERIMENT_H_
#define MATCHAUG_EXPERIMENT_H_

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "matchaug/algorithms.h"
#include "matchaug/topology.h"

namespace matchaug {

inline constexpr int kCsvSchemaVersion = 1;

enum class DemandKind { kZipf, kSparse, kPairs, kMatrixMarket };

std::string_view DemandKindName(DemandKind kind);  // zipf sparse pairs mtx
DemandKind ParseDemandKind(std::string_view name);

struct DemandSpec {
  DemandKind kind = DemandKind::kSparse;
  std::vector<double> params;  // zeta or gamma values (synthetic kinds)
  std::vector<std::uint64_t> seeds;
  double high = 100.0;  // sparse only
  std::string path;     // trace kinds
};

struct TopologyEntry {
  TopologySpec spec;
  // Ring sized to the demand's node count (trace demands only).
  bool auto_size = false;
};

// INI-style text:
//
//   [experiment]   output, time_limit_s, threads, timing (on|off)
//   [topology]     kind (ring|torus2d|torus3d), dims: the torus shape, or
//                  one or more ring sizes, or "auto" (ring sized to a trace)
//   [demand]       kind (zipf|sparse|pairs|mtx), zeta | gamma (list),
//                  seeds (list, "a..b" ranges allowed), high, path
//   [algorithms]   list, alpha
//
// [topology] and [demand] may repeat. Lists are comma or space separated;
// '#' and ';' start comments.
struct ExperimentConfig {
  std::string output = "results.csv";
  double time_limit_s = 3600.0;
  int threads = 1;
  // When off, runtime_ms is left empty so reruns are byte-identical.
  bool timing = true;
  std::vector<TopologyEntry> topologies;
  std::vector<DemandSpec> demands;
  std::vector<Algorithm> algorithms;
  int alpha = 12;
};

ExperimentConfig ParseExperimentConfig(std::istream& in,
                                       const std::string& source);
ExperimentConfig LoadExperimentConfig(const std::string& path);

struct ResultRow {
  std::string instance;
  std::string topology;
  int n = 0;
  std::string demand_kind;
  std::string demand_param;
  std::string seed;
  std::string algorithm;
  std::optional<double> epl;
  std::optional<double> baseline_epl;
  std::optional<double> ratio;
  std::optional<double> runtime_ms;
  std::optional<int> matching_size;
  std::optional<int> dropped_fingers;  // superchord
  std::optional<int> leftover_size;    // spiderdan
  bool timeout = false;
  std::string error;
};

// schema_version,instance,topology,n,demand_kind,demand_param,seed,
// algorithm,epl,baseline_epl,ratio,runtime_ms,matching_size,
// dropped_fingers,leftover_size,timeout,error
std::string CsvHeader();
std::string FormatCsvRow(const ResultRow& row);
// Throws ParseError on a malformed line or wrong schema version.
std::vector<ResultRow> ReadResultsCsv(std::istream& in,
                                      const std::string& source);

struct ExperimentStats {
  int cells = 0;
  int resumed = 0;
  int errors = 0;
  int timeouts = 0;
};

// Runs every (instance, algorithm) cell and writes config.output. Rows are
// appended to "<output>.partial" as they finish; cells already present
// there are not rerun. The final file lists rows in expansion order
// (topologies, demands, parameters, seeds, algorithms) and the partial file
// is removed. A failing cell gets its message in the error column.
ExperimentStats RunExperiment(const ExperimentConfig& config);

struct AlgorithmSummary {
  std::string algorithm;
  int rows = 0;
  double mean_ratio = 0.0;
  double median_ratio = 0.0;
  std::optional<double> mean_runtime_ms;
  std::optional<double> median_runtime_ms;
  int wins = 0;  // sole lowest epl of an instance
  int ties = 0;  // shared lowest epl
  // Mean of epl / epl(baseline algorithm) over shared instances.
  std::optional<double> ratio_to_baseline;
};

struct CompareSummary {
  std::string baseline_algorithm;
  std::vector<AlgorithmSummary> algorithms;  // in first-appearance order
};

// Rows with an error or timeout are ignored.
CompareSummary Compare(const std::vector<ResultRow>& rows,
                       const std::string& baseline_algorithm);
void WriteCompareTable(std::ostream& out, const CompareSummary& summary);

}  // namespace matchaug

#endif  // MATCHAUG_EXPERIMENT_H_
