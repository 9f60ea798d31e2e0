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


// matchaug command-line front end. Exit codes: 0 success, 1 usage error,
// 2 data or I/O error.

#include <CLI11.hpp>

#include <filesystem>
#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include "matchaug/algorithms.h"
#include "matchaug/demand_sources.h"
#include "matchaug/epl.h"
#include "matchaug/exact.h"
#include "matchaug/experiment.h"
#include "matchaug/io.h"
#include "matchaug/topology.h"

namespace {

using namespace matchaug;

constexpr int kExitData = 2;

// "-" is stdout.
template <typename Fn>
void WithOutput(const std::string& path, Fn&& fn) {
  if (path == "-") {
    fn(std::cout);
    return;
  }
  std::ofstream out(path);
  if (!out) throw IoError("cannot open " + path + " for writing");
  fn(out);
  out.flush();
  if (!out) throw IoError("write to " + path + " failed");
}

DemandMatrix LoadDemandFile(const std::string& path,
                            const std::string& format) {
  std::string f = format;
  if (f == "auto") {
    f = std::filesystem::path(path).extension() == ".mtx" ? "mtx" : "triples";
  }
  if (f == "triples") return ReadDemand(path);
  TraceDemand t = f == "mtx" ? LoadMatrixMarket(path) : LoadPairList(path);
  for (const std::string& w : t.warnings) std::cerr << "warning: " << w << "\n";
  return std::move(t.demand);
}

struct DemandInput {
  std::string path;
  std::string format = "auto";
};

void AddDemandOptions(CLI::App* cmd, DemandInput& in) {
  cmd->add_option("--demand", in.path, "Demand file")->required();
  cmd->add_option("--demand-format", in.format,
                  "triples (u v value), pairs (label,label,freq), mtx, "
                  "or auto (by extension)")
      ->check(CLI::IsMember({"auto", "triples", "pairs", "mtx"}));
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Augment a network with one matching to shorten "
               "demand-weighted paths"};
  app.require_subcommand(1);

  // gen-topology
  std::string topo_kind;
  std::vector<int> topo_dims;
  std::string topo_out = "-";
  auto* gen_topology = app.add_subcommand("gen-topology",
                                          "Write a ring or torus edge list");
  gen_topology->add_option("--kind", topo_kind, "ring, torus2d or torus3d")
      ->required()
      ->check(CLI::IsMember({"ring", "torus2d", "torus3d"}));
  gen_topology->add_option("--dims", topo_dims, "Dimension sizes")
      ->required();
  gen_topology->add_option("-o,--output", topo_out, "Output file or -");

  // gen-demand
  std::string demand_kind;
  int demand_n = 0;
  double zeta = 0.0;
  double gamma = 0.0;
  double high = kDefaultSparseHigh;
  std::uint64_t seed = 1;
  std::string demand_out = "-";
  auto* gen_demand = app.add_subcommand("gen-demand",
                                        "Write a synthetic demand matrix");
  gen_demand->add_option("--kind", demand_kind, "zipf or sparse")
      ->required()
      ->check(CLI::IsMember({"zipf", "sparse"}));
  gen_demand->add_option("--n", demand_n, "Node count")->required();
  auto* zeta_opt = gen_demand->add_option("--zeta", zeta, "Zipf exponent");
  auto* gamma_opt =
      gen_demand->add_option("--gamma", gamma, "Sparsity in [0, 1)");
  gen_demand->add_option("--high", high, "Raw value of a sparse pair");
  gen_demand->add_option("--seed", seed, "Generator seed");
  gen_demand->add_option("-o,--output", demand_out, "Output file or -");

  // run
  std::string algo_name;
  std::string graph_path;
  DemandInput run_demand;
  int alpha = 12;
  std::string matching_out = "-";
  std::string groups_out;
  bool print_trace = false;
  auto* run = app.add_subcommand("run", "Compute one augmentation matching");
  run->add_option("--algo", algo_name, "spiderdan, greedy, mod or superchord")
      ->required()
      ->check(CLI::IsMember({"spiderdan", "greedy", "mod", "superchord"}));
  run->add_option("--graph", graph_path, "Infrastructure edge list")
      ->required();
  AddDemandOptions(run, run_demand);
  run->add_option("--alpha", alpha, "Super-node size (spiderdan)")
      ->check(CLI::Range(2, 1 << 30));
  run->add_option("-o,--output", matching_out, "Matching file or -");
  run->add_option("--dump-groups", groups_out,
                  "Write spiderdan super-node groups to this file");
  run->add_flag("--trace", print_trace, "Print per-stage diagnostics");

  // sweep
  std::string config_path;
  std::string sweep_out;
  int sweep_threads = 0;
  auto* sweep = app.add_subcommand("sweep", "Run an experiment config");
  sweep->add_option("--config", config_path, "Experiment config file")
      ->required()
      ->check(CLI::ExistingFile);
  sweep->add_option("-o,--output", sweep_out, "Override the output CSV");
  sweep->add_option("--threads", sweep_threads, "Override worker count")
      ->check(CLI::PositiveNumber);

  // compare
  std::string csv_path;
  std::string baseline_algo = "greedy";
  auto* compare = app.add_subcommand("compare", "Summarize a results CSV");
  compare->add_option("csv", csv_path, "Results CSV")->required();
  compare->add_option("--baseline", baseline_algo,
                      "Algorithm the others are divided by");

  // export-mip
  std::string mip_graph;
  DemandInput mip_demand;
  double big_m = 0.0;
  std::string mip_out = "-";
  auto* export_mip =
      app.add_subcommand("export-mip", "Write the exact model as CPLEX LP");
  export_mip->add_option("--graph", mip_graph, "Infrastructure edge list")
      ->required();
  AddDemandOptions(export_mip, mip_demand);
  export_mip->add_option("--big-m", big_m, "Big-M constant (default n)");
  export_mip->add_option("-o,--output", mip_out, "LP file or -");

  // oracle
  std::string oracle_graph;
  DemandInput oracle_demand;
  int limit = kDefaultEnumerationLimit;
  std::string oracle_out;
  auto* oracle = app.add_subcommand(
      "oracle", "Optimal matching by exhaustive search (small n)");
  oracle->add_option("--graph", oracle_graph, "Infrastructure edge list")
      ->required();
  AddDemandOptions(oracle, oracle_demand);
  oracle->add_option("--limit", limit, "Largest n to enumerate");
  oracle->add_option("-o,--output", oracle_out, "Write the matching here");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 1;
  }

  try {
    if (*gen_topology) {
      TopologySpec spec{ParseTopologyKind(topo_kind), topo_dims};
      const Graph g = GenerateTopology(spec);
      WithOutput(topo_out, [&](std::ostream& out) {
        WriteEdgeList(out, g.num_nodes(), g.Edges());
      });
    } else if (*gen_demand) {
      DemandMatrix d;
      if (demand_kind == "zipf") {
        if (zeta_opt->count() == 0) {
          std::cerr << "gen-demand: --zeta is required for zipf\n";
          return 1;
        }
        d = ZipfDemand(demand_n, zeta, seed);
      } else {
        if (gamma_opt->count() == 0) {
          std::cerr << "gen-demand: --gamma is required for sparse\n";
          return 1;
        }
        d = SparseRandomDemand(demand_n, gamma, high, seed);
      }
      WithOutput(demand_out,
                 [&](std::ostream& out) { WriteDemandTriples(out, d); });
    } else if (*run) {
      const Graph g = ReadGraph(graph_path);
      const DemandMatrix d = LoadDemandFile(run_demand.path, run_demand.format);
      AlgorithmOptions options;
      options.alpha = alpha;
      const AlgorithmResult r =
          RunAlgorithm(ParseAlgorithm(algo_name), g, d, options);
      WithOutput(matching_out, [&](std::ostream& out) {
        WriteEdgeList(out, g.num_nodes(), r.matching.Sorted());
      });
      if (!groups_out.empty()) {
        if (!r.grouping) {
          std::cerr << "run: --dump-groups applies to spiderdan only\n";
          return 1;
        }
        WithOutput(groups_out,
                   [&](std::ostream& out) { WriteGroups(out, *r.grouping); });
      }
      const double baseline = Epl(g, d);
      const double epl = Epl(Augment(g, r.matching), d);
      std::cerr << "algorithm=" << algo_name << " epl=" << FormatDouble(epl)
                << " baseline_epl=" << FormatDouble(baseline)
                << " ratio=" << FormatDouble(baseline > 0 ? epl / baseline : 1)
                << " runtime_ms=" << FormatDouble(r.runtime_ms) << "\n";
      if (print_trace) std::cerr << r.trace.ToString();
    } else if (*sweep) {
      ExperimentConfig config = LoadExperimentConfig(config_path);
      if (!sweep_out.empty()) config.output = sweep_out;
      if (sweep_threads > 0) config.threads = sweep_threads;
      const ExperimentStats s = RunExperiment(config);
      std::cerr << "wrote " << config.output << ": " << s.cells << " rows ("
                << s.resumed << " resumed, " << s.errors << " errors, "
                << s.timeouts << " timeouts)\n";
    } else if (*compare) {
      std::ifstream in(csv_path);
      if (!in) throw IoError("cannot open " + csv_path);
      const std::vector<ResultRow> rows = ReadResultsCsv(in, csv_path);
      WriteCompareTable(std::cout, Compare(rows, baseline_algo));
    } else if (*export_mip) {
      const Graph g = ReadGraph(mip_graph);
      const DemandMatrix d = LoadDemandFile(mip_demand.path, mip_demand.format);
      const MipModel model = BuildMip(g, d, big_m);
      WithOutput(mip_out, [&](std::ostream& out) { WriteLp(out, model); });
    } else if (*oracle) {
      const Graph g = ReadGraph(oracle_graph);
      const DemandMatrix d =
          LoadDemandFile(oracle_demand.path, oracle_demand.format);
      const OptimalMatching best = EnumerateOptimal(g, d, limit);
      if (!oracle_out.empty()) {
        WithOutput(oracle_out, [&](std::ostream& out) {
          WriteEdgeList(out, g.num_nodes(), best.matching.Sorted());
        });
      }
      std::cout << "optimal_epl=" << FormatDouble(best.epl)
                << " matchings_visited=" << best.matchings_visited << "\n";
    }
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitData;
  }
  return 0;
}
