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


#include "matchaug/experiment.h"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <filesystem>
#include <fstream>
#include <iomanip>
#include <map>
#include <mutex>
#include <set>
#include <sstream>
#include <thread>

#include "matchaug/demand_sources.h"
#include "matchaug/epl.h"
#include "matchaug/io.h"
#include "text_util.h"

namespace matchaug {
namespace {

namespace fs = std::filesystem;
using internal::ParseDouble;
using internal::ParseInt;
using internal::SplitFields;
using internal::Trim;

constexpr const char* kColumns[] = {
    "schema_version", "instance",     "topology",        "n",
    "demand_kind",    "demand_param", "seed",            "algorithm",
    "epl",            "baseline_epl", "ratio",           "runtime_ms",
    "matching_size",  "dropped_fingers", "leftover_size", "timeout",
    "error"};
constexpr int kNumColumns = sizeof(kColumns) / sizeof(kColumns[0]);

// ---- config -------------------------------------------------------------

class ConfigParser {
 public:
  ConfigParser(std::istream& in, std::string source)
      : in_(in), source_(std::move(source)) {}

  ExperimentConfig Parse() {
    std::string raw;
    while (std::getline(in_, raw)) {
      ++line_;
      std::string_view s = raw;
      const std::size_t comment = s.find_first_of("#;");
      if (comment != std::string_view::npos) s = s.substr(0, comment);
      s = Trim(s);
      if (s.empty()) continue;
      if (s.front() == '[') {
        OpenSection(s);
        continue;
      }
      const std::size_t eq = s.find('=');
      if (eq == std::string_view::npos) Fail("expected key = value");
      SetKey(std::string(Trim(s.substr(0, eq))), Trim(s.substr(eq + 1)));
    }
    Finish();
    return std::move(config_);
  }

 private:
  enum class Section { kNone, kExperiment, kTopology, kDemand, kAlgorithms };

  [[noreturn]] void Fail(const std::string& what) const {
    throw ParseError(source_, line_, what);
  }

  void OpenSection(std::string_view s) {
    if (s.back() != ']') Fail("unterminated section header");
    const std::string name(Trim(s.substr(1, s.size() - 2)));
    if (name == "experiment") {
      section_ = Section::kExperiment;
    } else if (name == "topology") {
      section_ = Section::kTopology;
      config_.topologies.emplace_back();
      topology_dims_set_.push_back(false);
      topology_kind_set_.push_back(false);
    } else if (name == "demand") {
      section_ = Section::kDemand;
      config_.demands.emplace_back();
      demand_kind_set_.push_back(false);
      demand_lines_.push_back(line_);
    } else if (name == "algorithms") {
      section_ = Section::kAlgorithms;
      algorithms_set_ = true;
    } else {
      Fail("unknown section [" + name + "]");
    }
  }

  double Number(std::string_view v) const {
    double x = 0;
    if (!ParseDouble(v, x)) Fail("not a number: '" + std::string(v) + "'");
    return x;
  }

  long long Integer(std::string_view v) const {
    long long x = 0;
    if (!ParseInt(v, x)) Fail("not an integer: '" + std::string(v) + "'");
    return x;
  }

  std::vector<std::string_view> List(std::string_view v) const {
    std::vector<std::string_view> out;
    for (std::string_view f : SplitFields(v)) {
      // Comma fields may still hold spaces ("1, 2 3").
      for (std::string_view g : SplitFields(f)) out.push_back(g);
    }
    if (out.empty()) Fail("empty list");
    return out;
  }

  void SetKey(const std::string& key, std::string_view value) {
    switch (section_) {
      case Section::kNone:
        Fail("key '" + key + "' outside a section");
      case Section::kExperiment:
        if (key == "output") {
          config_.output = std::string(value);
        } else if (key == "time_limit_s") {
          config_.time_limit_s = Number(value);
          if (!(config_.time_limit_s > 0)) Fail("time_limit_s must be > 0");
        } else if (key == "threads") {
          config_.threads = static_cast<int>(Integer(value));
          if (config_.threads < 1) Fail("threads must be >= 1");
        } else if (key == "timing") {
          if (value == "on") {
            config_.timing = true;
          } else if (value == "off") {
            config_.timing = false;
          } else {
            Fail("timing must be on or off");
          }
        } else {
          Fail("unknown key '" + key + "' in [experiment]");
        }
        return;
      case Section::kTopology: {
        TopologyEntry& t = config_.topologies.back();
        if (key == "kind") {
          try {
            t.spec.kind = ParseTopologyKind(value);
          } catch (const Error& e) {
            Fail(e.what());
          }
          topology_kind_set_.back() = true;
        } else if (key == "dims") {
          t.spec.dims.clear();
          if (value == "auto") {
            t.auto_size = true;
          } else {
            for (std::string_view f : List(value)) {
              t.spec.dims.push_back(static_cast<int>(Integer(f)));
            }
          }
          topology_dims_set_.back() = true;
        } else {
          Fail("unknown key '" + key + "' in [topology]");
        }
        return;
      }
      case Section::kDemand: {
        DemandSpec& d = config_.demands.back();
        if (key == "kind") {
          try {
            d.kind = ParseDemandKind(value);
          } catch (const Error& e) {
            Fail(e.what());
          }
          demand_kind_set_.back() = true;
        } else if (key == "zeta" || key == "gamma") {
          d.params.clear();
          for (std::string_view f : List(value)) d.params.push_back(Number(f));
          param_key_[config_.demands.size() - 1] = key;
        } else if (key == "seeds") {
          d.seeds.clear();
          for (std::string_view f : List(value)) AddSeeds(f, d.seeds);
        } else if (key == "high") {
          d.high = Number(value);
          if (!(d.high > 0)) Fail("high must be > 0");
        } else if (key == "path") {
          d.path = ResolvePath(std::string(value));
        } else {
          Fail("unknown key '" + key + "' in [demand]");
        }
        return;
      }
      case Section::kAlgorithms:
        if (key == "list") {
          config_.algorithms.clear();
          for (std::string_view f : List(value)) {
            try {
              config_.algorithms.push_back(ParseAlgorithm(f));
            } catch (const Error& e) {
              Fail(e.what());
            }
          }
        } else if (key == "alpha") {
          config_.alpha = static_cast<int>(Integer(value));
          if (config_.alpha < 2) Fail("alpha must be >= 2");
        } else {
          Fail("unknown key '" + key + "' in [algorithms]");
        }
        return;
    }
  }

  void AddSeeds(std::string_view f, std::vector<std::uint64_t>& seeds) const {
    const std::size_t dots = f.find("..");
    if (dots == std::string_view::npos) {
      const long long s = Integer(f);
      if (s < 0) Fail("seeds must be >= 0");
      seeds.push_back(static_cast<std::uint64_t>(s));
      return;
    }
    const long long lo = Integer(f.substr(0, dots));
    const long long hi = Integer(f.substr(dots + 2));
    if (lo < 0 || hi < lo) Fail("bad seed range '" + std::string(f) + "'");
    for (long long s = lo; s <= hi; ++s) {
      seeds.push_back(static_cast<std::uint64_t>(s));
    }
  }

  std::string ResolvePath(const std::string& p) const {
    const fs::path path(p);
    if (path.is_absolute() || source_.empty() || source_.front() == '<') {
      return p;
    }
    return (fs::path(source_).parent_path() / path).lexically_normal().string();
  }

  void Finish() {
    if (config_.topologies.empty()) Fail("no [topology] section");
    if (config_.demands.empty()) Fail("no [demand] section");
    for (std::size_t i = 0; i < config_.topologies.size(); ++i) {
      const TopologyEntry& t = config_.topologies[i];
      if (!topology_kind_set_[i] || !topology_dims_set_[i]) {
        Fail("[topology] #" + std::to_string(i + 1) + " needs kind and dims");
      }
      if (t.auto_size && t.spec.kind != TopologyKind::kRing) {
        Fail("dims = auto is only supported for rings");
      }
    }
    // A ring section with several sizes stands for one ring per size.
    std::vector<TopologyEntry> expanded;
    for (const TopologyEntry& t : config_.topologies) {
      if (t.spec.kind != TopologyKind::kRing || t.spec.dims.size() <= 1) {
        expanded.push_back(t);
        continue;
      }
      for (int n : t.spec.dims) {
        TopologyEntry one = t;
        one.spec.dims = {n};
        expanded.push_back(one);
      }
    }
    config_.topologies = std::move(expanded);
    for (std::size_t i = 0; i < config_.demands.size(); ++i) {
      const DemandSpec& d = config_.demands[i];
      line_ = demand_lines_[i];
      if (!demand_kind_set_[i]) Fail("[demand] needs a kind");
      const bool synthetic =
          d.kind == DemandKind::kZipf || d.kind == DemandKind::kSparse;
      if (synthetic) {
        const std::string want = d.kind == DemandKind::kZipf ? "zeta" : "gamma";
        const auto key = param_key_.find(i);
        if (d.params.empty() || key == param_key_.end() ||
            key->second != want) {
          Fail("[demand] kind " + std::string(DemandKindName(d.kind)) +
               " needs " + want);
        }
        if (d.seeds.empty()) Fail("[demand] needs explicit seeds");
      } else if (d.path.empty()) {
        Fail("[demand] kind " + std::string(DemandKindName(d.kind)) +
             " needs a path");
      }
    }
    if (!algorithms_set_ || config_.algorithms.empty()) {
      const auto all = AllAlgorithms();
      config_.algorithms.assign(all.begin(), all.end());
    }
  }

  std::istream& in_;
  std::string source_;
  int line_ = 0;
  Section section_ = Section::kNone;
  ExperimentConfig config_;
  std::vector<bool> topology_kind_set_;
  std::vector<bool> topology_dims_set_;
  std::vector<bool> demand_kind_set_;
  std::vector<int> demand_lines_;
  std::map<std::size_t, std::string> param_key_;
  bool algorithms_set_ = false;
};

// ---- CSV ----------------------------------------------------------------

std::string Sanitize(std::string s) {
  for (char& c : s) {
    if (c == ',') c = ';';
    if (c == '\n' || c == '\r') c = ' ';
  }
  return s;
}

std::string OptionalText(const std::optional<double>& x) {
  return x ? FormatDouble(*x) : std::string();
}

std::string OptionalText(const std::optional<int>& x) {
  return x ? std::to_string(*x) : std::string();
}

std::vector<std::string_view> SplitCsv(std::string_view line) {
  std::vector<std::string_view> out;
  std::size_t start = 0;
  while (true) {
    const std::size_t comma = line.find(',', start);
    out.push_back(line.substr(start, comma - start));
    if (comma == std::string_view::npos) break;
    start = comma + 1;
  }
  return out;
}

// Column positions from a header line; throws on missing columns.
std::vector<int> MapColumns(std::string_view header, const std::string& source) {
  const std::vector<std::string_view> names = SplitCsv(Trim(header));
  std::vector<int> index(kNumColumns, -1);
  for (int c = 0; c < kNumColumns; ++c) {
    for (std::size_t i = 0; i < names.size(); ++i) {
      if (Trim(names[i]) == kColumns[c]) index[c] = static_cast<int>(i);
    }
  }
  std::string missing;
  for (int c = 0; c < kNumColumns; ++c) {
    if (index[c] < 0) missing += (missing.empty() ? "" : ", ") +
                                 std::string(kColumns[c]);
  }
  if (!missing.empty()) {
    throw ParseError(source, 1, "results schema mismatch; missing columns: " +
                                    missing);
  }
  return index;
}

std::optional<ResultRow> ParseRow(std::string_view line,
                                  const std::vector<int>& index,
                                  std::string& why) {
  const std::vector<std::string_view> f = SplitCsv(line);
  const auto field = [&](int c) -> std::string_view {
    const int i = index[c];
    return i < static_cast<int>(f.size()) ? Trim(f[i]) : std::string_view();
  };
  int max_index = 0;
  for (int i : index) max_index = std::max(max_index, i);
  if (static_cast<int>(f.size()) <= max_index) {
    why = "expected at least " + std::to_string(max_index + 1) + " fields";
    return std::nullopt;
  }
  long long version = 0;
  if (!ParseInt(field(0), version) || version != kCsvSchemaVersion) {
    why = "unsupported schema_version '" + std::string(field(0)) + "'";
    return std::nullopt;
  }
  ResultRow r;
  r.instance = field(1);
  r.topology = field(2);
  long long n = 0;
  if (!ParseInt(field(3), n)) {
    why = "bad n";
    return std::nullopt;
  }
  r.n = static_cast<int>(n);
  r.demand_kind = field(4);
  r.demand_param = field(5);
  r.seed = field(6);
  r.algorithm = field(7);
  const auto real = [&](int c, std::optional<double>& out) {
    const std::string_view s = field(c);
    if (s.empty()) return true;
    double x = 0;
    if (!ParseDouble(s, x)) return false;
    out = x;
    return true;
  };
  const auto integer = [&](int c, std::optional<int>& out) {
    const std::string_view s = field(c);
    if (s.empty()) return true;
    long long x = 0;
    if (!ParseInt(s, x)) return false;
    out = static_cast<int>(x);
    return true;
  };
  if (!real(8, r.epl) || !real(9, r.baseline_epl) || !real(10, r.ratio) ||
      !real(11, r.runtime_ms) || !integer(12, r.matching_size) ||
      !integer(13, r.dropped_fingers) || !integer(14, r.leftover_size)) {
    why = "bad numeric field";
    return std::nullopt;
  }
  const std::string_view timeout = field(15);
  if (timeout != "0" && timeout != "1") {
    why = "timeout must be 0 or 1";
    return std::nullopt;
  }
  r.timeout = timeout == "1";
  r.error = field(16);
  return r;
}

// ---- sweep --------------------------------------------------------------

struct Instance {
  std::string id;
  const TopologyEntry* topology = nullptr;
  const DemandSpec* demand = nullptr;
  double param = 0.0;
  std::uint64_t seed = 0;
};

bool IsSynthetic(DemandKind k) {
  return k == DemandKind::kZipf || k == DemandKind::kSparse;
}

std::vector<Instance> Expand(const ExperimentConfig& config) {
  std::vector<Instance> out;
  for (const TopologyEntry& t : config.topologies) {
    const std::string topo =
        t.auto_size ? "ring-auto" : t.spec.Name();
    for (const DemandSpec& d : config.demands) {
      const std::string kind(DemandKindName(d.kind));
      if (!IsSynthetic(d.kind)) {
        out.push_back({topo + "/" + kind + "-" +
                           fs::path(d.path).filename().string(),
                       &t, &d, 0.0, 0});
        continue;
      }
      for (double p : d.params) {
        for (std::uint64_t s : d.seeds) {
          out.push_back({topo + "/" + kind + "-" + FormatDouble(p) + "/s" +
                             std::to_string(s),
                         &t, &d, p, s});
        }
      }
    }
  }
  return out;
}

struct LoadedInstance {
  Graph graph;
  DemandMatrix demand;
  std::string topology;
};

LoadedInstance Load(const Instance& inst) {
  LoadedInstance out;
  const DemandSpec& d = *inst.demand;
  const TopologyEntry& t = *inst.topology;
  if (IsSynthetic(d.kind)) {
    TopologySpec spec = t.spec;
    out.graph = GenerateTopology(spec);
    out.topology = spec.Name();
    const int n = out.graph.num_nodes();
    out.demand = d.kind == DemandKind::kZipf
                     ? ZipfDemand(n, inst.param, inst.seed)
                     : SparseRandomDemand(n, inst.param, d.high, inst.seed);
    return out;
  }
  TraceDemand trace = d.kind == DemandKind::kPairs ? LoadPairList(d.path)
                                                   : LoadMatrixMarket(d.path);
  TopologySpec spec = t.spec;
  if (t.auto_size) spec.dims = {trace.demand.num_nodes()};
  if (spec.num_nodes() != trace.demand.num_nodes()) {
    throw ValidationError("topology " + spec.Name() + " has " +
                          std::to_string(spec.num_nodes()) +
                          " nodes but the demand has " +
                          std::to_string(trace.demand.num_nodes()));
  }
  out.graph = GenerateTopology(spec);
  out.topology = spec.Name();
  out.demand = std::move(trace.demand);
  return out;
}

ResultRow BaseRow(const Instance& inst, Algorithm a) {
  ResultRow r;
  r.instance = inst.id;
  r.topology = inst.topology->auto_size ? "ring-auto"
                                        : inst.topology->spec.Name();
  r.n = inst.topology->auto_size ? 0 : inst.topology->spec.num_nodes();
  r.demand_kind = DemandKindName(inst.demand->kind);
  if (IsSynthetic(inst.demand->kind)) {
    r.demand_param = FormatDouble(inst.param);
    r.seed = std::to_string(inst.seed);
  } else {
    r.demand_param = fs::path(inst.demand->path).filename().string();
  }
  r.algorithm = AlgorithmName(a);
  return r;
}

ResultRow RunCell(const ExperimentConfig& config, const LoadedInstance& li,
                  double baseline, Algorithm a, ResultRow row) {
  AlgorithmOptions options;
  options.alpha = config.alpha;
  options.deadline = Deadline::After(
      std::chrono::duration<double>(config.time_limit_s));
  try {
    const AlgorithmResult result =
        RunAlgorithm(a, li.graph, li.demand, options);
    const MatchingCheck check =
        ValidateMatching(result.matching, li.graph.num_nodes(), true);
    if (!check.ok()) {
      row.error = "algorithm returned an invalid matching";
      return row;
    }
    const double epl = Epl(Augment(li.graph, result.matching), li.demand);
    row.epl = epl;
    row.ratio = baseline > 0 ? epl / baseline : 1.0;
    if (config.timing) row.runtime_ms = result.runtime_ms;
    row.matching_size = static_cast<int>(result.matching.size());
    if (a == Algorithm::kSuperChord) {
      row.dropped_fingers = result.trace.fingers_dropped;
    }
    if (a == Algorithm::kSpiderDan) row.leftover_size = result.trace.leftover;
  } catch (const TimeoutError&) {
    row.timeout = true;
    row.epl.reset();
    row.ratio.reset();
  } catch (const std::exception& e) {
    row.error = Sanitize(e.what());
  }
  return row;
}

std::string Key(const std::string& instance, const std::string& algorithm) {
  return instance + "\n" + algorithm;
}

}  // namespace

std::string_view DemandKindName(DemandKind kind) {
  switch (kind) {
    case DemandKind::kZipf:
      return "zipf";
    case DemandKind::kSparse:
      return "sparse";
    case DemandKind::kPairs:
      return "pairs";
    case DemandKind::kMatrixMarket:
      return "mtx";
  }
  return "?";
}

DemandKind ParseDemandKind(std::string_view name) {
  for (DemandKind k : {DemandKind::kZipf, DemandKind::kSparse,
                       DemandKind::kPairs, DemandKind::kMatrixMarket}) {
    if (DemandKindName(k) == name) return k;
  }
  throw ValidationError("unknown demand kind '" + std::string(name) +
                        "' (expected zipf, sparse, pairs or mtx)");
}

ExperimentConfig ParseExperimentConfig(std::istream& in,
                                       const std::string& source) {
  return ConfigParser(in, source).Parse();
}

ExperimentConfig LoadExperimentConfig(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot open " + path);
  return ParseExperimentConfig(in, path);
}

std::string CsvHeader() {
  std::string s;
  for (int c = 0; c < kNumColumns; ++c) {
    if (c > 0) s += ",";
    s += kColumns[c];
  }
  return s;
}

std::string FormatCsvRow(const ResultRow& r) {
  std::ostringstream out;
  out << kCsvSchemaVersion << "," << Sanitize(r.instance) << ","
      << Sanitize(r.topology) << "," << r.n << "," << Sanitize(r.demand_kind)
      << "," << Sanitize(r.demand_param) << "," << Sanitize(r.seed) << ","
      << Sanitize(r.algorithm) << "," << OptionalText(r.epl) << ","
      << OptionalText(r.baseline_epl) << "," << OptionalText(r.ratio) << ","
      << OptionalText(r.runtime_ms) << "," << OptionalText(r.matching_size)
      << "," << OptionalText(r.dropped_fingers) << ","
      << OptionalText(r.leftover_size) << "," << (r.timeout ? 1 : 0) << ","
      << Sanitize(r.error);
  return out.str();
}

std::vector<ResultRow> ReadResultsCsv(std::istream& in,
                                      const std::string& source) {
  std::string line;
  if (!std::getline(in, line)) {
    throw ParseError(source, 1, "empty results file");
  }
  const std::vector<int> index = MapColumns(line, source);
  std::vector<ResultRow> rows;
  int line_no = 1;
  while (std::getline(in, line)) {
    ++line_no;
    if (Trim(line).empty()) continue;
    std::string why;
    std::optional<ResultRow> row = ParseRow(line, index, why);
    if (!row) throw ParseError(source, line_no, why);
    rows.push_back(std::move(*row));
  }
  return rows;
}

ExperimentStats RunExperiment(const ExperimentConfig& config) {
  const std::vector<Instance> instances = Expand(config);
  const std::vector<Algorithm>& algos = config.algorithms;
  const std::string partial_path = config.output + ".partial";

  // Rows kept from an interrupted run; a torn final line is dropped.
  std::map<std::string, ResultRow> done;
  {
    std::ifstream in(partial_path);
    std::string line;
    if (in && std::getline(in, line)) {
      try {
        const std::vector<int> index = MapColumns(line, partial_path);
        while (std::getline(in, line)) {
          std::string why;
          std::optional<ResultRow> row = ParseRow(line, index, why);
          if (row) done[Key(row->instance, row->algorithm)] = *row;
        }
      } catch (const ParseError&) {
        done.clear();
      }
    }
  }

  std::vector<std::vector<std::optional<ResultRow>>> table(
      instances.size(), std::vector<std::optional<ResultRow>>(algos.size()));
  ExperimentStats stats;
  for (std::size_t i = 0; i < instances.size(); ++i) {
    for (std::size_t a = 0; a < algos.size(); ++a) {
      const auto it = done.find(
          Key(instances[i].id, std::string(AlgorithmName(algos[a]))));
      if (it != done.end()) {
        table[i][a] = it->second;
        ++stats.resumed;
      }
    }
  }

  std::ofstream partial(partial_path, std::ios::trunc);
  if (!partial) throw IoError("cannot open " + partial_path + " for writing");
  partial << CsvHeader() << "\n";
  for (const auto& row : table) {
    for (const auto& cell : row) {
      if (cell) partial << FormatCsvRow(*cell) << "\n";
    }
  }
  partial.flush();

  std::mutex mu;
  const auto emit = [&](std::size_t i, std::size_t a, ResultRow row) {
    std::lock_guard lock(mu);
    partial << FormatCsvRow(row) << "\n";
    partial.flush();
    table[i][a] = std::move(row);
  };

  std::atomic<std::size_t> next{0};
  const auto worker = [&] {
    while (true) {
      const std::size_t i = next.fetch_add(1);
      if (i >= instances.size()) return;
      const Instance& inst = instances[i];
      bool pending = false;
      for (std::size_t a = 0; a < algos.size(); ++a) {
        std::lock_guard lock(mu);
        if (!table[i][a]) pending = true;
      }
      if (!pending) continue;
      LoadedInstance li;
      double baseline = 0.0;
      std::string failure;
      try {
        li = Load(inst);
        baseline = Epl(li.graph, li.demand);
      } catch (const std::exception& e) {
        failure = Sanitize(e.what());
      }
      for (std::size_t a = 0; a < algos.size(); ++a) {
        {
          std::lock_guard lock(mu);
          if (table[i][a]) continue;
        }
        ResultRow row = BaseRow(inst, algos[a]);
        if (!failure.empty()) {
          row.error = failure;
        } else {
          row.topology = li.topology;
          row.n = li.graph.num_nodes();
          row.baseline_epl = baseline;
          row = RunCell(config, li, baseline, algos[a], std::move(row));
        }
        emit(i, a, std::move(row));
      }
    }
  };
  {
    std::vector<std::jthread> pool;
    const int threads =
        std::max(1, std::min<int>(config.threads,
                                  static_cast<int>(instances.size())));
    for (int t = 0; t < threads; ++t) pool.emplace_back(worker);
  }
  partial.close();

  const std::string tmp_path = config.output + ".tmp";
  {
    std::ofstream out(tmp_path, std::ios::trunc);
    if (!out) throw IoError("cannot open " + tmp_path + " for writing");
    out << CsvHeader() << "\n";
    for (const auto& row : table) {
      for (const auto& cell : row) {
        ++stats.cells;
        if (!cell->error.empty()) ++stats.errors;
        if (cell->timeout) ++stats.timeouts;
        out << FormatCsvRow(*cell) << "\n";
      }
    }
    out.flush();
    if (!out) throw IoError("write to " + tmp_path + " failed");
  }
  std::error_code ec;
  fs::rename(tmp_path, config.output, ec);
  if (ec) throw IoError("cannot move results to " + config.output + ": " +
                        ec.message());
  fs::remove(partial_path, ec);
  return stats;
}

// ---- compare ------------------------------------------------------------

namespace {

double Median(std::vector<double> v) {
  std::sort(v.begin(), v.end());
  const std::size_t k = v.size() / 2;
  return v.size() % 2 == 1 ? v[k] : 0.5 * (v[k - 1] + v[k]);
}

double Mean(const std::vector<double>& v) {
  double s = 0;
  for (double x : v) s += x;
  return s / static_cast<double>(v.size());
}

bool SameEpl(double a, double b) {
  return std::abs(a - b) <= 1e-12 * std::max({1.0, std::abs(a), std::abs(b)});
}

}  // namespace

CompareSummary Compare(const std::vector<ResultRow>& rows,
                       const std::string& baseline_algorithm) {
  CompareSummary summary;
  summary.baseline_algorithm = baseline_algorithm;
  std::vector<std::string> algo_order;
  std::vector<std::string> instance_order;
  std::map<std::string, std::map<std::string, const ResultRow*>> by_instance;
  for (const ResultRow& r : rows) {
    if (!r.error.empty() || r.timeout || !r.epl) continue;
    if (std::find(algo_order.begin(), algo_order.end(), r.algorithm) ==
        algo_order.end()) {
      algo_order.push_back(r.algorithm);
    }
    if (!by_instance.contains(r.instance)) instance_order.push_back(r.instance);
    by_instance[r.instance][r.algorithm] = &r;
  }
  if (!baseline_algorithm.empty() &&
      std::find(algo_order.begin(), algo_order.end(), baseline_algorithm) ==
          algo_order.end()) {
    throw ValidationError("baseline algorithm '" + baseline_algorithm +
                          "' has no usable rows");
  }
  for (const std::string& name : algo_order) {
    AlgorithmSummary s;
    s.algorithm = name;
    std::vector<double> ratios, runtimes, vs_base;
    for (const std::string& inst : instance_order) {
      const auto& cells = by_instance[inst];
      const auto it = cells.find(name);
      if (it == cells.end()) continue;
      const ResultRow& r = *it->second;
      ++s.rows;
      if (r.ratio) ratios.push_back(*r.ratio);
      if (r.runtime_ms) runtimes.push_back(*r.runtime_ms);
      double best = *r.epl;
      for (const auto& [other, row] : cells) best = std::min(best, *row->epl);
      if (SameEpl(*r.epl, best)) {
        int sharing = 0;
        for (const auto& [other, row] : cells) {
          if (SameEpl(*row->epl, best)) ++sharing;
        }
        if (sharing == 1) {
          ++s.wins;
        } else {
          ++s.ties;
        }
      }
      const auto base = cells.find(baseline_algorithm);
      if (base != cells.end() && *base->second->epl > 0) {
        vs_base.push_back(*r.epl / *base->second->epl);
      }
    }
    if (!ratios.empty()) {
      s.mean_ratio = Mean(ratios);
      s.median_ratio = Median(ratios);
    }
    if (!runtimes.empty()) {
      s.mean_runtime_ms = Mean(runtimes);
      s.median_runtime_ms = Median(runtimes);
    }
    if (!vs_base.empty()) s.ratio_to_baseline = Mean(vs_base);
    summary.algorithms.push_back(std::move(s));
  }
  return summary;
}

void WriteCompareTable(std::ostream& out, const CompareSummary& summary) {
  const auto opt = [](const std::optional<double>& x) {
    if (!x) return std::string("-");
    std::ostringstream s;
    s << std::fixed << std::setprecision(3) << *x;
    return s.str();
  };
  const auto fixed = [](double x) {
    std::ostringstream s;
    s << std::fixed << std::setprecision(6) << x;
    return s.str();
  };
  out << std::left << std::setw(12) << "algorithm" << std::right
      << std::setw(6) << "rows" << std::setw(12) << "mean_ratio"
      << std::setw(14) << "median_ratio" << std::setw(12) << "mean_ms"
      << std::setw(12) << "median_ms" << std::setw(6) << "wins"
      << std::setw(6) << "ties" << std::setw(14)
      << ("vs_" + summary.baseline_algorithm) << "\n";
  for (const AlgorithmSummary& s : summary.algorithms) {
    out << std::left << std::setw(12) << s.algorithm << std::right
        << std::setw(6) << s.rows << std::setw(12) << fixed(s.mean_ratio)
        << std::setw(14) << fixed(s.median_ratio) << std::setw(12)
        << opt(s.mean_runtime_ms) << std::setw(12) << opt(s.median_runtime_ms)
        << std::setw(6) << s.wins << std::setw(6) << s.ties << std::setw(14)
        << (s.ratio_to_baseline ? fixed(*s.ratio_to_baseline) : "-") << "\n";
  }
}

}  // namespace matchaug
