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

#include "matchaug/demand_sources.h"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <fstream>
#include <map>
#include <numeric>
#include <sstream>
#include <unordered_map>

#include "matchaug/io.h"
#include "matchaug/random.h"
#include "text_util.h"

namespace matchaug {
namespace {

void CheckGeneratorSize(int n) {
  if (n < 2 || n % 2 != 0) {
    throw ValidationError("demand generator needs an even n >= 2, got " +
                          std::to_string(n));
  }
}

std::ifstream OpenTrace(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot open " + path + " for reading");
  return in;
}

std::string Lower(std::string_view s) {
  std::string out(s);
  for (char& c : out) c = static_cast<char>(std::tolower(c));
  return out;
}

// Appends one isolated node when n is odd.
int PaddedSize(int n) { return n % 2 == 0 ? n : n + 1; }

}  // namespace

DemandMatrix ZipfDemand(int n, double zeta, std::uint64_t seed) {
  CheckGeneratorSize(n);
  if (!(zeta > 0.0) || !std::isfinite(zeta)) {
    throw ValidationError("zipf exponent must be positive");
  }
  const std::uint64_t num_pairs =
      static_cast<std::uint64_t>(n) * (n - 1) / 2;
  std::vector<std::uint32_t> rank(num_pairs);
  std::iota(rank.begin(), rank.end(), 1u);
  Rng rng(seed);
  for (std::uint64_t i = num_pairs - 1; i > 0; --i) {
    std::swap(rank[i], rank[rng.UniformBelow(i + 1)]);
  }
  double harmonic = 0.0;
  for (std::uint64_t x = 1; x <= num_pairs; ++x) {
    harmonic += std::pow(static_cast<double>(x), -zeta);
  }
  std::vector<WeightedPair> pairs;
  pairs.reserve(num_pairs);
  std::uint64_t k = 0;
  for (NodeId u = 0; u < n; ++u) {
    for (NodeId v = u + 1; v < n; ++v, ++k) {
      const double mass = std::pow(static_cast<double>(rank[k]), -zeta) /
                          harmonic;
      pairs.push_back({u, v, mass});
    }
  }
  return DemandMatrix::FromPairs(n, pairs);
}

DemandMatrix SparseRandomDemand(int n, double gamma, double high,
                                std::uint64_t seed) {
  CheckGeneratorSize(n);
  if (!(gamma >= 0.0 && gamma < 1.0)) {
    throw ValidationError("sparsity gamma must lie in [0, 1)");
  }
  if (!(high > 0.0) || !std::isfinite(high)) {
    throw ValidationError("high demand value must be positive");
  }
  const double keep = 1.0 - gamma;
  Rng rng(seed);
  std::vector<WeightedPair> pairs;
  while (pairs.empty()) {
    for (NodeId u = 0; u < n; ++u) {
      for (NodeId v = u + 1; v < n; ++v) {
        if (rng.Uniform01() < keep) pairs.push_back({u, v, high});
      }
    }
  }
  return DemandMatrix::FromPairs(n, pairs);
}

TraceDemand ReadPairList(std::istream& in, const std::string& source) {
  TraceDemand trace;
  std::unordered_map<std::string, NodeId> ids;
  std::map<std::pair<NodeId, NodeId>, double> mass;
  const auto id_of = [&](std::string_view label) {
    auto [it, inserted] =
        ids.try_emplace(std::string(label), static_cast<NodeId>(ids.size()));
    if (inserted) trace.labels.emplace_back(label);
    return it->second;
  };
  std::string line;
  int line_no = 0;
  int self_pairs = 0;
  while (std::getline(in, line)) {
    ++line_no;
    const std::string_view view = internal::Trim(line);
    if (view.empty() || view.front() == '#') continue;
    const auto fields = internal::SplitFields(view);
    if (fields.size() != 3 || fields[0].empty() || fields[1].empty()) {
      throw ParseError(source, line_no, "expected 'u,v,frequency'");
    }
    double freq = 0.0;
    if (!internal::ParseDouble(fields[2], freq) || !std::isfinite(freq)) {
      throw ParseError(source, line_no, "bad frequency");
    }
    if (freq < 0.0) throw ParseError(source, line_no, "negative frequency");
    const NodeId u = id_of(fields[0]);
    const NodeId v = id_of(fields[1]);
    if (u == v) {
      ++self_pairs;
      continue;
    }
    mass[{std::min(u, v), std::max(u, v)}] += freq;
  }
  if (trace.labels.empty()) throw ParseError(source, 0, "empty pair list");
  if (self_pairs > 0) {
    trace.warnings.push_back("dropped " + std::to_string(self_pairs) +
                             " self pair(s)");
  }
  const int n = static_cast<int>(trace.labels.size());
  const int padded = PaddedSize(n);
  if (padded != n) {
    trace.padding_nodes = 1;
    trace.labels.emplace_back("<pad>");
  }
  std::vector<WeightedPair> pairs;
  pairs.reserve(mass.size());
  for (const auto& [key, value] : mass) {
    pairs.push_back({key.first, key.second, value});
  }
  trace.demand = DemandMatrix::FromPairs(padded, pairs);
  return trace;
}

TraceDemand LoadPairList(const std::string& path) {
  std::ifstream in = OpenTrace(path);
  return ReadPairList(in, path);
}

TraceDemand ReadMatrixMarket(std::istream& in, const std::string& source) {
  std::string line;
  int line_no = 1;
  if (!std::getline(in, line)) throw ParseError(source, 1, "empty file");
  std::istringstream banner(line);
  std::string magic, object, format, field, symmetry;
  banner >> magic >> object >> format >> field >> symmetry;
  if (magic != "%%MatrixMarket" || Lower(object) != "matrix" ||
      Lower(format) != "coordinate") {
    throw ParseError(source, 1,
                     "banner must be '%%MatrixMarket matrix coordinate ...'");
  }
  field = Lower(field);
  symmetry = Lower(symmetry);
  const bool pattern = field == "pattern";
  if (field != "real" && field != "integer" && !pattern) {
    throw ParseError(source, 1, "unsupported field '" + field + "'");
  }
  if (symmetry != "symmetric" && symmetry != "general") {
    throw ParseError(source, 1, "unsupported symmetry '" + symmetry + "'");
  }
  const bool general = symmetry == "general";

  long long rows = -1, cols = -1, nnz = -1;
  while (std::getline(in, line)) {
    ++line_no;
    const std::string_view view = internal::Trim(line);
    if (view.empty() || view.front() == '%') continue;
    const auto f = internal::SplitFields(view);
    if (f.size() != 3 || !internal::ParseInt(f[0], rows) ||
        !internal::ParseInt(f[1], cols) || !internal::ParseInt(f[2], nnz) ||
        rows < 0 || cols < 0 || nnz < 0) {
      throw ParseError(source, line_no, "bad size line");
    }
    break;
  }
  if (rows < 0) throw ParseError(source, line_no, "missing size line");
  if (rows != cols) throw ParseError(source, line_no, "matrix is not square");
  if (rows > (1LL << 28)) throw ParseError(source, line_no, "too many rows");

  TraceDemand trace;
  std::map<std::pair<NodeId, NodeId>, double> entries;
  long long seen = 0;
  int diagonal = 0;
  while (std::getline(in, line)) {
    ++line_no;
    const std::string_view view = internal::Trim(line);
    if (view.empty() || view.front() == '%') continue;
    const auto f = internal::SplitFields(view);
    long long i = 0, j = 0;
    double value = 1.0;
    if (f.size() != (pattern ? 2u : 3u) || !internal::ParseInt(f[0], i) ||
        !internal::ParseInt(f[1], j) ||
        (!pattern && !internal::ParseDouble(f[2], value))) {
      throw ParseError(source, line_no, "bad entry");
    }
    if (i < 1 || j < 1 || i > rows || j > cols) {
      throw ParseError(source, line_no, "entry index out of range");
    }
    if (!(value > 0.0) || !std::isfinite(value)) {
      throw ParseError(source, line_no, "non-positive value");
    }
    ++seen;
    if (i == j) {
      ++diagonal;
      continue;
    }
    entries[{static_cast<NodeId>(i - 1), static_cast<NodeId>(j - 1)}] += value;
  }
  if (seen != nnz) {
    throw ParseError(source, line_no,
                     "expected " + std::to_string(nnz) + " entries, found " +
                         std::to_string(seen));
  }
  if (diagonal > 0) {
    trace.warnings.push_back("dropped " + std::to_string(diagonal) +
                             " diagonal entr" + (diagonal == 1 ? "y" : "ies"));
  }

  std::vector<WeightedPair> pairs;
  if (general) {
    for (const auto& [key, value] : entries) {
      const auto [u, v] = key;
      auto mirror = entries.find({v, u});
      if (mirror == entries.end() || mirror->second != value) {
        throw ValidationError("general matrix is not symmetric",
                              NodePair(u, v));
      }
      if (u < v) pairs.push_back({u, v, value});
    }
  } else {
    for (const auto& [key, value] : entries) {
      pairs.push_back({std::min(key.first, key.second),
                       std::max(key.first, key.second), value});
    }
  }
  const int n = static_cast<int>(rows);
  const int padded = PaddedSize(n);
  trace.padding_nodes = padded - n;
  trace.labels.reserve(padded);
  for (int i = 1; i <= n; ++i) trace.labels.push_back(std::to_string(i));
  if (trace.padding_nodes > 0) trace.labels.emplace_back("<pad>");
  trace.demand = DemandMatrix::FromPairs(padded, pairs);
  return trace;
}

TraceDemand LoadMatrixMarket(const std::string& path) {
  std::ifstream in = OpenTrace(path);
  return ReadMatrixMarket(in, path);
}

void WriteMatrixMarket(std::ostream& out, const SymmetricMatrix& d) {
  const auto pairs = d.Pairs();
  out << "%%MatrixMarket matrix coordinate real symmetric\n";
  out << d.num_nodes() << " " << d.num_nodes() << " " << pairs.size() << "\n";
  for (const WeightedPair& p : pairs) {
    out << (p.v + 1) << " " << (p.u + 1) << " " << FormatDouble(p.weight)
        << "\n";
  }
}

void SaveMatrixMarket(const std::string& path, const SymmetricMatrix& d) {
  std::ofstream out(path, std::ios::trunc);
  if (!out) throw IoError("cannot open " + path + " for writing");
  WriteMatrixMarket(out, d);
  out.flush();
  if (!out) throw IoError("write to " + path + " failed");
}

DemandGraph BuildDemandGraph(const Graph& g, const SymmetricMatrix& d) {
  if (g.num_nodes() != d.num_nodes()) {
    throw ValidationError("graph and demand node counts differ");
  }
  DemandGraph dg;
  dg.num_nodes = d.num_nodes();
  for (const WeightedPair& p : d.Pairs()) {
    if (!g.HasEdge(p.u, p.v)) dg.edges.push_back(p);
  }
  if (dg.num_nodes > 0) {
    dg.average_degree = 2.0 * static_cast<double>(dg.edges.size()) /
                        static_cast<double>(dg.num_nodes);
  }
  return dg;
}

}  // namespace matchaug
