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

#include "matchaug/io.h"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <sstream>

#include "text_util.h"

namespace matchaug {
namespace {

// Parses "# n=<count>" comments; returns -1 otherwise.
int HeaderNodeCount(std::string_view line, const std::string& source,
                    int line_no) {
  line.remove_prefix(1);
  line = internal::Trim(line);
  if (!line.starts_with("n=")) return -1;
  line.remove_prefix(2);
  long long n = 0;
  if (!internal::ParseInt(internal::Trim(line), n) || n < 0 ||
      n > (1LL << 30)) {
    throw ParseError(source, line_no, "bad node count header");
  }
  return static_cast<int>(n);
}

NodeId ParseNode(std::string_view tok, const std::string& source,
                 int line_no) {
  long long id = 0;
  if (!internal::ParseInt(tok, id) || id < 0 || id >= (1LL << 30)) {
    throw ParseError(source, line_no,
                     "bad node id '" + std::string(tok) + "'");
  }
  return static_cast<NodeId>(id);
}

std::ifstream OpenForRead(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot open " + path + " for reading");
  return in;
}

std::ofstream OpenForWrite(const std::string& path) {
  std::ofstream out(path, std::ios::trunc);
  if (!out) throw IoError("cannot open " + path + " for writing");
  return out;
}

void CheckWritten(std::ostream& out, const std::string& path) {
  out.flush();
  if (!out) throw IoError("write to " + path + " failed");
}

}  // namespace

std::string FormatDouble(double x) {
  char buf[64];
  auto [end, ec] = std::to_chars(buf, buf + sizeof(buf), x);
  return std::string(buf, end);
}

EdgeList ReadEdgeList(std::istream& in, const std::string& source) {
  EdgeList list;
  int header_n = -1;
  NodeId max_id = -1;
  std::string line;
  int line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    std::string_view view = internal::Trim(line);
    if (view.empty()) continue;
    if (view.front() == '#') {
      const int n = HeaderNodeCount(view, source, line_no);
      if (n >= 0) header_n = n;
      continue;
    }
    view = internal::Trim(view.substr(0, view.find('#')));
    const auto tokens = internal::SplitFields(view);
    if (tokens.size() != 2) {
      throw ParseError(source, line_no, "expected 'u v'");
    }
    const NodeId u = ParseNode(tokens[0], source, line_no);
    const NodeId v = ParseNode(tokens[1], source, line_no);
    max_id = std::max({max_id, u, v});
    list.edges.emplace_back(u, v);
  }
  list.num_nodes = header_n >= 0 ? header_n : max_id + 1;
  if (max_id >= list.num_nodes) {
    throw ParseError(source, 0, "node id exceeds declared node count");
  }
  return list;
}

void WriteEdgeList(std::ostream& out, int num_nodes,
                   const std::vector<NodePair>& edges) {
  out << "# n=" << num_nodes << "\n";
  for (const NodePair& e : edges) out << e.u << " " << e.v << "\n";
}

Graph ReadGraph(const std::string& path) {
  std::ifstream in = OpenForRead(path);
  const EdgeList list = ReadEdgeList(in, path);
  return Graph::FromEdges(list.num_nodes, list.edges);
}

void WriteGraph(const std::string& path, const Graph& g) {
  std::ofstream out = OpenForWrite(path);
  WriteEdgeList(out, g.num_nodes(), g.Edges());
  CheckWritten(out, path);
}

Matching ReadMatching(const std::string& path) {
  std::ifstream in = OpenForRead(path);
  return Matching(ReadEdgeList(in, path).edges);
}

void WriteMatching(const std::string& path, int num_nodes, const Matching& m) {
  std::ofstream out = OpenForWrite(path);
  WriteEdgeList(out, num_nodes, m.Sorted());
  CheckWritten(out, path);
}

DemandMatrix ReadDemandTriples(std::istream& in, const std::string& source) {
  std::vector<WeightedPair> pairs;
  int header_n = -1;
  NodeId max_id = -1;
  std::string line;
  int line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    std::string_view view = internal::Trim(line);
    if (view.empty()) continue;
    if (view.front() == '#') {
      const int n = HeaderNodeCount(view, source, line_no);
      if (n >= 0) header_n = n;
      continue;
    }
    view = internal::Trim(view.substr(0, view.find('#')));
    const auto tokens = internal::SplitFields(view);
    if (tokens.size() != 3) {
      throw ParseError(source, line_no, "expected 'u v value'");
    }
    const NodeId u = ParseNode(tokens[0], source, line_no);
    const NodeId v = ParseNode(tokens[1], source, line_no);
    double value = 0.0;
    if (!internal::ParseDouble(tokens[2], value)) {
      throw ParseError(source, line_no, "bad value");
    }
    if (u == v) throw ParseError(source, line_no, "diagonal demand entry");
    if (value < 0.0) throw ParseError(source, line_no, "negative demand");
    max_id = std::max({max_id, u, v});
    pairs.push_back({std::min(u, v), std::max(u, v), value});
  }
  const int n = header_n >= 0 ? header_n : max_id + 1;
  if (max_id >= n) {
    throw ParseError(source, 0, "node id exceeds declared node count");
  }
  if (pairs.empty()) throw ParseError(source, 0, "no demand entries");
  return DemandMatrix::FromPairs(n, pairs);
}

void WriteDemandTriples(std::ostream& out, const SymmetricMatrix& d) {
  out << "# n=" << d.num_nodes() << "\n";
  for (const WeightedPair& p : d.Pairs()) {
    out << p.u << " " << p.v << " " << FormatDouble(p.weight) << "\n";
  }
}

DemandMatrix ReadDemand(const std::string& path) {
  std::ifstream in = OpenForRead(path);
  return ReadDemandTriples(in, path);
}

void WriteDemand(const std::string& path, const SymmetricMatrix& d) {
  std::ofstream out = OpenForWrite(path);
  WriteDemandTriples(out, d);
  CheckWritten(out, path);
}

}  // namespace matchaug
