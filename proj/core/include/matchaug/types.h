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

#ifndef MATCHAUG_TYPES_H_
#define MATCHAUG_TYPES_H_

#include <compare>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <utility>

namespace matchaug {

using NodeId = std::int32_t;

inline constexpr NodeId kNoNode = -1;

// An unordered node pair, stored with u <= v.
struct NodePair {
  NodeId u = kNoNode;
  NodeId v = kNoNode;

  constexpr NodePair() = default;
  constexpr NodePair(NodeId a, NodeId b)
      : u(a < b ? a : b), v(a < b ? b : a) {}

  friend constexpr auto operator<=>(const NodePair&, const NodePair&) = default;
};

std::string ToString(const NodePair& p);

// Base class for every error raised by the library. The CLI maps these to
// exit code 2 (data error).
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Input violates a documented invariant. Carries the offending pair when
// one is known.
class ValidationError : public Error {
 public:
  explicit ValidationError(const std::string& what) : Error(what) {}
  ValidationError(const std::string& what, NodePair pair)
      : Error(what + " at pair " + ToString(pair)), pair_(pair),
        has_pair_(true) {}

  bool has_pair() const { return has_pair_; }
  NodePair pair() const { return pair_; }

 private:
  NodePair pair_;
  bool has_pair_ = false;
};

// A demand pair has no path in the graph it is evaluated on.
class UnreachablePairError : public Error {
 public:
  UnreachablePairError(NodeId u, NodeId v)
      : Error("demand pair " + ToString(NodePair(u, v)) + " is unreachable"),
        pair_(u, v) {}
  NodePair pair() const { return pair_; }

 private:
  NodePair pair_;
};

// File could not be read or parsed. Line is 1-based, 0 when not applicable.
class ParseError : public Error {
 public:
  ParseError(const std::string& source, int line, const std::string& what)
      : Error(source + (line > 0 ? ":" + std::to_string(line) : "") + ": " +
              what),
        line_(line) {}
  int line() const { return line_; }

 private:
  int line_;
};

class IoError : public Error {
 public:
  using Error::Error;
};

class TimeoutError : public Error {
 public:
  TimeoutError() : Error("time limit exceeded") {}
};

}  // namespace matchaug

#endif  // MATCHAUG_TYPES_H_
