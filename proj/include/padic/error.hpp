// Copyright 2026 The padic Authors.
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

#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include <gmpxx.h>

namespace padic {

enum class ErrorKind {
  kInvalidPrime,
  kRank,
  kArgument,
  kDimension,
  kSize,
  kEmptyPolyhedron,
  kParse,
  kLookup,
};

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(what), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

class RankError : public Error {
 public:
  RankError(std::size_t rank, std::size_t expected)
      : Error(ErrorKind::kRank,
              "matrix has rank " + std::to_string(rank) + ", expected " +
                  std::to_string(expected)),
        rank_(rank) {}

  std::size_t rank() const noexcept { return rank_; }

 private:
  std::size_t rank_;
};

// Thrown when an operation requires a nonempty polyhedron {x : Ax <= b}.
// farkas() is y >= 0 with A^T y = 0 and b^T y < 0.
class EmptyPolyhedronError : public Error {
 public:
  explicit EmptyPolyhedronError(std::vector<mpq_class> farkas)
      : Error(ErrorKind::kEmptyPolyhedron, "polyhedron is empty"),
        farkas_(std::move(farkas)) {}

  const std::vector<mpq_class>& farkas() const noexcept { return farkas_; }

 private:
  std::vector<mpq_class> farkas_;
};

class ParseError : public Error {
 public:
  ParseError(std::size_t line, std::size_t column, const std::string& msg)
      : Error(ErrorKind::kParse, "line " + std::to_string(line) + ", column " +
                                     std::to_string(column) + ": " + msg),
        line_(line),
        column_(column) {}

  std::size_t line() const noexcept { return line_; }
  std::size_t column() const noexcept { return column_; }

 private:
  std::size_t line_;
  std::size_t column_;
};

}  // namespace padic
