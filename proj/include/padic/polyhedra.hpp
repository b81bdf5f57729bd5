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
#include <optional>
#include <variant>
#include <vector>

#include "padic/generating_sets.hpp"
#include "padic/lp.hpp"
#include "padic/matrix.hpp"

namespace padic {

// P = {x : A x <= b}.
struct HPolyhedron {
  IntMatrix a;
  IntVector b;
};

// Drops repeated (row, rhs) pairs, keeping first occurrences.
HPolyhedron dedup_rows(const HPolyhedron& p);

struct FaceClosure {
  std::vector<std::size_t> implicit_eq;  // sorted
  RatVector witness;                     // strict on every other row
};

// Implicit equalities and a relative-interior point of the face
// {x : A x <= b, A_i x = b_i for i in forced}. Returns nothing when that face
// is empty; then *farkas (if given) receives y >= 0 with y^T A = 0 and
// y^T b < 0 over the rows of A followed by the negated forced rows.
std::optional<FaceClosure> face_closure(const IntMatrix& a, const RatVector& b,
                                        const std::vector<std::size_t>& forced,
                                        RatVector* farkas = nullptr);

struct PolyFace {
  std::vector<std::size_t> implicit_eq;
  RatVector witness;
  bool minimal = false;
};

struct FaceOptions {
  std::size_t max_faces = 20000;
};

// All nonempty faces, sorted by implicit-equality set. Throws
// EmptyPolyhedronError for empty P and Error(kSize) past max_faces.
std::vector<PolyFace> enumerate_faces(const HPolyhedron& p,
                                      const FaceOptions& opts = {});

// Result of a per-face test. On failure, `face` is the offending face and `y`
// is indexed by face.implicit_eq: y^T A_F integral, y^T b_F not p-adic (not
// integral for the integral test).
struct PolyhedronVerdict {
  bool holds = true;
  PolyFace face;
  RatVector y;
};

PolyhedronVerdict is_padic_polyhedron(const HPolyhedron& p, const BigInt& prime,
                                      const FaceOptions& opts = {});
PolyhedronVerdict is_integral_polyhedron(const HPolyhedron& p,
                                         const FaceOptions& opts = {});

enum class TdpMethod {
  kAllFaces,           // rows of A_F form a p-GSS on every face
  kMinimalFaceCones,   // rows of A_F form a p-GSC on every minimal face
};

struct TdpVerdict {
  bool holds = true;
  bool vacuous = false;   // P empty
  RatVector farkas;       // emptiness proof when vacuous
  PolyFace face;          // failing face
  IntVector support;      // sum of the face's rows: maximized exactly on F
  BigInt support_value;   // sum of the face's right-hand sides
  PgssResult pgss;        // rows of A_F
  GscResult gsc;          // kMinimalFaceCones only
};

TdpVerdict is_tdp(const HPolyhedron& p, const BigInt& prime,
                  TdpMethod method = TdpMethod::kAllFaces,
                  const FaceOptions& opts = {});

struct TdAllPrimesVerdict {
  bool holds = true;
  bool vacuous = false;
  PolyFace face;
  BigInt gcd;  // gcd of the rank-order minors of A_F on the failing face
};

TdAllPrimesVerdict is_td_all_primes(const HPolyhedron& p,
                                    const FaceOptions& opts = {});

struct DualOptimum {
  RatVector y;  // p-adic, A^T y = w, y >= 0
  BigRat value;
  std::vector<std::size_t> optimal_face;
};

// The optimal dual set has no p-adic point: u satisfies A_F u integral and
// w^T u not p-adic, where F is the optimal face. x is a relative-interior
// optimal primal point and `dual` a rational dual optimum proving it.
struct NonePAdic {
  std::vector<std::size_t> optimal_face;
  RatVector u;
  RatVector x;
  RatVector dual;
  BigRat value;
};

struct NoOptimum {
  LpStatus status;
};

using DualOptimumResult = std::variant<DualOptimum, NonePAdic, NoOptimum>;

DualOptimumResult dual_padic_optimum(const HPolyhedron& p, const IntVector& w,
                                     const BigInt& prime);

}  // namespace padic
