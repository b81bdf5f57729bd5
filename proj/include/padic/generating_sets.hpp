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
#include <variant>
#include <vector>

#include "padic/matrix.hpp"

namespace padic {

// Outcome of the p-GSS test on a matrix whose columns (equivalently rows)
// are the generators. When `holds` is false, `divisor` is the first
// elementary divisor that is not a power of p, and (y, x) satisfy
// y^T A integral, A x integral, y^T A x = 1/divisor.
struct PgssResult {
  bool holds = true;
  std::vector<BigInt> divisors;
  BigInt divisor;
  std::size_t index = 0;
  RatVector y;
  RatVector x;
};

PgssResult is_pgss(const IntMatrix& a, const BigInt& p);

// Cheap check of a failure witness: y^T A and A x integral, y^T A x equal to
// 1/divisor and divisor not a power of p.
bool verify_pgss_witness(const IntMatrix& a, const BigInt& p,
                         const BigInt& divisor, const RatVector& y,
                         const RatVector& x);

struct ReflexiveInverseFailure {
  BigInt divisor;
};

// B with p-adic entries and A B A = A, or the offending divisor.
std::variant<RatMatrix, ReflexiveInverseFailure> padic_reflexive_inverse(
    const IntMatrix& a, const BigInt& p);

// Nonempty face of cone{columns of V}. `generators` is sorted; `support` is
// an integral normal with support^T v = 0 on the face's generators and > 0 on
// the others. The full cone carries support 0.
struct ConeFace {
  std::vector<std::size_t> generators;
  IntVector support;
};

struct ConeOptions {
  std::size_t max_generators = 20;
  std::size_t max_dimension = 12;
};

// All nonempty faces sorted by generator set. Facets come from the extreme
// rays of the dual cone (double description); faces are intersections of
// facets together with the full cone.
std::vector<ConeFace> cone_faces(const IntMatrix& v, const ConeOptions& opts = {});

struct GscResult {
  bool holds = true;
  std::size_t faces_checked = 0;
  ConeFace face;     // failing face when !holds
  PgssResult pgss;   // test on the failing face's generators
};

GscResult is_pgsc(const IntMatrix& v, const BigInt& p, const ConeOptions& opts = {});

// Checks that `face` is a face of cone(V) with the stated support and that its
// generator set fails the p-GSS test with the recorded divisor.
bool verify_gsc_failure(const IntMatrix& v, const BigInt& p, const ConeFace& face,
                        const BigInt& divisor, const RatVector& y,
                        const RatVector& x);

// True iff every square subdeterminant is 0 or +-p^k. Size error when
// min(rows, cols) exceeds max_order.
bool subdet_class_check(const IntMatrix& a, const BigInt& p, std::size_t max_order = 6);

struct FamilyInstance {
  IntMatrix generators;  // n x (n + m), n = p^k + 1
  IntVector b;           // (1^m, 0^{n-m})
  BigRat coefficient;    // 1/(m-1) on each of the last m generators
};

// (E_n - I_n | (E_m - I_m over 0)): a p-GSS whose cone contains b without a
// p-adic conic representation. Requires k >= 3, 4 <= m <= p^k and m - 1 not a
// power of p.
FamilyInstance gss_not_gsc_family(const BigInt& p, unsigned k, std::size_t m);

}  // namespace padic
