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
#include <vector>

#include "padic/matrix.hpp"

namespace padic {

enum class LpStatus { kOptimal, kInfeasible, kUnbounded };

const char* to_string(LpStatus s);

// Result for the primal/dual pair
//   (P) max { w^T x : A x <= b }      (D) min { b^T y : A^T y = w, y >= 0 }.
// optimal:    x, y optimal with w^T x = b^T y = value.
// infeasible: farkas >= 0 with A^T farkas = 0 and b^T farkas < 0.
// unbounded:  x feasible, ray with A ray <= 0 and w^T ray > 0.
struct LpResult {
  LpStatus status = LpStatus::kInfeasible;
  RatVector x;
  RatVector y;
  BigRat value;
  std::vector<std::size_t> basis;  // rows i with y_i basic
  RatVector farkas;
  RatVector ray;
};

// Exact two-phase simplex with Bland's rule on (D).
LpResult exact_lp(const IntMatrix& a, const IntVector& b, const IntVector& w);
LpResult exact_lp(const IntMatrix& a, const RatVector& b, const RatVector& w);

// Checks every certificate in `r` exactly against the data.
bool verify_lp(const IntMatrix& a, const RatVector& b, const RatVector& w,
               const LpResult& r);

namespace lp_detail {

enum class StdStatus { kOptimal, kInfeasible, kUnbounded };

// min c^T z  s.t.  M z = r, z >= 0.
// optimal:    z optimal, dual pi with M^T pi <= c and r^T pi = c^T z.
// infeasible: pi with M^T pi <= 0 and r^T pi > 0.
// unbounded:  z feasible, direction d >= 0 with M d = 0 and c^T d < 0.
struct StdResult {
  StdStatus status = StdStatus::kInfeasible;
  RatVector z;
  RatVector pi;
  RatVector direction;
  std::vector<std::size_t> basis;
};

StdResult solve_standard_form(const RatMatrix& m, const RatVector& r,
                              const RatVector& c);

}  // namespace lp_detail

}  // namespace padic
