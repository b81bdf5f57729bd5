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

// p-adic solution of A x = b.
struct PadicSolution {
  RatVector x;
};

// y with y^T A integral and y^T b not p-adic (or not integral, for the
// integral variant); proves A x = b has no such solution.
struct PadicObstruction {
  RatVector y;
};

using AlternativeResult = std::variant<PadicSolution, PadicObstruction>;

// Either a p-adic solution of A x = b or an obstruction, never both.
AlternativeResult padic_solve(const IntMatrix& a, const IntVector& b,
                              const BigInt& p);

bool verify_padic_solution(const IntMatrix& a, const IntVector& b,
                           const RatVector& x, const BigInt& p);
bool verify_padic_obstruction(const IntMatrix& a, const IntVector& b,
                              const RatVector& y, const BigInt& p);

struct IntegralSolution {
  IntVector x;
};
struct IntegralObstruction {
  RatVector y;  // y^T A integral, y^T b not integral
};
struct RationalInfeasible {
  RatVector y;  // y^T A = 0, y^T b != 0
};

using IntegralResult =
    std::variant<IntegralSolution, IntegralObstruction, RationalInfeasible>;

IntegralResult integral_solve(const IntMatrix& a, const IntVector& b);

bool verify_integral_result(const IntMatrix& a, const IntVector& b,
                            const IntegralResult& r);

// Strict side conditions A_strict x > rhs (rhs defaults to zero).
struct StrictSystem {
  IntMatrix a;
  IntVector rhs;
};

// Moves a p-adic point x_hat of {A_eq x = b_eq} towards x_ring, which also
// lies on the affine space and satisfies the strict conditions. Writes
// x_ring - x_hat in the kernel basis, rounds the coefficients down to
// multiples of p^-k for k = 0, 1, 2, ... and returns the first rounded point
// satisfying the side conditions weakly. The result is p-adic and exact.
RatVector density_round(const RatVector& x_hat, const RatVector& x_ring,
                        const IntMatrix& a_eq, const IntVector& b_eq,
                        const StrictSystem& strict, const BigInt& p,
                        const IntMatrix& kernel);

// Same with A_strict x > 0.
RatVector density_round(const RatVector& x_hat, const RatVector& x_ring,
                        const IntMatrix& a_eq, const IntVector& b_eq,
                        const IntMatrix& a_strict, const BigInt& p,
                        const IntMatrix& kernel);

struct PolyhedronPoint {
  RatVector x;
};

// Obstruction over the implicit-equality subsystem A_E x = b_E of the affine
// hull: y is indexed like `rows`, y^T A_E integral and y^T b_E not p-adic.
struct PolyhedronObstruction {
  std::vector<std::size_t> rows;
  RatVector y;
};

using PolyhedronPointResult = std::variant<PolyhedronPoint, PolyhedronObstruction>;

// p-adic point of {x : A x <= b}. Throws EmptyPolyhedronError when empty.
PolyhedronPointResult padic_point_in_polyhedron(const IntMatrix& a,
                                                const IntVector& b,
                                                const BigInt& p);

}  // namespace padic
