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

// A U = (B | 0) with U unimodular and B lower triangular, positive diagonal,
// entries left of the diagonal reduced into [0, B(i,i)).
struct HermiteDecomposition {
  IntMatrix U;  // cols x cols
  IntMatrix B;  // rows x rows
  std::size_t colsplit = 0;
};

// U A W = S with U, W unimodular and S diagonal; divisors holds the nonzero
// diagonal d_1 | d_2 | ... | d_r, all positive.
struct SmithDecomposition {
  IntMatrix U;  // rows x rows
  IntMatrix W;  // cols x cols
  IntMatrix S;  // rows x cols
  std::vector<BigInt> divisors;

  std::size_t rank() const noexcept { return divisors.size(); }
};

// Throws RankError when A does not have full row rank.
HermiteDecomposition hnf(const IntMatrix& a);

SmithDecomposition snf(const IntMatrix& a);

// GCD of all k x k subdeterminants by exhaustive enumeration (0 if all vanish).
// Requires 1 <= k <= min(rows, cols).
BigInt gcd_minors(const IntMatrix& a, std::size_t k);

// Columns form a basis of the integer lattice ker(A) ∩ Z^n (hence also of the
// rational kernel).
IntMatrix integral_kernel_basis(const IntMatrix& a);

// Indices of a maximal linearly independent set of rows, chosen greedily in
// row order.
std::vector<std::size_t> independent_rows(const IntMatrix& a);

}  // namespace padic
