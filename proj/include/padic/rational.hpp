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

#include <string>
#include <string_view>
#include <vector>

#include <gmpxx.h>

namespace padic {

using BigInt = mpz_class;
// mpq_class canonicalizes on every arithmetic operation; values built from a
// numerator/denominator pair must go through make_rational().
using BigRat = mpq_class;

using IntVector = std::vector<BigInt>;
using RatVector = std::vector<BigRat>;

BigRat make_rational(const BigInt& num, const BigInt& den);

// Throws Error(kInvalidPrime) unless p >= 2 and p passes trial division
// (trial division is only attempted for p < 2^32; larger p is trusted).
void require_prime(const BigInt& p);

// True iff n >= 1 and n = p^k for some k >= 0.
bool is_power_of(const BigInt& n, const BigInt& p);

// True iff the denominator of q is a power of p.
bool is_p_adic(const BigRat& q, const BigInt& p);
bool is_p_adic(const RatVector& v, const BigInt& p);

bool is_integral(const BigRat& q);
bool is_integral(const RatVector& v);

BigInt floor(const BigRat& q);

RatVector to_rational(const IntVector& v);

// "a" for integers, "a/b" otherwise.
std::string to_string(const BigRat& q);
std::string to_string(const BigInt& z);

// Accepts "a", "-a", "a/b"; throws Error(kParse) on malformed text or zero
// denominator.
BigRat parse_rational(std::string_view text);
BigInt parse_integer(std::string_view text);

}  // namespace padic
