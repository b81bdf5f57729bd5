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

#include "padic/rational.hpp"

#include <cctype>

#include "padic/error.hpp"

namespace padic {

BigRat make_rational(const BigInt& num, const BigInt& den) {
  if (den == 0) throw Error(ErrorKind::kArgument, "zero denominator");
  BigRat q(num, den);
  q.canonicalize();
  return q;
}

void require_prime(const BigInt& p) {
  if (p < 2) {
    throw Error(ErrorKind::kInvalidPrime,
                "p = " + p.get_str() + " is not a prime (p < 2)");
  }
  if (!p.fits_ulong_p() || p.get_ui() > 0xffffffffUL) return;
  const unsigned long n = p.get_ui();
  for (unsigned long d = 2; d * d <= n; ++d) {
    if (n % d == 0) {
      throw Error(ErrorKind::kInvalidPrime,
                  "p = " + p.get_str() + " is not a prime");
    }
  }
}

bool is_power_of(const BigInt& n, const BigInt& p) {
  if (n < 1) return false;
  BigInt r = n;
  while (r != 1) {
    if (mpz_divisible_p(r.get_mpz_t(), p.get_mpz_t()) == 0) return false;
    mpz_divexact(r.get_mpz_t(), r.get_mpz_t(), p.get_mpz_t());
  }
  return true;
}

bool is_p_adic(const BigRat& q, const BigInt& p) {
  require_prime(p);
  return is_power_of(q.get_den(), p);
}

bool is_p_adic(const RatVector& v, const BigInt& p) {
  require_prime(p);
  for (const BigRat& q : v) {
    if (!is_power_of(q.get_den(), p)) return false;
  }
  return true;
}

bool is_integral(const BigRat& q) { return q.get_den() == 1; }

bool is_integral(const RatVector& v) {
  for (const BigRat& q : v) {
    if (q.get_den() != 1) return false;
  }
  return true;
}

BigInt floor(const BigRat& q) {
  BigInt r;
  mpz_fdiv_q(r.get_mpz_t(), q.get_num_mpz_t(), q.get_den_mpz_t());
  return r;
}

RatVector to_rational(const IntVector& v) {
  RatVector out;
  out.reserve(v.size());
  for (const BigInt& z : v) out.emplace_back(z);
  return out;
}

std::string to_string(const BigRat& q) {
  if (q.get_den() == 1) return q.get_num().get_str();
  return q.get_num().get_str() + "/" + q.get_den().get_str();
}

std::string to_string(const BigInt& z) { return z.get_str(); }

namespace {

bool valid_integer_text(std::string_view s) {
  std::size_t i = 0;
  if (!s.empty() && (s[0] == '-' || s[0] == '+')) i = 1;
  if (i == s.size()) return false;
  for (; i < s.size(); ++i) {
    if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
  }
  return true;
}

BigInt integer_from(std::string_view s) {
  if (!s.empty() && s[0] == '+') s.remove_prefix(1);
  return BigInt(std::string(s), 10);
}

}  // namespace

BigInt parse_integer(std::string_view text) {
  if (!valid_integer_text(text)) {
    throw ParseError(1, 1, "malformed integer '" + std::string(text) + "'");
  }
  return integer_from(text);
}

BigRat parse_rational(std::string_view text) {
  const std::size_t slash = text.find('/');
  if (slash == std::string_view::npos) return BigRat(parse_integer(text));
  std::string_view num = text.substr(0, slash);
  std::string_view den = text.substr(slash + 1);
  if (!valid_integer_text(num) || !valid_integer_text(den) ||
      den[0] == '-' || den[0] == '+') {
    throw ParseError(1, 1, "malformed rational '" + std::string(text) + "'");
  }
  BigInt d = integer_from(den);
  if (d == 0) throw ParseError(1, slash + 2, "zero denominator");
  return make_rational(integer_from(num), d);
}

}  // namespace padic
