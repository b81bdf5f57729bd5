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

#include "padic/padic_solve.hpp"

#include "padic/normal_form.hpp"
#include "padic/polyhedra.hpp"

namespace padic {

namespace {

void check_dims(const IntMatrix& a, std::size_t b_size) {
  if (a.rows() != b_size) {
    throw Error(ErrorKind::kDimension, "right-hand side has " +
                                           std::to_string(b_size) +
                                           " entries, matrix has " +
                                           std::to_string(a.rows()) + " rows");
  }
}

// y with y^T A = 0 and y^T b != 0, for a system known to be inconsistent.
RatVector left_kernel_witness(const IntMatrix& a, const IntVector& b) {
  const IntMatrix k = integral_kernel_basis(a.transpose());
  for (std::size_t j = 0; j < k.cols(); ++j) {
    const IntVector d = k.column(j);
    if (dot(d, b) != 0) return to_rational(d);
  }
  throw Error(ErrorKind::kArgument, "system is consistent");
}

// Small prime different from p.
BigInt other_prime(const BigInt& p) { return p == 3 ? BigInt(2) : BigInt(3); }

RatVector scale(const RatVector& v, const BigRat& f) {
  RatVector out(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) out[i] = v[i] * f;
  return out;
}

// Solves the lower-triangular system B z = r.
RatVector forward_substitute(const IntMatrix& b, const RatVector& r) {
  RatVector z(r.size());
  for (std::size_t i = 0; i < r.size(); ++i) {
    BigRat s = r[i];
    for (std::size_t j = 0; j < i; ++j) {
      if (b(i, j) != 0) s -= b(i, j) * z[j];
    }
    z[i] = s / b(i, i);
  }
  return z;
}

// Row i of B^{-1} for lower-triangular B: v with v^T B = e_i^T, so v_j = 0
// for j > i.
RatVector inverse_row(const IntMatrix& b, std::size_t i) {
  RatVector v(b.rows());
  v[i] = BigRat(1) / b(i, i);
  for (std::size_t j = i; j-- > 0;) {
    BigRat s = 0;
    for (std::size_t k = j + 1; k <= i; ++k) {
      if (b(k, j) != 0) s += v[k] * b(k, j);
    }
    v[j] = -s / b(j, j);
  }
  return v;
}

bool is_zero(const RatVector& v) {
  for (const BigRat& x : v) {
    if (x != 0) return false;
  }
  return true;
}

}  // namespace

AlternativeResult padic_solve(const IntMatrix& a, const IntVector& b,
                              const BigInt& p) {
  require_prime(p);
  check_dims(a, b.size());
  if (!solve_rational(to_rational(a), to_rational(b))) {
    const RatVector d = left_kernel_witness(a, b);
    const BigRat db = dot(b, d);
    return PadicObstruction{scale(d, BigRat(1) / (other_prime(p) * db))};
  }

  const std::vector<std::size_t> rows = independent_rows(a);
  const IntMatrix ar = a.select_rows(rows);
  RatVector br(rows.size());
  for (std::size_t k = 0; k < rows.size(); ++k) br[k] = b[rows[k]];

  const HermiteDecomposition h = hnf(ar);
  const RatVector z = forward_substitute(h.B, br);
  for (std::size_t i = 0; i < z.size(); ++i) {
    if (is_p_adic(z[i], p)) continue;
    const RatVector v = inverse_row(h.B, i);
    RatVector y(a.rows());
    for (std::size_t k = 0; k < rows.size(); ++k) y[rows[k]] = v[k];
    return PadicObstruction{std::move(y)};
  }
  RatVector full(a.cols());
  for (std::size_t i = 0; i < z.size(); ++i) full[i] = z[i];
  return PadicSolution{to_rational(h.U) * full};
}

bool verify_padic_solution(const IntMatrix& a, const IntVector& b,
                           const RatVector& x, const BigInt& p) {
  if (x.size() != a.cols() || b.size() != a.rows()) return false;
  return is_p_adic(x, p) && a * x == to_rational(b);
}

bool verify_padic_obstruction(const IntMatrix& a, const IntVector& b,
                              const RatVector& y, const BigInt& p) {
  if (y.size() != a.rows() || b.size() != a.rows()) return false;
  return is_integral(left_multiply(y, a)) && !is_p_adic(dot(b, y), p);
}

IntegralResult integral_solve(const IntMatrix& a, const IntVector& b) {
  check_dims(a, b.size());
  const SmithDecomposition s = snf(a);
  const IntVector c = s.U * b;
  const std::size_t r = s.rank();
  for (std::size_t i = r; i < c.size(); ++i) {
    if (c[i] != 0) return RationalInfeasible{to_rational(s.U.row_vector(i))};
  }
  IntVector z(a.cols());
  for (std::size_t i = 0; i < r; ++i) {
    const BigInt& d = s.divisors[i];
    if (mpz_divisible_p(c[i].get_mpz_t(), d.get_mpz_t()) == 0) {
      RatVector y = to_rational(s.U.row_vector(i));
      return IntegralObstruction{scale(y, BigRat(1) / d)};
    }
    z[i] = c[i] / d;
  }
  return IntegralSolution{s.W * z};
}

bool verify_integral_result(const IntMatrix& a, const IntVector& b,
                            const IntegralResult& r) {
  if (b.size() != a.rows()) return false;
  if (const auto* sol = std::get_if<IntegralSolution>(&r)) {
    return sol->x.size() == a.cols() && a * sol->x == b;
  }
  if (const auto* ob = std::get_if<IntegralObstruction>(&r)) {
    return ob->y.size() == a.rows() && is_integral(left_multiply(ob->y, a)) &&
           !is_integral(dot(b, ob->y));
  }
  const auto& inf = std::get<RationalInfeasible>(r);
  return inf.y.size() == a.rows() && is_zero(left_multiply(inf.y, a)) &&
         dot(b, inf.y) != 0;
}

RatVector density_round(const RatVector& x_hat, const RatVector& x_ring,
                        const IntMatrix& a_eq, const IntVector& b_eq,
                        const StrictSystem& strict, const BigInt& p,
                        const IntMatrix& kernel) {
  require_prime(p);
  const std::size_t n = a_eq.cols();
  if (x_hat.size() != n || x_ring.size() != n || b_eq.size() != a_eq.rows() ||
      strict.a.cols() != n || strict.rhs.size() != strict.a.rows() ||
      kernel.rows() != n) {
    throw Error(ErrorKind::kDimension, "density_round dimension mismatch");
  }
  const RatVector rb = to_rational(b_eq);
  if (!is_p_adic(x_hat, p) || a_eq * x_hat != rb) {
    throw Error(ErrorKind::kArgument, "x_hat is not a p-adic point of the affine space");
  }
  if (a_eq * x_ring != rb) {
    throw Error(ErrorKind::kArgument, "x_ring is not on the affine space");
  }
  const RatVector strict_rhs = to_rational(strict.rhs);
  const RatVector at_ring = strict.a * x_ring;
  for (std::size_t i = 0; i < at_ring.size(); ++i) {
    if (at_ring[i] <= strict_rhs[i]) {
      throw Error(ErrorKind::kArgument,
                  "x_ring violates strict condition " + std::to_string(i));
    }
  }
  const IntMatrix ak = a_eq * kernel;
  for (const BigInt& v : ak.data()) {
    if (v != 0) throw Error(ErrorKind::kArgument, "kernel basis is not in ker A_eq");
  }

  RatVector diff(n);
  for (std::size_t i = 0; i < n; ++i) diff[i] = x_ring[i] - x_hat[i];
  const auto mu = solve_rational(to_rational(kernel), diff);
  if (!mu) {
    throw Error(ErrorKind::kArgument, "x_ring - x_hat is outside the kernel span");
  }

  BigInt scale_k = 1;
  while (true) {
    RatVector mu_k(mu->size());
    for (std::size_t i = 0; i < mu->size(); ++i) {
      mu_k[i] = make_rational(floor((*mu)[i] * scale_k), scale_k);
    }
    RatVector x = x_hat;
    const RatVector step = to_rational(kernel) * mu_k;
    for (std::size_t i = 0; i < n; ++i) x[i] += step[i];
    const RatVector ax = strict.a * x;
    bool ok = true;
    for (std::size_t i = 0; i < ax.size() && ok; ++i) ok = ax[i] >= strict_rhs[i];
    if (ok) return x;
    scale_k *= p;
  }
}

RatVector density_round(const RatVector& x_hat, const RatVector& x_ring,
                        const IntMatrix& a_eq, const IntVector& b_eq,
                        const IntMatrix& a_strict, const BigInt& p,
                        const IntMatrix& kernel) {
  return density_round(x_hat, x_ring, a_eq, b_eq,
                       StrictSystem{a_strict, IntVector(a_strict.rows())}, p,
                       kernel);
}

PolyhedronPointResult padic_point_in_polyhedron(const IntMatrix& a,
                                                const IntVector& b,
                                                const BigInt& p) {
  require_prime(p);
  check_dims(a, b.size());
  RatVector farkas;
  const auto face = face_closure(a, to_rational(b), {}, &farkas);
  if (!face) throw EmptyPolyhedronError(farkas);

  const std::vector<std::size_t>& eq = face->implicit_eq;
  const IntMatrix a_eq = a.select_rows(eq);
  IntVector b_eq(eq.size());
  for (std::size_t k = 0; k < eq.size(); ++k) b_eq[k] = b[eq[k]];

  const AlternativeResult alt = padic_solve(a_eq, b_eq, p);
  if (const auto* ob = std::get_if<PadicObstruction>(&alt)) {
    return PolyhedronObstruction{eq, ob->y};
  }
  const RatVector& x_hat = std::get<PadicSolution>(alt).x;

  // Remaining rows hold strictly at the witness: b_i - A_i x > 0.
  std::vector<std::size_t> rest;
  for (std::size_t i = 0, k = 0; i < a.rows(); ++i) {
    if (k < eq.size() && eq[k] == i) {
      ++k;
    } else {
      rest.push_back(i);
    }
  }
  StrictSystem strict{negate(a.select_rows(rest)), IntVector(rest.size())};
  for (std::size_t k = 0; k < rest.size(); ++k) strict.rhs[k] = -b[rest[k]];
  return PolyhedronPoint{density_round(x_hat, face->witness, a_eq, b_eq, strict,
                                       p, integral_kernel_basis(a_eq))};
}

}  // namespace padic
