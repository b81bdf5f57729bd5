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

#include "padic/normal_form.hpp"

#include <numeric>
#include <string>

namespace padic {

namespace {

BigInt floor_div(const BigInt& a, const BigInt& b) {
  BigInt q;
  mpz_fdiv_q(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return q;
}

// col_dst -= q * col_src in both H and U.
void axpy_col(IntMatrix& h, IntMatrix& u, std::size_t dst, std::size_t src,
              const BigInt& q) {
  for (std::size_t i = 0; i < h.rows(); ++i) {
    if (h(i, src) != 0) h(i, dst) -= q * h(i, src);
  }
  for (std::size_t i = 0; i < u.rows(); ++i) {
    if (u(i, src) != 0) u(i, dst) -= q * u(i, src);
  }
}

void negate_col(IntMatrix& h, IntMatrix& u, std::size_t c) {
  for (std::size_t i = 0; i < h.rows(); ++i) h(i, c) = -h(i, c);
  for (std::size_t i = 0; i < u.rows(); ++i) u(i, c) = -u(i, c);
}

struct ColumnEchelon {
  IntMatrix h;  // A U, lower echelon
  IntMatrix u;
  std::vector<std::size_t> pivot_rows;
};

// Unimodular column operations bringing A to lower column-echelon form: for
// the k-th pivot row r_k, column k holds a positive entry at r_k and zeros
// above it, and columns >= rank are zero.
ColumnEchelon column_echelon(const IntMatrix& a) {
  ColumnEchelon ce{a, IntMatrix::identity(a.cols()), {}};
  IntMatrix& h = ce.h;
  std::size_t c = 0;
  for (std::size_t i = 0; i < h.rows() && c < h.cols(); ++i) {
    while (true) {
      // Smallest-magnitude nonzero entry of row i among columns c.. as pivot.
      std::size_t best = h.cols();
      for (std::size_t j = c; j < h.cols(); ++j) {
        if (h(i, j) == 0) continue;
        if (best == h.cols() || abs(h(i, j)) < abs(h(i, best))) best = j;
      }
      if (best == h.cols()) break;
      h.swap_cols(best, c);
      ce.u.swap_cols(best, c);
      bool clean = true;
      for (std::size_t j = c + 1; j < h.cols(); ++j) {
        if (h(i, j) == 0) continue;
        const BigInt q = floor_div(h(i, j), h(i, c));
        axpy_col(h, ce.u, j, c, q);
        if (h(i, j) != 0) clean = false;
      }
      if (clean) {
        if (h(i, c) < 0) negate_col(h, ce.u, c);
        ce.pivot_rows.push_back(i);
        ++c;
        break;
      }
    }
  }
  return ce;
}

void axpy_row(IntMatrix& s, IntMatrix& u, std::size_t dst, std::size_t src,
              const BigInt& q) {
  for (std::size_t j = 0; j < s.cols(); ++j) {
    if (s(src, j) != 0) s(dst, j) -= q * s(src, j);
  }
  for (std::size_t j = 0; j < u.cols(); ++j) {
    if (u(src, j) != 0) u(dst, j) -= q * u(src, j);
  }
}

}  // namespace

HermiteDecomposition hnf(const IntMatrix& a) {
  ColumnEchelon ce = column_echelon(a);
  const std::size_t m = a.rows();
  // Pivot rows are increasing, so m pivots means pivot_rows = 0..m-1.
  if (ce.pivot_rows.size() != m) throw RankError(ce.pivot_rows.size(), m);
  IntMatrix& h = ce.h;
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = 0; j < i; ++j) {
      const BigInt q = floor_div(h(i, j), h(i, i));
      if (q != 0) axpy_col(h, ce.u, j, i, q);
    }
  }
  HermiteDecomposition out;
  out.B = IntMatrix(m, m);
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = 0; j < m; ++j) out.B(i, j) = h(i, j);
  }
  out.U = std::move(ce.u);
  out.colsplit = m;
  return out;
}

SmithDecomposition snf(const IntMatrix& a) {
  const std::size_t m = a.rows();
  const std::size_t n = a.cols();
  SmithDecomposition d{IntMatrix::identity(m), IntMatrix::identity(n), a, {}};
  IntMatrix& s = d.S;
  // col dst -= q * col src, applied to S and W.
  auto col_op = [&](std::size_t dst, std::size_t src, const BigInt& q) {
    for (std::size_t i = 0; i < m; ++i) {
      if (s(i, src) != 0) s(i, dst) -= q * s(i, src);
    }
    for (std::size_t i = 0; i < n; ++i) {
      if (d.W(i, src) != 0) d.W(i, dst) -= q * d.W(i, src);
    }
  };

  for (std::size_t t = 0; t < std::min(m, n); ++t) {
    bool found = false;
    while (true) {
      std::size_t pi = m, pj = n;
      for (std::size_t i = t; i < m; ++i) {
        for (std::size_t j = t; j < n; ++j) {
          if (s(i, j) == 0) continue;
          if (pi == m || abs(s(i, j)) < abs(s(pi, pj))) {
            pi = i;
            pj = j;
          }
        }
      }
      if (pi == m) break;
      found = true;
      s.swap_rows(pi, t);
      d.U.swap_rows(pi, t);
      s.swap_cols(pj, t);
      d.W.swap_cols(pj, t);

      bool clean = true;
      for (std::size_t i = t + 1; i < m; ++i) {
        if (s(i, t) == 0) continue;
        axpy_row(s, d.U, i, t, floor_div(s(i, t), s(t, t)));
        if (s(i, t) != 0) clean = false;
      }
      for (std::size_t j = t + 1; j < n; ++j) {
        if (s(t, j) == 0) continue;
        col_op(j, t, floor_div(s(t, j), s(t, t)));
        if (s(t, j) != 0) clean = false;
      }
      if (!clean) continue;

      // Enforce d_t | every remaining entry by folding an offending row in.
      std::size_t bad = m;
      for (std::size_t i = t + 1; i < m && bad == m; ++i) {
        for (std::size_t j = t + 1; j < n; ++j) {
          if (mpz_divisible_p(s(i, j).get_mpz_t(), s(t, t).get_mpz_t()) == 0) {
            bad = i;
            break;
          }
        }
      }
      if (bad == m) break;
      axpy_row(s, d.U, t, bad, BigInt(-1));
    }
    if (!found) break;
    if (s(t, t) < 0) {
      for (std::size_t j = 0; j < n; ++j) s(t, j) = -s(t, j);
      for (std::size_t j = 0; j < m; ++j) d.U(t, j) = -d.U(t, j);
    }
    d.divisors.push_back(s(t, t));
  }
  return d;
}

namespace {

bool next_combination(std::vector<std::size_t>& c, std::size_t n) {
  const std::size_t k = c.size();
  for (std::size_t i = k; i-- > 0;) {
    if (c[i] < n - k + i) {
      ++c[i];
      for (std::size_t j = i + 1; j < k; ++j) c[j] = c[j - 1] + 1;
      return true;
    }
  }
  return false;
}

}  // namespace

BigInt gcd_minors(const IntMatrix& a, std::size_t k) {
  if (k < 1 || k > std::min(a.rows(), a.cols())) {
    throw Error(ErrorKind::kArgument,
                "minor order " + std::to_string(k) + " out of range");
  }
  BigInt g = 0;
  std::vector<std::size_t> rows(k);
  std::iota(rows.begin(), rows.end(), 0);
  do {
    const IntMatrix sub_rows = a.select_rows(rows);
    std::vector<std::size_t> cols(k);
    std::iota(cols.begin(), cols.end(), 0);
    do {
      const BigInt det = determinant(sub_rows.select_cols(cols));
      if (det != 0) {
        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), det.get_mpz_t());
        if (g == 1) return g;
      }
    } while (next_combination(cols, a.cols()));
  } while (next_combination(rows, a.rows()));
  return g;
}

IntMatrix integral_kernel_basis(const IntMatrix& a) {
  ColumnEchelon ce = column_echelon(a);
  const std::size_t r = ce.pivot_rows.size();
  const std::size_t n = a.cols();
  IntMatrix basis(n, n - r);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = r; j < n; ++j) basis(i, j - r) = ce.u(i, j);
  }
  return basis;
}

std::vector<std::size_t> independent_rows(const IntMatrix& a) {
  return column_echelon(a).pivot_rows;
}

}  // namespace padic
