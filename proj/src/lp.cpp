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

#include "padic/lp.hpp"

#include <algorithm>

namespace padic {

const char* to_string(LpStatus s) {
  switch (s) {
    case LpStatus::kOptimal:
      return "optimal";
    case LpStatus::kInfeasible:
      return "infeasible";
    case LpStatus::kUnbounded:
      return "unbounded";
  }
  return "?";
}

namespace lp_detail {

namespace {

// Dense tableau over the equality system with one artificial column per row.
// The artificial block starts as the identity, so after any sequence of pivots
// it holds B^{-1} for the current basis.
class Tableau {
 public:
  Tableau(const RatMatrix& m, const RatVector& r)
      : k_(m.rows()), n_(m.cols()), t_(k_, n_ + k_), rhs_(k_), sign_(k_, 1),
        basis_(k_), reduced_(n_ + k_) {
    for (std::size_t i = 0; i < k_; ++i) {
      if (r[i] < 0) sign_[i] = -1;
      for (std::size_t j = 0; j < n_; ++j) {
        t_(i, j) = sign_[i] < 0 ? BigRat(-m(i, j)) : m(i, j);
      }
      t_(i, n_ + i) = 1;
      rhs_[i] = sign_[i] < 0 ? BigRat(-r[i]) : r[i];
      basis_[i] = n_ + i;
    }
  }

  // Installs the objective `cost` (length n + k) and prices out the basis.
  void set_objective(const RatVector& cost) {
    cost_ = cost;
    for (std::size_t j = 0; j < n_ + k_; ++j) {
      BigRat d = cost_[j];
      for (std::size_t i = 0; i < k_; ++i) {
        const BigRat& cb = cost_[basis_[i]];
        if (cb != 0 && t_(i, j) != 0) d -= cb * t_(i, j);
      }
      reduced_[j] = d;
    }
  }

  BigRat objective_value() const {
    BigRat v = 0;
    for (std::size_t i = 0; i < k_; ++i) v += cost_[basis_[i]] * rhs_[i];
    return v;
  }

  // Bland's rule over the original columns. Returns the entering column that
  // proved unboundedness, or n_ at optimality.
  std::size_t run() {
    while (true) {
      std::size_t q = n_;
      for (std::size_t j = 0; j < n_; ++j) {
        if (reduced_[j] < 0) {
          q = j;
          break;
        }
      }
      if (q == n_) return n_;
      std::size_t p = k_;
      BigRat best;
      for (std::size_t i = 0; i < k_; ++i) {
        if (t_(i, q) <= 0) continue;
        BigRat ratio = rhs_[i] / t_(i, q);
        if (p == k_ || ratio < best || (ratio == best && basis_[i] < basis_[p])) {
          p = i;
          best = ratio;
        }
      }
      if (p == k_) return q;
      pivot(p, q);
    }
  }

  void pivot(std::size_t p, std::size_t q) {
    const std::size_t width = n_ + k_;
    const BigRat inv = 1 / t_(p, q);
    for (std::size_t j = 0; j < width; ++j) {
      if (t_(p, j) != 0) t_(p, j) *= inv;
    }
    rhs_[p] *= inv;
    for (std::size_t i = 0; i < k_; ++i) {
      if (i == p || t_(i, q) == 0) continue;
      const BigRat f = t_(i, q);
      for (std::size_t j = 0; j < width; ++j) {
        if (t_(p, j) != 0) t_(i, j) -= f * t_(p, j);
      }
      rhs_[i] -= f * rhs_[p];
    }
    if (reduced_[q] != 0) {
      const BigRat f = reduced_[q];
      for (std::size_t j = 0; j < width; ++j) {
        if (t_(p, j) != 0) reduced_[j] -= f * t_(p, j);
      }
    }
    basis_[p] = q;
  }

  // Pivots basic artificials (necessarily at level zero) out where the row
  // still has a nonzero original entry; rows without one are redundant.
  void drive_out_artificials() {
    for (std::size_t i = 0; i < k_; ++i) {
      if (basis_[i] < n_) continue;
      for (std::size_t j = 0; j < n_; ++j) {
        if (t_(i, j) != 0) {
          pivot(i, j);
          break;
        }
      }
    }
  }

  // cost_B^T B^{-1}, mapped back through the row sign flips.
  RatVector duals() const {
    RatVector pi(k_);
    for (std::size_t c = 0; c < k_; ++c) {
      BigRat s = 0;
      for (std::size_t i = 0; i < k_; ++i) {
        const BigRat& cb = cost_[basis_[i]];
        if (cb != 0 && t_(i, n_ + c) != 0) s += cb * t_(i, n_ + c);
      }
      pi[c] = sign_[c] < 0 ? BigRat(-s) : s;
    }
    return pi;
  }

  RatVector primal() const {
    RatVector z(n_);
    for (std::size_t i = 0; i < k_; ++i) {
      if (basis_[i] < n_) z[basis_[i]] = rhs_[i];
    }
    return z;
  }

  RatVector direction(std::size_t q) const {
    RatVector d(n_);
    d[q] = 1;
    for (std::size_t i = 0; i < k_; ++i) {
      if (basis_[i] < n_) d[basis_[i]] = -t_(i, q);
    }
    return d;
  }

  std::vector<std::size_t> basic_columns() const {
    std::vector<std::size_t> out;
    for (std::size_t b : basis_) {
      if (b < n_) out.push_back(b);
    }
    std::sort(out.begin(), out.end());
    return out;
  }

  std::size_t width() const { return n_ + k_; }
  std::size_t n() const { return n_; }

 private:
  std::size_t k_;
  std::size_t n_;
  RatMatrix t_;
  RatVector rhs_;
  std::vector<int> sign_;
  std::vector<std::size_t> basis_;
  RatVector cost_;
  RatVector reduced_;
};

}  // namespace

StdResult solve_standard_form(const RatMatrix& m, const RatVector& r,
                              const RatVector& c) {
  if (m.rows() != r.size() || m.cols() != c.size()) {
    throw Error(ErrorKind::kDimension, "standard form dimension mismatch");
  }
  Tableau tab(m, r);
  const std::size_t n = m.cols();

  RatVector phase1(tab.width());
  for (std::size_t j = n; j < tab.width(); ++j) phase1[j] = 1;
  tab.set_objective(phase1);
  tab.run();  // bounded below by zero, never unbounded

  StdResult out;
  if (tab.objective_value() > 0) {
    out.status = StdStatus::kInfeasible;
    out.pi = tab.duals();
    return out;
  }
  tab.drive_out_artificials();

  RatVector phase2(tab.width());
  for (std::size_t j = 0; j < n; ++j) phase2[j] = c[j];
  tab.set_objective(phase2);
  const std::size_t q = tab.run();
  out.z = tab.primal();
  out.basis = tab.basic_columns();
  if (q < n) {
    out.status = StdStatus::kUnbounded;
    out.direction = tab.direction(q);
    return out;
  }
  out.status = StdStatus::kOptimal;
  out.pi = tab.duals();
  return out;
}

}  // namespace lp_detail

LpResult exact_lp(const IntMatrix& a, const IntVector& b, const IntVector& w) {
  return exact_lp(a, to_rational(b), to_rational(w));
}

LpResult exact_lp(const IntMatrix& a, const RatVector& b, const RatVector& w) {
  using lp_detail::StdStatus;
  if (a.rows() != b.size() || a.cols() != w.size()) {
    throw Error(ErrorKind::kDimension, "exact_lp dimension mismatch");
  }
  const RatMatrix at = to_rational(a.transpose());
  LpResult out;
  const lp_detail::StdResult dual = lp_detail::solve_standard_form(at, w, b);
  switch (dual.status) {
    case StdStatus::kOptimal:
      out.status = LpStatus::kOptimal;
      out.y = dual.z;
      out.x = dual.pi;
      out.basis = dual.basis;
      out.value = dot(b, out.y);
      return out;
    case StdStatus::kUnbounded:
      out.status = LpStatus::kInfeasible;
      out.farkas = dual.direction;
      return out;
    case StdStatus::kInfeasible:
      break;
  }
  // (D) infeasible: (P) is unbounded or infeasible. The zero-objective dual
  // is always feasible and decides which.
  const lp_detail::StdResult zero =
      lp_detail::solve_standard_form(at, RatVector(a.cols()), b);
  if (zero.status == StdStatus::kOptimal) {
    out.status = LpStatus::kUnbounded;
    out.x = zero.pi;
    out.ray = dual.pi;
  } else {
    out.status = LpStatus::kInfeasible;
    out.farkas = zero.direction;
  }
  return out;
}

bool verify_lp(const IntMatrix& a, const RatVector& b, const RatVector& w,
               const LpResult& r) {
  const std::size_t m = a.rows();
  const std::size_t n = a.cols();
  auto primal_feasible = [&](const RatVector& x) {
    if (x.size() != n) return false;
    const RatVector ax = a * x;
    for (std::size_t i = 0; i < m; ++i) {
      if (ax[i] > b[i]) return false;
    }
    return true;
  };
  switch (r.status) {
    case LpStatus::kOptimal: {
      if (!primal_feasible(r.x) || r.y.size() != m) return false;
      for (const BigRat& v : r.y) {
        if (v < 0) return false;
      }
      if (left_multiply(r.y, a) != w) return false;
      return dot(w, r.x) == r.value && dot(b, r.y) == r.value;
    }
    case LpStatus::kInfeasible: {
      if (r.farkas.size() != m) return false;
      for (const BigRat& v : r.farkas) {
        if (v < 0) return false;
      }
      for (const BigRat& v : left_multiply(r.farkas, a)) {
        if (v != 0) return false;
      }
      return dot(b, r.farkas) < 0;
    }
    case LpStatus::kUnbounded: {
      if (!primal_feasible(r.x) || r.ray.size() != n) return false;
      for (const BigRat& v : a * r.ray) {
        if (v > 0) return false;
      }
      return dot(w, r.ray) > 0;
    }
  }
  return false;
}

}  // namespace padic
