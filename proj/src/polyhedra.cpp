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

#include "padic/polyhedra.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <string>

#include "padic/normal_form.hpp"
#include "padic/padic_solve.hpp"

namespace padic {

HPolyhedron dedup_rows(const HPolyhedron& p) {
  std::set<std::pair<IntVector, BigInt>> seen;
  std::vector<std::size_t> keep;
  for (std::size_t i = 0; i < p.a.rows(); ++i) {
    if (seen.insert({p.a.row_vector(i), p.b[i]}).second) keep.push_back(i);
  }
  HPolyhedron out{p.a.select_rows(keep), IntVector(keep.size())};
  for (std::size_t k = 0; k < keep.size(); ++k) out.b[k] = p.b[keep[k]];
  return out;
}

std::optional<FaceClosure> face_closure(const IntMatrix& a, const RatVector& b,
                                        const std::vector<std::size_t>& forced,
                                        RatVector* farkas) {
  const std::size_t m = a.rows();
  const std::size_t n = a.cols();
  if (b.size() != m) throw Error(ErrorKind::kDimension, "face_closure dimension mismatch");

  const IntMatrix sys = vstack(a, negate(a.select_rows(forced)));
  RatVector rhs = b;
  for (std::size_t i : forced) rhs.push_back(-b[i]);

  const LpResult feas = exact_lp(sys, rhs, RatVector(n));
  if (feas.status != LpStatus::kOptimal) {
    if (farkas != nullptr) *farkas = feas.farkas;
    return std::nullopt;
  }

  enum : char { kUnknown, kImplicit, kStrict };
  std::vector<char> state(m, kUnknown);
  for (std::size_t i : forced) state[i] = kImplicit;
  std::vector<RatVector> points;
  auto classify = [&](const RatVector& x) {
    const RatVector ax = a * x;
    for (std::size_t i = 0; i < m; ++i) {
      if (state[i] == kUnknown && ax[i] < b[i]) state[i] = kStrict;
    }
    points.push_back(x);
  };
  classify(feas.x);

  while (true) {
    std::vector<std::size_t> open;
    for (std::size_t i = 0; i < m; ++i) {
      if (state[i] == kUnknown) open.push_back(i);
    }
    if (open.empty()) break;
    // max sum s  s.t.  A x + s <= b on open rows, 0 <= s <= 1, forced rows tight.
    const std::size_t u = open.size();
    IntMatrix lp(sys.rows() + 2 * u, n + u);
    RatVector lp_rhs(sys.rows() + 2 * u);
    for (std::size_t i = 0; i < sys.rows(); ++i) {
      for (std::size_t j = 0; j < n; ++j) lp(i, j) = sys(i, j);
      lp_rhs[i] = rhs[i];
    }
    for (std::size_t k = 0; k < u; ++k) {
      lp(open[k], n + k) = 1;
      lp(sys.rows() + k, n + k) = 1;
      lp_rhs[sys.rows() + k] = 1;
      lp(sys.rows() + u + k, n + k) = -1;
    }
    RatVector w(n + u);
    for (std::size_t k = 0; k < u; ++k) w[n + k] = 1;
    const LpResult r = exact_lp(lp, lp_rhs, w);
    if (r.status != LpStatus::kOptimal || r.value == 0) break;
    classify(RatVector(r.x.begin(), r.x.begin() + static_cast<std::ptrdiff_t>(n)));
  }

  FaceClosure out;
  for (std::size_t i = 0; i < m; ++i) {
    if (state[i] != kStrict) out.implicit_eq.push_back(i);
  }
  out.witness.assign(n, BigRat(0));
  for (const RatVector& x : points) {
    for (std::size_t j = 0; j < n; ++j) out.witness[j] += x[j];
  }
  const BigRat count(static_cast<unsigned long>(points.size()));
  for (BigRat& v : out.witness) v /= count;
  return out;
}

std::vector<PolyFace> enumerate_faces(const HPolyhedron& p, const FaceOptions& opts) {
  const RatVector b = to_rational(p.b);
  RatVector farkas;
  auto root = face_closure(p.a, b, {}, &farkas);
  if (!root) throw EmptyPolyhedronError(farkas);

  std::map<std::vector<std::size_t>, RatVector> faces;
  std::vector<std::vector<std::size_t>> queue;
  std::set<std::vector<std::size_t>> tried;
  faces.emplace(root->implicit_eq, root->witness);
  queue.push_back(root->implicit_eq);
  for (std::size_t k = 0; k < queue.size(); ++k) {
    const std::vector<std::size_t> eq = queue[k];
    for (std::size_t i = 0; i < p.a.rows(); ++i) {
      if (std::binary_search(eq.begin(), eq.end(), i)) continue;
      std::vector<std::size_t> key = eq;
      key.insert(std::upper_bound(key.begin(), key.end(), i), i);
      if (!tried.insert(key).second) continue;
      auto c = face_closure(p.a, b, key);
      if (!c || faces.count(c->implicit_eq) != 0) continue;
      if (faces.size() >= opts.max_faces) {
        throw Error(ErrorKind::kSize, "more than " + std::to_string(opts.max_faces) +
                                          " faces");
      }
      faces.emplace(c->implicit_eq, c->witness);
      queue.push_back(c->implicit_eq);
    }
  }

  const std::size_t full_rank = rank(p.a);
  std::vector<PolyFace> out;
  out.reserve(faces.size());
  for (auto& [eq, witness] : faces) {
    PolyFace f{eq, std::move(witness), false};
    f.minimal = rank(p.a.select_rows(eq)) == full_rank;
    out.push_back(std::move(f));
  }
  return out;
}

namespace {

IntVector select(const IntVector& v, const std::vector<std::size_t>& idx) {
  IntVector out(idx.size());
  for (std::size_t k = 0; k < idx.size(); ++k) out[k] = v[idx[k]];
  return out;
}

}  // namespace

PolyhedronVerdict is_padic_polyhedron(const HPolyhedron& p, const BigInt& prime,
                                      const FaceOptions& opts) {
  require_prime(prime);
  PolyhedronVerdict out;
  for (const PolyFace& f : enumerate_faces(p, opts)) {
    if (!f.minimal) continue;
    const AlternativeResult r =
        padic_solve(p.a.select_rows(f.implicit_eq), select(p.b, f.implicit_eq), prime);
    if (const auto* ob = std::get_if<PadicObstruction>(&r)) {
      out.holds = false;
      out.face = f;
      out.y = ob->y;
      return out;
    }
  }
  return out;
}

PolyhedronVerdict is_integral_polyhedron(const HPolyhedron& p, const FaceOptions& opts) {
  PolyhedronVerdict out;
  for (const PolyFace& f : enumerate_faces(p, opts)) {
    if (!f.minimal) continue;
    const IntegralResult r =
        integral_solve(p.a.select_rows(f.implicit_eq), select(p.b, f.implicit_eq));
    if (std::holds_alternative<IntegralSolution>(r)) continue;
    out.holds = false;
    out.face = f;
    if (const auto* ob = std::get_if<IntegralObstruction>(&r)) {
      out.y = ob->y;
    } else {
      out.y = std::get<RationalInfeasible>(r).y;
    }
    return out;
  }
  return out;
}

TdpVerdict is_tdp(const HPolyhedron& p, const BigInt& prime, TdpMethod method,
                  const FaceOptions& opts) {
  require_prime(prime);
  TdpVerdict out;
  std::vector<PolyFace> faces;
  try {
    faces = enumerate_faces(p, opts);
  } catch (const EmptyPolyhedronError& e) {
    out.vacuous = true;
    out.farkas = e.farkas();
    return out;
  }
  for (const PolyFace& f : faces) {
    const IntMatrix af = p.a.select_rows(f.implicit_eq);
    if (method == TdpMethod::kMinimalFaceCones) {
      if (!f.minimal) continue;
      GscResult g = is_pgsc(af.transpose(), prime);
      if (g.holds) continue;
      out.holds = false;
      out.face = f;
      out.pgss = g.pgss;
      out.gsc = std::move(g);
    } else {
      PgssResult r = is_pgss(af, prime);
      if (r.holds) continue;
      out.holds = false;
      out.face = f;
      out.pgss = std::move(r);
    }
    out.support.assign(p.a.cols(), BigInt(0));
    out.support_value = 0;
    for (std::size_t i : f.implicit_eq) {
      for (std::size_t j = 0; j < p.a.cols(); ++j) out.support[j] += p.a(i, j);
      out.support_value += p.b[i];
    }
    return out;
  }
  return out;
}

namespace {

BigInt binomial(std::size_t n, std::size_t k) {
  BigInt r;
  mpz_bin_uiui(r.get_mpz_t(), n, k);
  return r;
}

}  // namespace

TdAllPrimesVerdict is_td_all_primes(const HPolyhedron& p, const FaceOptions& opts) {
  TdAllPrimesVerdict out;
  std::vector<PolyFace> faces;
  try {
    faces = enumerate_faces(p, opts);
  } catch (const EmptyPolyhedronError&) {
    out.vacuous = true;
    return out;
  }
  for (const PolyFace& f : faces) {
    const IntMatrix af = p.a.select_rows(f.implicit_eq);
    const std::size_t r = rank(af);
    if (r == 0) continue;
    BigInt g;
    if (binomial(af.rows(), r) * binomial(af.cols(), r) <= 200000) {
      g = gcd_minors(af, r);
    } else {
      // Product of the elementary divisors equals the same gcd.
      g = 1;
      for (const BigInt& d : snf(af).divisors) g *= d;
    }
    if (g == 1) continue;
    out.holds = false;
    out.face = f;
    out.gcd = g;
    return out;
  }
  return out;
}

DualOptimumResult dual_padic_optimum(const HPolyhedron& p, const IntVector& w,
                                     const BigInt& prime) {
  require_prime(prime);
  const std::size_t m = p.a.rows();
  const std::size_t n = p.a.cols();
  if (w.size() != n || p.b.size() != m) {
    throw Error(ErrorKind::kDimension, "dual_padic_optimum dimension mismatch");
  }
  const LpResult lp = exact_lp(p.a, p.b, w);
  if (lp.status != LpStatus::kOptimal) return NoOptimum{lp.status};

  // Optimal face: P intersected with w^T x >= value.
  IntMatrix a_opt(m + 1, n);
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = 0; j < n; ++j) a_opt(i, j) = p.a(i, j);
  }
  for (std::size_t j = 0; j < n; ++j) a_opt(m, j) = -w[j];
  RatVector b_opt = to_rational(p.b);
  b_opt.push_back(-lp.value);
  const auto opt_face = face_closure(a_opt, b_opt, {m});
  if (!opt_face) throw Error(ErrorKind::kArgument, "optimal face is empty");
  std::vector<std::size_t> face;
  for (std::size_t i : opt_face->implicit_eq) {
    if (i < m) face.push_back(i);
  }

  if (face.empty()) {
    // Only w = 0 has an optimum without tight rows; y = 0.
    return DualOptimum{RatVector(m), lp.value, face};
  }

  const IntMatrix aft = p.a.select_rows(face).transpose();  // n x |F|
  const AlternativeResult alt = padic_solve(aft, w, prime);
  if (const auto* ob = std::get_if<PadicObstruction>(&alt)) {
    return NonePAdic{face, ob->y, opt_face->witness, lp.y, lp.value};
  }
  const RatVector& y_hat = std::get<PadicSolution>(alt).x;

  // Relative interior of Q = {y_F >= 0 : A_F^T y_F = w}.
  const std::size_t k = face.size();
  const IntMatrix q_sys = vstack(vstack(aft, negate(aft)), negate(IntMatrix::identity(k)));
  RatVector q_rhs = to_rational(w);
  for (std::size_t j = 0; j < n; ++j) q_rhs.push_back(-BigRat(w[j]));
  q_rhs.resize(2 * n + k);
  std::vector<std::size_t> eq_rows(2 * n);
  for (std::size_t j = 0; j < 2 * n; ++j) eq_rows[j] = j;
  const auto q_face = face_closure(q_sys, q_rhs, eq_rows);
  if (!q_face) throw Error(ErrorKind::kArgument, "optimal dual set is empty");
  for (std::size_t i : q_face->implicit_eq) {
    if (i >= 2 * n) {
      throw Error(ErrorKind::kArgument, "no strictly complementary dual point");
    }
  }

  const RatVector y_face =
      density_round(y_hat, q_face->witness, aft, w, IntMatrix::identity(k), prime,
                    integral_kernel_basis(aft));
  DualOptimum out;
  out.y.assign(m, BigRat(0));
  for (std::size_t t = 0; t < k; ++t) out.y[face[t]] = y_face[t];
  out.value = dot(p.b, out.y);
  out.optimal_face = std::move(face);
  return out;
}

}  // namespace padic
