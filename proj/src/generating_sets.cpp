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

#include "padic/generating_sets.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>
#include <map>
#include <numeric>
#include <set>
#include <string>

#include "padic/normal_form.hpp"

namespace padic {

PgssResult is_pgss(const IntMatrix& a, const BigInt& p) {
  require_prime(p);
  const SmithDecomposition s = snf(a);
  PgssResult out;
  out.divisors = s.divisors;
  for (std::size_t i = 0; i < s.divisors.size(); ++i) {
    const BigInt& d = s.divisors[i];
    if (is_power_of(d, p)) continue;
    out.holds = false;
    out.divisor = d;
    out.index = i;
    out.y = to_rational(s.U.row_vector(i));
    for (BigRat& v : out.y) v /= d;
    out.x = to_rational(s.W.column(i));
    for (BigRat& v : out.x) v /= d;
    return out;
  }
  return out;
}

bool verify_pgss_witness(const IntMatrix& a, const BigInt& p,
                         const BigInt& divisor, const RatVector& y,
                         const RatVector& x) {
  if (y.size() != a.rows() || x.size() != a.cols() || divisor < 1) return false;
  if (is_power_of(divisor, p)) return false;
  const RatVector ya = left_multiply(y, a);
  if (!is_integral(ya) || !is_integral(a * x)) return false;
  return dot(ya, x) == make_rational(1, divisor);
}

std::variant<RatMatrix, ReflexiveInverseFailure> padic_reflexive_inverse(
    const IntMatrix& a, const BigInt& p) {
  require_prime(p);
  const SmithDecomposition s = snf(a);
  RatMatrix inner(a.cols(), a.rows());
  for (std::size_t i = 0; i < s.divisors.size(); ++i) {
    if (!is_power_of(s.divisors[i], p)) {
      return ReflexiveInverseFailure{s.divisors[i]};
    }
    inner(i, i) = make_rational(1, s.divisors[i]);
  }
  return to_rational(s.W) * inner * to_rational(s.U);
}

namespace {

using Mask = std::uint64_t;

void make_primitive(IntVector& v) {
  BigInt g = 0;
  for (const BigInt& x : v) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), x.get_mpz_t());
  if (g > 1) {
    for (BigInt& x : v) mpz_divexact(x.get_mpz_t(), x.get_mpz_t(), g.get_mpz_t());
  }
}

struct Ray {
  IntVector t;
  Mask zero = 0;  // processed constraints tight at t
};

Mask zero_mask(const IntMatrix& g, const IntVector& t, Mask processed) {
  Mask z = 0;
  for (std::size_t i = 0; i < g.rows(); ++i) {
    if (!(processed >> i & 1)) continue;
    BigInt s = 0;
    for (std::size_t j = 0; j < g.cols(); ++j) s += g(i, j) * t[j];
    if (s == 0) z |= Mask{1} << i;
  }
  return z;
}

// Extreme rays of the pointed cone {t : G t >= 0}, where G has full column
// rank, by the double description method.
std::vector<Ray> extreme_rays(const IntMatrix& g) {
  const std::size_t d = g.cols();
  const std::vector<std::size_t> basis = independent_rows(g);
  Mask processed = 0;
  for (std::size_t i : basis) processed |= Mask{1} << i;

  // Initial simplicial cone: rays are the columns of G_B^{-1}.
  const RatMatrix gb = to_rational(g.select_rows(basis));
  std::vector<Ray> rays;
  for (std::size_t k = 0; k < d; ++k) {
    RatVector e(d);
    e[k] = 1;
    const RatVector r = *solve_rational(gb, e);
    BigInt den = 1;
    for (const BigRat& q : r) mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), q.get_den_mpz_t());
    Ray ray;
    ray.t.resize(d);
    for (std::size_t j = 0; j < d; ++j) {
      ray.t[j] = r[j].get_num() * (den / r[j].get_den());
    }
    make_primitive(ray.t);
    ray.zero = zero_mask(g, ray.t, processed);
    rays.push_back(std::move(ray));
  }

  for (std::size_t i = 0; i < g.rows(); ++i) {
    if (processed >> i & 1) continue;
    std::vector<BigInt> val(rays.size());
    std::vector<std::size_t> pos, neg;
    std::vector<Ray> next;
    for (std::size_t r = 0; r < rays.size(); ++r) {
      for (std::size_t j = 0; j < d; ++j) val[r] += g(i, j) * rays[r].t[j];
      if (val[r] > 0) {
        pos.push_back(r);
      } else if (val[r] < 0) {
        neg.push_back(r);
      }
    }
    for (const std::size_t pi : pos) {
      for (const std::size_t ni : neg) {
        const Mask common = rays[pi].zero & rays[ni].zero;
        if (d >= 2 && static_cast<std::size_t>(std::popcount(common)) + 2 < d) continue;
        bool adjacent = true;
        for (std::size_t r = 0; r < rays.size() && adjacent; ++r) {
          if (r == pi || r == ni) continue;
          if ((rays[r].zero & common) == common) adjacent = false;
        }
        if (!adjacent) continue;
        Ray nr;
        nr.t.resize(d);
        for (std::size_t j = 0; j < d; ++j) {
          nr.t[j] = val[pi] * rays[ni].t[j] - val[ni] * rays[pi].t[j];
        }
        make_primitive(nr.t);
        nr.zero = common | (Mask{1} << i);
        next.push_back(std::move(nr));
      }
    }
    for (std::size_t r = 0; r < rays.size(); ++r) {
      if (val[r] < 0) continue;
      Ray kept = rays[r];
      if (val[r] == 0) kept.zero |= Mask{1} << i;
      next.push_back(std::move(kept));
    }
    processed |= Mask{1} << i;
    rays = std::move(next);
  }
  return rays;
}

std::vector<std::size_t> mask_indices(Mask m) {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; m != 0; ++i, m >>= 1) {
    if (m & 1) out.push_back(i);
  }
  return out;
}

}  // namespace

std::vector<ConeFace> cone_faces(const IntMatrix& v, const ConeOptions& opts) {
  const std::size_t n = v.cols();
  const std::size_t m = v.rows();
  if (n > opts.max_generators || n > 64) {
    throw Error(ErrorKind::kSize, std::to_string(n) +
                                      " generators exceed the enumeration bound of " +
                                      std::to_string(std::min<std::size_t>(opts.max_generators, 64)));
  }
  const std::vector<std::size_t> basis_cols = independent_rows(v.transpose());
  const std::size_t d = basis_cols.size();
  if (d > opts.max_dimension) {
    throw Error(ErrorKind::kSize, "cone dimension " + std::to_string(d) +
                                      " exceeds the enumeration bound of " +
                                      std::to_string(opts.max_dimension));
  }

  // Normals live in span(V) = {Q t}; the dual cone restricted there is
  // {t : G t >= 0} with G = V^T Q, which is pointed.
  struct Facet {
    Mask zero;
    IntVector normal;
  };
  std::vector<Facet> facets;
  if (d > 0) {
    const IntMatrix q = v.select_cols(basis_cols);
    const IntMatrix g = v.transpose() * q;
    for (const Ray& r : extreme_rays(g)) {
      IntVector a = q * r.t;
      make_primitive(a);
      Mask z = 0;
      for (std::size_t i = 0; i < n; ++i) {
        BigInt s = 0;
        for (std::size_t j = 0; j < m; ++j) s += a[j] * v(j, i);
        if (s == 0) z |= Mask{1} << i;
      }
      facets.push_back({z, std::move(a)});
    }
  }

  const Mask all = n == 64 ? ~Mask{0} : (Mask{1} << n) - 1;
  std::set<Mask> seen{all};
  std::vector<Mask> queue;
  for (const Facet& f : facets) {
    if (seen.insert(f.zero).second) queue.push_back(f.zero);
  }
  for (std::size_t k = 0; k < queue.size(); ++k) {
    for (const Facet& f : facets) {
      const Mask meet = queue[k] & f.zero;
      if (seen.insert(meet).second) queue.push_back(meet);
    }
  }

  std::vector<ConeFace> faces;
  faces.reserve(seen.size());
  for (const Mask face : seen) {
    ConeFace cf;
    cf.generators = mask_indices(face);
    cf.support.assign(m, BigInt(0));
    for (const Facet& f : facets) {
      if ((f.zero & face) != face) continue;
      for (std::size_t j = 0; j < m; ++j) cf.support[j] += f.normal[j];
    }
    make_primitive(cf.support);
    faces.push_back(std::move(cf));
  }
  std::sort(faces.begin(), faces.end(), [](const ConeFace& x, const ConeFace& y) {
    return x.generators < y.generators;
  });
  return faces;
}

GscResult is_pgsc(const IntMatrix& v, const BigInt& p, const ConeOptions& opts) {
  require_prime(p);
  GscResult out;
  for (const ConeFace& face : cone_faces(v, opts)) {
    if (face.generators.empty()) continue;
    ++out.faces_checked;
    PgssResult r = is_pgss(v.select_cols(face.generators), p);
    if (!r.holds) {
      out.holds = false;
      out.face = face;
      out.pgss = std::move(r);
      return out;
    }
  }
  return out;
}

bool verify_gsc_failure(const IntMatrix& v, const BigInt& p, const ConeFace& face,
                        const BigInt& divisor, const RatVector& y,
                        const RatVector& x) {
  if (face.support.size() != v.rows() || face.generators.empty()) return false;
  std::size_t k = 0;
  for (std::size_t i = 0; i < v.cols(); ++i) {
    BigInt s = 0;
    for (std::size_t j = 0; j < v.rows(); ++j) s += face.support[j] * v(j, i);
    const bool on_face = k < face.generators.size() && face.generators[k] == i;
    if (on_face) ++k;
    if (on_face ? s != 0 : s <= 0) return false;
  }
  if (k != face.generators.size()) return false;
  return verify_pgss_witness(v.select_cols(face.generators), p, divisor, y, x);
}

namespace {

bool next_subset(std::vector<std::size_t>& c, std::size_t n) {
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

bool subdet_class_check(const IntMatrix& a, const BigInt& p, std::size_t max_order) {
  require_prime(p);
  const std::size_t top = std::min(a.rows(), a.cols());
  if (top > max_order) {
    throw Error(ErrorKind::kSize, "minor order " + std::to_string(top) +
                                      " exceeds the bound of " +
                                      std::to_string(max_order));
  }
  for (std::size_t k = 1; k <= top; ++k) {
    std::vector<std::size_t> rows(k);
    std::iota(rows.begin(), rows.end(), 0);
    do {
      const IntMatrix sub = a.select_rows(rows);
      std::vector<std::size_t> cols(k);
      std::iota(cols.begin(), cols.end(), 0);
      do {
        const BigInt det = determinant(sub.select_cols(cols));
        if (det != 0 && !is_power_of(abs(det), p)) return false;
      } while (next_subset(cols, a.cols()));
    } while (next_subset(rows, a.rows()));
  }
  return true;
}

FamilyInstance gss_not_gsc_family(const BigInt& p, unsigned k, std::size_t m) {
  require_prime(p);
  if (k < 3) throw Error(ErrorKind::kArgument, "family requires k >= 3");
  BigInt pk;
  mpz_pow_ui(pk.get_mpz_t(), p.get_mpz_t(), k);
  if (m < 4 || BigInt(static_cast<unsigned long>(m)) > pk) {
    throw Error(ErrorKind::kArgument, "family requires 4 <= m <= p^k");
  }
  if (is_power_of(BigInt(static_cast<unsigned long>(m - 1)), p)) {
    throw Error(ErrorKind::kArgument, "family requires m - 1 not a power of p");
  }
  if (!pk.fits_ulong_p() || pk > 4096) {
    throw Error(ErrorKind::kSize, "p^k too large for a dense instance");
  }
  const std::size_t n = pk.get_ui() + 1;
  FamilyInstance f;
  f.generators = IntMatrix(n, n + m);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) f.generators(i, j) = i == j ? 0 : 1;
  }
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = 0; j < m; ++j) f.generators(i, n + j) = i == j ? 0 : 1;
  }
  f.b.assign(n, BigInt(0));
  for (std::size_t i = 0; i < m; ++i) f.b[i] = 1;
  f.coefficient = make_rational(1, BigInt(static_cast<unsigned long>(m - 1)));
  return f;
}

}  // namespace padic
