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

#include "padic/matrix.hpp"

#include <cctype>
#include <istream>
#include <sstream>

namespace padic {

RatMatrix to_rational(const IntMatrix& m) {
  RatMatrix r(m.rows(), m.cols());
  for (std::size_t i = 0; i < m.rows(); ++i) {
    for (std::size_t j = 0; j < m.cols(); ++j) r(i, j) = m(i, j);
  }
  return r;
}

namespace {

template <typename T>
Matrix<T> multiply(const Matrix<T>& a, const Matrix<T>& b) {
  if (a.cols() != b.rows()) {
    throw Error(ErrorKind::kDimension, "matrix product dimension mismatch");
  }
  Matrix<T> c(a.rows(), b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t k = 0; k < a.cols(); ++k) {
      if (a(i, k) == 0) continue;
      for (std::size_t j = 0; j < b.cols(); ++j) c(i, j) += a(i, k) * b(k, j);
    }
  }
  return c;
}

template <typename R, typename M, typename V>
std::vector<R> apply(const M& a, const V& x) {
  if (a.cols() != x.size()) {
    throw Error(ErrorKind::kDimension, "matrix-vector dimension mismatch");
  }
  std::vector<R> y(a.rows());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t j = 0; j < a.cols(); ++j) {
      if (a(i, j) != 0) y[i] += a(i, j) * x[j];
    }
  }
  return y;
}

}  // namespace

IntMatrix operator*(const IntMatrix& a, const IntMatrix& b) { return multiply(a, b); }
RatMatrix operator*(const RatMatrix& a, const RatMatrix& b) { return multiply(a, b); }
IntVector operator*(const IntMatrix& a, const IntVector& x) {
  return apply<BigInt>(a, x);
}
RatVector operator*(const IntMatrix& a, const RatVector& x) {
  return apply<BigRat>(a, x);
}
RatVector operator*(const RatMatrix& a, const RatVector& x) {
  return apply<BigRat>(a, x);
}

RatVector left_multiply(const RatVector& y, const IntMatrix& a) {
  if (a.rows() != y.size()) {
    throw Error(ErrorKind::kDimension, "vector-matrix dimension mismatch");
  }
  RatVector out(a.cols());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    if (y[i] == 0) continue;
    for (std::size_t j = 0; j < a.cols(); ++j) {
      if (a(i, j) != 0) out[j] += y[i] * a(i, j);
    }
  }
  return out;
}

BigRat dot(const IntVector& a, const RatVector& b) {
  if (a.size() != b.size()) throw Error(ErrorKind::kDimension, "dot size mismatch");
  BigRat s = 0;
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] != 0) s += a[i] * b[i];
  }
  return s;
}

BigRat dot(const RatVector& a, const RatVector& b) {
  if (a.size() != b.size()) throw Error(ErrorKind::kDimension, "dot size mismatch");
  BigRat s = 0;
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

BigInt dot(const IntVector& a, const IntVector& b) {
  if (a.size() != b.size()) throw Error(ErrorKind::kDimension, "dot size mismatch");
  BigInt s = 0;
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

IntMatrix vstack(const IntMatrix& a, const IntMatrix& b) {
  if (a.rows() > 0 && b.rows() > 0 && a.cols() != b.cols()) {
    throw Error(ErrorKind::kDimension, "vstack column mismatch");
  }
  const std::size_t cols = a.rows() > 0 ? a.cols() : b.cols();
  IntMatrix m(a.rows() + b.rows(), cols);
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t j = 0; j < cols; ++j) m(i, j) = a(i, j);
  }
  for (std::size_t i = 0; i < b.rows(); ++i) {
    for (std::size_t j = 0; j < cols; ++j) m(a.rows() + i, j) = b(i, j);
  }
  return m;
}

IntMatrix negate(const IntMatrix& a) {
  IntMatrix m(a.rows(), a.cols());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t j = 0; j < a.cols(); ++j) m(i, j) = -a(i, j);
  }
  return m;
}

BigInt determinant(const IntMatrix& input) {
  if (input.rows() != input.cols()) {
    throw Error(ErrorKind::kDimension, "determinant of non-square matrix");
  }
  const std::size_t n = input.rows();
  if (n == 0) return 1;
  IntMatrix a = input;
  int sign = 1;
  BigInt prev = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (a(k, k) == 0) {
      std::size_t i = k + 1;
      while (i < n && a(i, k) == 0) ++i;
      if (i == n) return 0;
      a.swap_rows(i, k);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        BigInt t = a(i, j) * a(k, k) - a(i, k) * a(k, j);
        mpz_divexact(a(i, j).get_mpz_t(), t.get_mpz_t(), prev.get_mpz_t());
      }
      a(i, k) = 0;
    }
    prev = a(k, k);
  }
  return sign < 0 ? BigInt(-a(n - 1, n - 1)) : a(n - 1, n - 1);
}

std::size_t rank(const IntMatrix& input) {
  IntMatrix a = input;
  std::size_t r = 0;
  BigInt prev = 1;
  for (std::size_t c = 0; c < a.cols() && r < a.rows(); ++c) {
    std::size_t piv = r;
    while (piv < a.rows() && a(piv, c) == 0) ++piv;
    if (piv == a.rows()) continue;
    a.swap_rows(piv, r);
    for (std::size_t i = r + 1; i < a.rows(); ++i) {
      for (std::size_t j = c + 1; j < a.cols(); ++j) {
        BigInt t = a(i, j) * a(r, c) - a(i, c) * a(r, j);
        mpz_divexact(a(i, j).get_mpz_t(), t.get_mpz_t(), prev.get_mpz_t());
      }
      a(i, c) = 0;
    }
    prev = a(r, c);
    ++r;
  }
  return r;
}

namespace {

// Reduced row echelon form in place; returns pivot columns.
std::vector<std::size_t> rref(RatMatrix& a, std::size_t ncols) {
  std::vector<std::size_t> pivots;
  std::size_t r = 0;
  for (std::size_t c = 0; c < ncols && r < a.rows(); ++c) {
    std::size_t piv = r;
    while (piv < a.rows() && a(piv, c) == 0) ++piv;
    if (piv == a.rows()) continue;
    a.swap_rows(piv, r);
    const BigRat inv = 1 / a(r, c);
    for (std::size_t j = c; j < a.cols(); ++j) a(r, j) *= inv;
    for (std::size_t i = 0; i < a.rows(); ++i) {
      if (i == r || a(i, c) == 0) continue;
      const BigRat f = a(i, c);
      for (std::size_t j = c; j < a.cols(); ++j) a(i, j) -= f * a(r, j);
    }
    pivots.push_back(c);
    ++r;
  }
  return pivots;
}

}  // namespace

std::size_t rank(const RatMatrix& input) {
  RatMatrix a = input;
  return rref(a, a.cols()).size();
}

std::optional<RatVector> solve_rational(const RatMatrix& m, const RatVector& rhs) {
  if (m.rows() != rhs.size()) {
    throw Error(ErrorKind::kDimension, "solve_rational dimension mismatch");
  }
  RatMatrix aug(m.rows(), m.cols() + 1);
  for (std::size_t i = 0; i < m.rows(); ++i) {
    for (std::size_t j = 0; j < m.cols(); ++j) aug(i, j) = m(i, j);
    aug(i, m.cols()) = rhs[i];
  }
  const std::vector<std::size_t> pivots = rref(aug, m.cols());
  for (std::size_t i = pivots.size(); i < aug.rows(); ++i) {
    if (aug(i, m.cols()) != 0) return std::nullopt;
  }
  RatVector x(m.cols());
  for (std::size_t k = 0; k < pivots.size(); ++k) x[pivots[k]] = aug(k, m.cols());
  return x;
}

// ---------------------------------------------------------------------------
// Text format

namespace {

struct Token {
  std::string text;
  std::size_t column;
};

std::vector<Token> tokenize(const std::string& line) {
  std::vector<Token> out;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && std::isspace(static_cast<unsigned char>(line[i]))) ++i;
    if (i == line.size() || line[i] == '#') break;
    const std::size_t start = i;
    while (i < line.size() && !std::isspace(static_cast<unsigned char>(line[i]))) ++i;
    out.push_back({line.substr(start, i - start), start + 1});
  }
  return out;
}

// Next line with at least one token; comment-only and blank lines are skipped.
bool next_tokens(std::istream& in, std::size_t& line_no, std::vector<Token>& tokens) {
  std::string line;
  while (std::getline(in, line)) {
    ++line_no;
    tokens = tokenize(line);
    if (!tokens.empty()) return true;
  }
  return false;
}

BigInt token_integer(const Token& t, std::size_t line_no) {
  std::string s = t.text;
  // Accept the unicode minus sign some documents use.
  if (s.rfind("\xE2\x88\x92", 0) == 0) s = "-" + s.substr(3);
  try {
    return parse_integer(s);
  } catch (const ParseError&) {
    throw ParseError(line_no, t.column, "expected an integer, got '" + t.text + "'");
  }
}

std::size_t token_count(const Token& t, std::size_t line_no) {
  BigInt v = token_integer(t, line_no);
  if (v < 0 || !v.fits_ulong_p()) {
    throw ParseError(line_no, t.column, "expected a nonnegative dimension");
  }
  return v.get_ui();
}

}  // namespace

MatrixText read_matrix_text(std::istream& in, std::size_t& line_no) {
  std::vector<Token> tokens;
  if (!next_tokens(in, line_no, tokens)) {
    throw ParseError(line_no + 1, 1, "missing matrix header 'm n'");
  }
  if (tokens.size() < 2 || tokens.size() > 3) {
    throw ParseError(line_no, 1, "matrix header must be 'm n' or 'm n rows|cols'");
  }
  MatrixText out;
  const std::size_t m = token_count(tokens[0], line_no);
  const std::size_t n = token_count(tokens[1], line_no);
  if (tokens.size() == 3) {
    if (tokens[2].text != "rows" && tokens[2].text != "cols") {
      throw ParseError(line_no, tokens[2].column, "orientation must be 'rows' or 'cols'");
    }
    out.orientation = tokens[2].text;
  }
  out.matrix = IntMatrix(m, n);
  for (std::size_t i = 0; i < m; ++i) {
    if (n == 0) break;
    if (!next_tokens(in, line_no, tokens)) {
      throw ParseError(line_no + 1, 1,
                       "expected " + std::to_string(m) + " matrix rows, got " +
                           std::to_string(i));
    }
    if (tokens.size() != n) {
      const std::size_t col = tokens.size() > n ? tokens[n].column : 1;
      throw ParseError(line_no, col,
                       "expected " + std::to_string(n) + " entries, got " +
                           std::to_string(tokens.size()));
    }
    for (std::size_t j = 0; j < n; ++j) out.matrix(i, j) = token_integer(tokens[j], line_no);
  }
  return out;
}

IntVector read_integer_line(std::istream& in, std::size_t& line_no,
                            std::size_t expected, const char* what) {
  std::vector<Token> tokens;
  if (expected == 0) return {};
  if (!next_tokens(in, line_no, tokens)) {
    throw ParseError(line_no + 1, 1, std::string("missing ") + what + " line");
  }
  if (tokens.size() != expected) {
    throw ParseError(line_no, 1,
                     std::string(what) + ": expected " + std::to_string(expected) +
                         " entries, got " + std::to_string(tokens.size()));
  }
  IntVector v;
  v.reserve(expected);
  for (const Token& t : tokens) v.push_back(token_integer(t, line_no));
  return v;
}

IntMatrix parse_matrix(const std::string& text) {
  std::istringstream in(text);
  std::size_t line_no = 0;
  return read_matrix_text(in, line_no).matrix;
}

template <typename T>
static std::string format_any(const Matrix<T>& m) {
  std::ostringstream os;
  os << m.rows() << ' ' << m.cols() << '\n';
  for (std::size_t i = 0; i < m.rows(); ++i) {
    for (std::size_t j = 0; j < m.cols(); ++j) {
      if (j) os << ' ';
      os << to_string(m(i, j));
    }
    os << '\n';
  }
  return os.str();
}

std::string format_matrix(const IntMatrix& m) { return format_any(m); }
std::string format_matrix(const RatMatrix& m) { return format_any(m); }

std::string format_vector(const IntVector& v) {
  std::string s;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) s += ' ';
    s += v[i].get_str();
  }
  return s;
}

std::string format_vector(const RatVector& v) {
  std::string s;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) s += ' ';
    s += to_string(v[i]);
  }
  return s;
}

}  // namespace padic
